#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gcsim/harq/harq.h"
#include "gcsim/harq/reception_matrix.h"
#include "gcsim/radio/propagation.h"
#include "gcsim/rng.h"

using namespace gcsim;
using namespace gcsim::harq;

namespace {

const radio::McsTable& table() {
  static const auto t = radio::McsTable::default_table();
  return t;
}

TransportBlock tb(int id, int group = 0, int bytes = 40) {
  return make_tb(id, group, std::vector<std::uint8_t>(static_cast<std::size_t>(bytes), 0x5A));
}

LinkMap uniform_links(const std::vector<int>& ues, double db) {
  LinkMap m;
  for (int ue : ues) m.emplace(ue, radio::LinkQuality::from_db(db, radio::ReceptionMode::kUnicast));
  return m;
}

std::vector<int> iota_ues(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// A draw source that always returns the same value.
DrawSource constant(double u) {
  return [u](int) { return u; };
}

}  // namespace

TEST_CASE("transport blocks") {
  CHECK(tb(1, 0, 40).size_bits() == 320);
  CHECK_THROWS_AS(make_tb(1, 0, {}), std::invalid_argument);
}

TEST_CASE("start_process") {
  const int one[] = {7};
  auto p = start_process(1, tb(1), 0, one);
  CHECK(p.nack_set().size() == 1);
  CHECK(p.tx_count() == 0);
  CHECK(p.status() == ProcessStatus::kActive);
  CHECK(p.accumulated_sinr(7) == 0.0);
  CHECK_FALSE(needs_retransmission(p));

  const auto many = iota_ues(500);
  CHECK(start_process(2, tb(2), 0, many).nack_set().size() == 500);

  const int dup[] = {3, 1, 3, 2, 1};
  const auto d = start_process(3, tb(3), 0, dup);
  CHECK(d.targets() == std::vector<int>{1, 2, 3});
  CHECK(d.nack_set() == std::vector<int>{1, 2, 3});

  CHECK_THROWS_AS(start_process(4, tb(4), 0, std::span<const int>()), std::invalid_argument);
  CHECK_THROWS_AS(d.accumulated_sinr(99), std::out_of_range);
}

TEST_CASE("chase combining doubles the accumulated SINR") {
  const int ue[] = {0};
  auto p = start_process(1, tb(1), 7, ue);
  const auto links = uniform_links({0}, 0.0);
  transmit_round(p, links, constant(0.999999), table(), radio::BlerCurve());
  REQUIRE(p.status() == ProcessStatus::kActive);
  const double one = p.accumulated_sinr(0);
  transmit_round(p, links, constant(0.999999), table(), radio::BlerCurve());
  CHECK(p.accumulated_sinr(0) == doctest::Approx(2 * one));
  CHECK(radio::linear_to_db(p.accumulated_sinr(0)) - radio::linear_to_db(one) ==
        doctest::Approx(3.0103).epsilon(1e-4));
}

TEST_CASE("high SINR decodes, cap fails, terminal processes reject rounds") {
  const auto ues = iota_ues(4);
  auto good = start_process(1, tb(1), 0, ues);
  const auto strong = uniform_links(ues, table().at(0).sinr_threshold_db + 30);
  // success probability > 1 - 1e-6, so a draw of 0.999 always decodes
  const auto fb = transmit_round(good, strong, constant(0.999), table(), radio::BlerCurve());
  CHECK(fb.size() == 4);
  for (const auto& f : fb) CHECK(f.ack);
  CHECK(good.status() == ProcessStatus::kDone);
  CHECK_FALSE(needs_retransmission(good));
  CHECK_THROWS_AS(transmit_round(good, strong, constant(0.5), table(), radio::BlerCurve()),
                  std::logic_error);

  auto bad = start_process(2, tb(2), 7, ues, 3);
  const auto weak = uniform_links(ues, -20);
  for (int round = 0; round < 4; ++round) {
    CHECK(bad.status() == ProcessStatus::kActive);
    transmit_round(bad, weak, constant(0.999), table(), radio::BlerCurve());
    CHECK(bad.tx_count() == round + 1);
  }
  CHECK(bad.status() == ProcessStatus::kFailed);
  CHECK(bad.tx_count() == 4);
  CHECK_FALSE(needs_retransmission(bad));
  CHECK_THROWS_AS(transmit_round(bad, weak, constant(0.0), table(), radio::BlerCurve()),
                  std::logic_error);
}

TEST_CASE("one NACK among twelve forces a retransmission") {
  const auto ues = iota_ues(12);
  auto p = start_process(1, tb(1), 0, ues);
  auto links = uniform_links(ues, 30);
  links.at(5) = radio::LinkQuality::from_db(-30, radio::ReceptionMode::kUnicast);
  transmit_round(p, links, constant(0.5), table(), radio::BlerCurve());
  CHECK(p.nack_set() == std::vector<int>{5});
  CHECK(needs_retransmission(p));
}

TEST_CASE("NACK frequency at the calibration anchors") {
  const int n = 100000;
  for (double offset : {0.0, 2.0}) {
    const double expect = offset == 0.0 ? 0.10 : 0.01;
    Rng rng(1234 + static_cast<std::uint64_t>(offset));
    const int ue[] = {0};
    const auto links = uniform_links({0}, table().at(3).sinr_threshold_db + offset);
    int nacks = 0;
    for (int k = 0; k < n; ++k) {
      auto p = start_process(k, tb(k), 3, ue);
      const auto fb = transmit_round(p, links, rng, table(), radio::BlerCurve());
      if (!fb[0].ack) ++nacks;
    }
    const double freq = static_cast<double>(nacks) / n;
    const double sigma = std::sqrt(expect * (1 - expect) / n);
    CHECK(std::abs(freq - expect) <= 3 * sigma);
    if (offset == 0.0) CHECK(std::abs(freq - 0.10) <= 0.005);
  }
}

TEST_CASE("chase combining: decode probability by round k is nondecreasing and matches the product form") {
  const int n = 100000;
  const int mcs = 4;
  const double round_db = table().at(mcs).sinr_threshold_db - 2.0;
  const int ue[] = {0};
  const auto links = uniform_links({0}, round_db);
  std::vector<int> decoded_by(4, 0);
  Rng rng(77);
  for (int k = 0; k < n; ++k) {
    auto p = start_process(k, tb(k), mcs, ue, 3);
    for (int r = 0; r < 4 && p.status() == ProcessStatus::kActive; ++r) {
      transmit_round(p, links, rng, table(), radio::BlerCurve());
      if (p.status() == ProcessStatus::kDone) {
        for (int j = r; j < 4; ++j) ++decoded_by[static_cast<std::size_t>(j)];
      }
    }
  }
  // Oracle: after j rounds the UE holds j * s linear, so
  // P(still failing after k) = prod_{j<=k} BLER(10 log10(j * s)).
  const double s = radio::db_to_linear(round_db);
  double fail = 1.0;
  double prev = 0.0;
  for (int k = 0; k < 4; ++k) {
    fail *= radio::bler(mcs, radio::linear_to_db((k + 1) * s), table());
    const double expect = 1.0 - fail;
    const double got = static_cast<double>(decoded_by[static_cast<std::size_t>(k)]) / n;
    const double sigma = std::sqrt(expect * (1 - expect) / n);
    CHECK(std::abs(got - expect) <= 3 * sigma + 1e-12);
    CHECK(got + 3 * sigma >= prev);
    CHECK(expect > prev);
    prev = got;
  }
}

TEST_CASE("residual loss under feasible 1% MCS with three retransmissions") {
  Rng rng(2024);
  const radio::BlerCurve curve;
  long long pairs = 0, lost = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    const auto ues = iota_ues(8);
    LinkMap links;
    std::vector<radio::LinkQuality> qs;
    for (int ue : ues) {
      const double db = -2.0 + 25.0 * uniform01(rng);
      const auto q = radio::LinkQuality::from_db(db, radio::ReceptionMode::kUnicast);
      links.emplace(ue, q);
      qs.push_back(q);
    }
    const auto choice = radio::select_mcs(qs, table(), 0.01, curve);
    REQUIRE(choice.feasible);
    auto p = start_process(trial, tb(trial), choice.mcs, ues, 3);
    while (p.status() == ProcessStatus::kActive) transmit_round(p, links, rng, table(), curve);
    pairs += 8;
    lost += static_cast<long long>(p.nack_set().size());
  }
  CHECK(static_cast<double>(lost) / static_cast<double>(pairs) <= 1e-3);
}

TEST_CASE("process invariants over random rounds") {
  Rng rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto ues = iota_ues(1 + static_cast<int>(rng() % 10));
    LinkMap links;
    for (int ue : ues) {
      links.emplace(ue, radio::LinkQuality::from_db(-10 + 30 * uniform01(rng),
                                                    radio::ReceptionMode::kUnicast));
    }
    const int max_retx = static_cast<int>(rng() % 4);
    auto p = start_process(trial, tb(trial), static_cast<int>(rng() % 8), ues, max_retx);
    std::vector<double> acc(ues.size(), 0.0);
    auto prev_nack = p.nack_set();
    while (p.status() == ProcessStatus::kActive) {
      const auto fb = transmit_round(p, links, rng, table(), radio::BlerCurve());
      CHECK(fb.size() == prev_nack.size());
      for (int ue : p.nack_set()) {
        CHECK(std::binary_search(prev_nack.begin(), prev_nack.end(), ue));
      }
      for (std::size_t i = 0; i < ues.size(); ++i) {
        CHECK(p.accumulated_sinr(ues[i]) >= acc[i]);
        acc[i] = p.accumulated_sinr(ues[i]);
      }
      CHECK(p.tx_count() <= 1 + max_retx);
      prev_nack = p.nack_set();
    }
    CHECK((p.status() == ProcessStatus::kDone) == p.nack_set().empty());
  }
}

TEST_CASE("MCS override evaluates the round at another threshold") {
  const int ue[] = {0};
  const auto links = uniform_links({0}, table().at(0).sinr_threshold_db);
  // u = 0.5: decodes at MCS 0 (success 0.9), not at MCS 7.
  auto a = start_process(1, tb(1), 0, ue);
  transmit_round(a, links, constant(0.5), table(), radio::BlerCurve(), 7);
  CHECK(a.nack_set().size() == 1);
  auto b = start_process(2, tb(2), 0, ue);
  transmit_round(b, links, constant(0.5), table(), radio::BlerCurve());
  CHECK(b.nack_set().empty());
}

TEST_CASE("reception matrix: two-process example") {
  const int ues[] = {1, 2, 3};
  auto p1 = start_process(1, tb(101), 0, ues, 3, 0);
  auto p4 = start_process(4, tb(104), 0, ues, 3, 3);
  LinkMap links = uniform_links({1, 2, 3}, 30);
  // UE 3 misses process 1, UE 2 misses process 4.
  auto draw_missing = [](int miss) { return DrawSource([miss](int ue) { return ue == miss ? 1.0 : 0.0; }); };
  transmit_round(p1, links, draw_missing(3), table(), radio::BlerCurve());
  transmit_round(p4, links, draw_missing(2), table(), radio::BlerCurve());
  REQUIRE(p1.nack_set() == std::vector<int>{3});
  REQUIRE(p4.nack_set() == std::vector<int>{2});

  const HarqProcess* pending[] = {&p4, &p1};
  const auto m = build_reception_matrix(pending, ues);
  CHECK(m.row_count() == 2);
  CHECK(m.ues().size() == 3);
  CHECK(m.rows()[0].process_id == 1);  // oldest first
  CHECK(m.rows()[1].process_id == 4);
  CHECK(m.nack(0, 3));
  CHECK_FALSE(m.nack(0, 1));
  CHECK_FALSE(m.nack(0, 2));
  CHECK(m.nack(1, 2));
  CHECK_FALSE(m.nack(1, 3));
  CHECK(m.row_for_process(4).nack == p4.nack_set());
  CHECK(m.row_for_process(1).tb_id == 101);

  CHECK(build_reception_matrix(std::span<const HarqProcess* const>(), ues).empty());

  auto other = start_process(9, tb(109, 1), 0, ues);
  const HarqProcess* mixed[] = {&p1, &other};
  CHECK_THROWS_AS(build_reception_matrix(mixed, ues), std::invalid_argument);
}

TEST_CASE("reception matrix mirrors process NACK sets") {
  Rng rng(8);
  const auto ues = iota_ues(10);
  std::vector<HarqProcess> procs;
  for (int k = 0; k < 8; ++k) {
    procs.push_back(start_process(k, tb(k), 3, ues, 3, static_cast<std::int64_t>(rng() % 50)));
    LinkMap links;
    for (int ue : ues) links.emplace(ue, radio::LinkQuality::from_db(-5 + 20 * uniform01(rng), radio::ReceptionMode::kUnicast));
    transmit_round(procs.back(), links, rng, table(), radio::BlerCurve());
  }
  std::vector<const HarqProcess*> ptrs;
  for (const auto& p : procs) ptrs.push_back(&p);
  const auto m = build_reception_matrix(ptrs, ues);
  for (std::size_t r = 0; r < m.row_count(); ++r) {
    const auto& p = procs[static_cast<std::size_t>(m.rows()[r].process_id)];
    CHECK(m.rows()[r].nack == p.nack_set());
    for (int ue : ues) CHECK(m.nack(r, ue) == p.in_nack_set(ue));
    if (r > 0) CHECK(m.rows()[r - 1].birth <= m.rows()[r].birth);
  }
}
