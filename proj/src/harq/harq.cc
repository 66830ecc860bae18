#include "gcsim/harq/harq.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gcsim::harq {

TransportBlock make_tb(int id, int group, std::vector<std::uint8_t> payload) {
  if (payload.empty()) throw std::invalid_argument("transport block payload is empty");
  return TransportBlock{id, group, std::move(payload)};
}

std::string_view to_string(ProcessStatus s) {
  switch (s) {
    case ProcessStatus::kActive: return "active";
    case ProcessStatus::kDone: return "done";
    case ProcessStatus::kFailed: return "failed";
  }
  return "?";
}

bool HarqProcess::in_nack_set(int ue) const {
  return std::binary_search(nack_set_.begin(), nack_set_.end(), ue);
}

double HarqProcess::accumulated_sinr(int ue) const {
  auto it = std::lower_bound(targets_.begin(), targets_.end(), ue);
  if (it == targets_.end() || *it != ue) {
    throw std::out_of_range("UE " + std::to_string(ue) + " is not a target of process " +
                            std::to_string(id_));
  }
  return acc_sinr_[static_cast<std::size_t>(it - targets_.begin())];
}

HarqProcess start_process(int id, TransportBlock tb, int mcs, std::span<const int> targets,
                          int max_retx, std::int64_t birth) {
  if (targets.empty()) throw std::invalid_argument("start_process: empty target set");
  if (max_retx < 0) throw std::invalid_argument("start_process: max_retx must be >= 0");
  HarqProcess p;
  p.id_ = id;
  p.tb_ = std::move(tb);
  p.mcs_ = mcs;
  p.max_retx_ = max_retx;
  p.birth_ = birth;
  p.targets_.assign(targets.begin(), targets.end());
  std::sort(p.targets_.begin(), p.targets_.end());
  p.targets_.erase(std::unique(p.targets_.begin(), p.targets_.end()), p.targets_.end());
  p.nack_set_ = p.targets_;
  p.acc_sinr_.assign(p.targets_.size(), 0.0);
  return p;
}

std::vector<UeFeedback> transmit_round(HarqProcess& proc, const LinkMap& links,
                                       const DrawSource& draw, const radio::McsTable& table,
                                       const radio::BlerCurve& curve,
                                       std::optional<int> mcs_override) {
  if (proc.status_ != ProcessStatus::kActive) {
    throw std::logic_error("transmit_round: process " + std::to_string(proc.id_) + " is " +
                           std::string(to_string(proc.status_)));
  }
  const double threshold = table.at(mcs_override.value_or(proc.mcs_)).sinr_threshold_db;
  std::vector<UeFeedback> feedback;
  feedback.reserve(proc.nack_set_.size());
  std::vector<int> still_nack;
  for (int ue : proc.nack_set_) {
    const auto idx = static_cast<std::size_t>(
        std::lower_bound(proc.targets_.begin(), proc.targets_.end(), ue) - proc.targets_.begin());
    double& acc = proc.acc_sinr_[idx];
    acc += links.at(ue).sinr_linear();
    const bool ack = draw(ue) < curve.success_probability(radio::linear_to_db(acc), threshold);
    feedback.push_back(UeFeedback{ue, ack});
    if (!ack) still_nack.push_back(ue);
  }
  proc.nack_set_ = std::move(still_nack);
  ++proc.tx_count_;
  if (proc.nack_set_.empty()) {
    proc.status_ = ProcessStatus::kDone;
  } else if (proc.tx_count_ >= 1 + proc.max_retx_) {
    proc.status_ = ProcessStatus::kFailed;
  }
  return feedback;
}

std::vector<UeFeedback> transmit_round(HarqProcess& proc, const LinkMap& links, Rng& rng,
                                       const radio::McsTable& table,
                                       const radio::BlerCurve& curve,
                                       std::optional<int> mcs_override) {
  return transmit_round(
      proc, links, [&rng](int) { return uniform01(rng); }, table, curve, mcs_override);
}

bool needs_retransmission(const HarqProcess& proc) {
  return proc.status() == ProcessStatus::kActive && proc.tx_count() >= 1 &&
         !proc.nack_set().empty();
}

}  // namespace gcsim::harq
