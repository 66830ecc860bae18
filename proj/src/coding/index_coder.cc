#include "gcsim/coding/index_coder.h"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

namespace gcsim::coding {

namespace {

bool intersects(const std::vector<int>& a, const std::vector<int>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

}  // namespace

ConflictGraph::ConflictGraph(std::vector<int> process_ids)
    : vertices_(std::move(process_ids)), n_(vertices_.size()), adj_(n_ * n_, 0) {}

void ConflictGraph::add_edge(std::size_t a, std::size_t b) {
  if (a == b) throw std::invalid_argument("conflict graph: self edge");
  if (!adjacent(a, b)) ++edges_;
  adj_[a * n_ + b] = 1;
  adj_[b * n_ + a] = 1;
}

std::vector<std::pair<int, int>> ConflictGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = a + 1; b < n_; ++b) {
      if (adjacent(a, b)) out.emplace_back(vertices_[a], vertices_[b]);
    }
  }
  return out;
}

ConflictGraph build_conflict_graph(const harq::ReceptionMatrix& matrix) {
  std::vector<int> ids;
  ids.reserve(matrix.row_count());
  for (const auto& row : matrix.rows()) {
    if (row.nack.empty()) {
      throw std::invalid_argument("conflict graph: process " + std::to_string(row.process_id) +
                                  " has no NACK and is not pending");
    }
    ids.push_back(row.process_id);
  }
  ConflictGraph g(std::move(ids));
  const auto& rows = matrix.rows();
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      if (intersects(rows[a].nack, rows[b].nack)) g.add_edge(a, b);
    }
  }
  return g;
}

std::vector<CombinationPlan> plan_combinations(const harq::ReceptionMatrix& matrix, int max_m) {
  if (max_m < 1) throw std::invalid_argument("plan_combinations: max_m must be >= 1");
  const ConflictGraph graph = build_conflict_graph(matrix);
  const auto& rows = matrix.rows();

  std::vector<std::vector<std::size_t>> members;  // row indices per plan
  for (std::size_t r = 0; r < rows.size(); ++r) {
    bool placed = false;
    for (auto& plan : members) {
      if (static_cast<int>(plan.size()) >= max_m) continue;
      const bool clash = std::any_of(plan.begin(), plan.end(),
                                     [&](std::size_t other) { return graph.adjacent(r, other); });
      if (!clash) {
        plan.push_back(r);
        placed = true;
        break;
      }
    }
    if (!placed) members.push_back({r});
  }

  std::vector<CombinationPlan> plans;
  plans.reserve(members.size());
  for (const auto& idx : members) {
    CombinationPlan p;
    for (std::size_t r : idx) {
      p.process_ids.push_back(rows[r].process_id);
      p.coded_bytes = std::max(p.coded_bytes, rows[r].tb_bytes);
      p.union_nack.insert(p.union_nack.end(), rows[r].nack.begin(), rows[r].nack.end());
    }
    std::sort(p.process_ids.begin(), p.process_ids.end());
    std::sort(p.union_nack.begin(), p.union_nack.end());
    plans.push_back(std::move(p));
  }
  return plans;
}

bool nack_sets_disjoint(const CombinationPlan& plan, const harq::ReceptionMatrix& matrix) {
  for (std::size_t i = 0; i < plan.process_ids.size(); ++i) {
    for (std::size_t j = i + 1; j < plan.process_ids.size(); ++j) {
      if (intersects(matrix.row_for_process(plan.process_ids[i]).nack,
                     matrix.row_for_process(plan.process_ids[j]).nack)) {
        return false;
      }
    }
  }
  return true;
}

bool structurally_decodable(const CombinationPlan& plan, const harq::ReceptionMatrix& matrix) {
  for (int ue : plan.union_nack) {
    int missing = 0;
    for (int pid : plan.process_ids) {
      const auto& nack = matrix.row_for_process(pid).nack;
      if (std::binary_search(nack.begin(), nack.end(), ue)) ++missing;
    }
    if (missing != 1) return false;
  }
  return true;
}

bool is_partition(const std::vector<CombinationPlan>& plans, const harq::ReceptionMatrix& matrix) {
  std::vector<int> covered;
  for (const auto& p : plans) covered.insert(covered.end(), p.process_ids.begin(), p.process_ids.end());
  std::sort(covered.begin(), covered.end());
  std::vector<int> expected;
  for (const auto& r : matrix.rows()) expected.push_back(r.process_id);
  std::sort(expected.begin(), expected.end());
  return covered == expected;
}

}  // namespace gcsim::coding
