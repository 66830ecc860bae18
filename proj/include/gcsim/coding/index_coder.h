#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gcsim/harq/reception_matrix.h"

namespace gcsim::coding {

// Vertices are pending HARQ processes (in matrix row order); an edge joins
// two processes whose NACK sets share a UE. Any independent set can be sent
// as one XOR-coded retransmission.
class ConflictGraph {
 public:
  explicit ConflictGraph(std::vector<int> process_ids);

  const std::vector<int>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool adjacent(std::size_t a, std::size_t b) const { return adj_[a * n_ + b] != 0; }
  void add_edge(std::size_t a, std::size_t b);
  std::size_t edge_count() const { return edges_; }
  // Edges as (process id, process id), smaller row index first.
  std::vector<std::pair<int, int>> edges() const;

 private:
  std::vector<int> vertices_;
  std::size_t n_;
  std::vector<char> adj_;
  std::size_t edges_ = 0;
};

// Requires every row to have a nonempty NACK set.
ConflictGraph build_conflict_graph(const harq::ReceptionMatrix& matrix);

// A set of pending processes retransmitted together.
struct CombinationPlan {
  std::vector<int> process_ids;  // ascending
  int coded_bytes = 0;           // longest component
  std::vector<int> union_nack;   // sorted

  std::size_t m() const { return process_ids.size(); }
};

inline constexpr int kDefaultMaxM = 4;

// Greedy first-fit: rows are visited oldest first and each joins the first
// existing plan it does not conflict with and that still has room (m <
// max_m); otherwise it opens a new plan. Plans come back in opening order.
std::vector<CombinationPlan> plan_combinations(const harq::ReceptionMatrix& matrix,
                                               int max_m = kDefaultMaxM);

bool nack_sets_disjoint(const CombinationPlan& plan, const harq::ReceptionMatrix& matrix);

// Every UE in the plan's union NACK set misses exactly one component, so it
// holds the other m-1 as side information and can strip them off the XOR.
bool structurally_decodable(const CombinationPlan& plan, const harq::ReceptionMatrix& matrix);

// Plans cover every row of the matrix exactly once.
bool is_partition(const std::vector<CombinationPlan>& plans, const harq::ReceptionMatrix& matrix);

}  // namespace gcsim::coding
