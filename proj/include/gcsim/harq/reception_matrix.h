#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gcsim/harq/harq.h"

namespace gcsim::harq {

struct ReceptionRow {
  int process_id = 0;
  int tb_id = 0;
  int tb_bytes = 0;
  std::int64_t birth = 0;
  std::vector<int> nack;  // sorted UE ids
};

// ACK/NACK status of the pending processes of one group. Rows are ordered
// oldest first (birth, then process id); columns are the group's UEs.
class ReceptionMatrix {
 public:
  ReceptionMatrix() = default;
  // Validates that every NACK UE is a column and process ids are distinct;
  // sorts rows oldest first.
  ReceptionMatrix(int group, std::vector<int> ues, std::vector<ReceptionRow> rows);

  int group() const { return group_; }
  const std::vector<int>& ues() const { return ues_; }
  const std::vector<ReceptionRow>& rows() const { return rows_; }
  std::size_t row_count() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  bool nack(std::size_t row, int ue) const;
  const ReceptionRow& row_for_process(int process_id) const;

 private:
  int group_ = 0;
  std::vector<int> ues_;
  std::vector<ReceptionRow> rows_;
};

// Snapshot of pending processes. All processes must belong to one group.
ReceptionMatrix build_reception_matrix(std::span<const HarqProcess* const> pending,
                                       std::span<const int> group_ues);

}  // namespace gcsim::harq
