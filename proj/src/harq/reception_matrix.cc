#include "gcsim/harq/reception_matrix.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gcsim::harq {

ReceptionMatrix::ReceptionMatrix(int group, std::vector<int> ues, std::vector<ReceptionRow> rows)
    : group_(group), ues_(std::move(ues)), rows_(std::move(rows)) {
  std::sort(ues_.begin(), ues_.end());
  ues_.erase(std::unique(ues_.begin(), ues_.end()), ues_.end());
  for (ReceptionRow& r : rows_) {
    std::sort(r.nack.begin(), r.nack.end());
    r.nack.erase(std::unique(r.nack.begin(), r.nack.end()), r.nack.end());
    for (int ue : r.nack) {
      if (!std::binary_search(ues_.begin(), ues_.end(), ue)) {
        throw std::invalid_argument("reception matrix: UE " + std::to_string(ue) +
                                    " of process " + std::to_string(r.process_id) +
                                    " is not a group member");
      }
    }
  }
  std::stable_sort(rows_.begin(), rows_.end(), [](const ReceptionRow& a, const ReceptionRow& b) {
    return a.birth != b.birth ? a.birth < b.birth : a.process_id < b.process_id;
  });
  for (std::size_t i = 1; i < rows_.size(); ++i) {
    if (rows_[i].process_id == rows_[i - 1].process_id) {
      throw std::invalid_argument("reception matrix: duplicate process " +
                                  std::to_string(rows_[i].process_id));
    }
  }
}

bool ReceptionMatrix::nack(std::size_t row, int ue) const {
  const auto& n = rows_.at(row).nack;
  return std::binary_search(n.begin(), n.end(), ue);
}

const ReceptionRow& ReceptionMatrix::row_for_process(int process_id) const {
  for (const ReceptionRow& r : rows_) {
    if (r.process_id == process_id) return r;
  }
  throw std::out_of_range("no row for process " + std::to_string(process_id));
}

ReceptionMatrix build_reception_matrix(std::span<const HarqProcess* const> pending,
                                       std::span<const int> group_ues) {
  std::vector<ReceptionRow> rows;
  rows.reserve(pending.size());
  int group = pending.empty() ? 0 : pending.front()->group();
  for (const HarqProcess* p : pending) {
    if (p->group() != group) {
      throw std::invalid_argument("build_reception_matrix: processes " +
                                  std::to_string(pending.front()->id()) + " and " +
                                  std::to_string(p->id()) + " belong to different groups");
    }
    rows.push_back(ReceptionRow{p->id(), p->tb().id, p->tb().size_bytes(), p->birth(),
                                p->nack_set()});
  }
  return ReceptionMatrix(group, std::vector<int>(group_ues.begin(), group_ues.end()),
                         std::move(rows));
}

}  // namespace gcsim::harq
