#include "gcsim/frame/ledger.h"

#include <fstream>
#include <string>

namespace gcsim::frame {

ResourceLedger::ResourceLedger(FrameConfig cfg, bool keep_history)
    : cfg_(std::move(cfg)), keep_history_(keep_history) {
  cfg_.validate();
}

bool ResourceLedger::can_schedule(std::int64_t subframe, ChannelKind kind) const {
  return cfg_.is_mbsfn(subframe) == (kind == ChannelKind::kPmch);
}

Allocation ResourceLedger::allocate(std::int64_t subframe, int prb_count, ChannelKind kind,
                                    RntiKind rnti_kind, int group) {
  if (prb_count < 1) throw std::invalid_argument("allocate: prb_count must be >= 1");
  if (!can_schedule(subframe, kind)) {
    throw ChannelConfigError(std::string(to_string(kind)) + " cannot be scheduled in subframe " +
                             std::to_string(subframe));
  }
  Usage& u = usage_[subframe];
  if (u.total() + prb_count > cfg_.total_prb) {
    throw ShortageError("subframe " + std::to_string(subframe) + ": requested " +
                        std::to_string(prb_count) + " PRBs, " +
                        std::to_string(cfg_.total_prb - u.total()) + " remaining");
  }
  u.by_kind[static_cast<int>(kind)] += prb_count;

  Allocation a{next_id_++, subframe, prb_count, kind, rnti_kind, group};
  Counter& c = counters_[{static_cast<int>(kind), group}];
  ++c.allocations;
  c.prbs += prb_count;
  ++total_.allocations;
  total_.prbs += prb_count;
  has_dci_.push_back(0);
  if (keep_history_) allocations_.push_back(a);
  return a;
}

DciRecord ResourceLedger::emit_dci(const Allocation& alloc, std::uint32_t rnti,
                                          std::vector<HarqInfo> harq_infos) {
  if (harq_infos.empty()) throw std::invalid_argument("emit_dci: no HARQ info");
  for (std::size_t i = 0; i < harq_infos.size(); ++i) {
    for (std::size_t j = i + 1; j < harq_infos.size(); ++j) {
      if (harq_infos[i].tb_id == harq_infos[j].tb_id) {
        throw std::invalid_argument("emit_dci: duplicate component TB id " +
                                    std::to_string(harq_infos[i].tb_id));
      }
    }
  }
  if (alloc.id < 0 || alloc.id >= next_id_) {
    throw std::invalid_argument("emit_dci: unknown allocation " + std::to_string(alloc.id));
  }
  auto& flag = has_dci_[static_cast<std::size_t>(alloc.id)];
  if (flag) {
    throw std::logic_error("emit_dci: allocation " + std::to_string(alloc.id) +
                           " already has a DCI");
  }
  flag = 1;
  ++dci_total_;
  DciRecord rec{alloc.subframe, rnti, alloc.id, std::move(harq_infos)};
  if (keep_history_) control_log_.push_back(rec);
  return rec;
}

int ResourceLedger::remaining(std::int64_t subframe) const {
  return cfg_.total_prb - allocated(subframe);
}

int ResourceLedger::allocated(std::int64_t subframe) const {
  auto it = usage_.find(subframe);
  return it == usage_.end() ? 0 : it->second.total();
}

int ResourceLedger::allocated(std::int64_t subframe, ChannelKind kind) const {
  auto it = usage_.find(subframe);
  return it == usage_.end() ? 0 : it->second.by_kind[static_cast<int>(kind)];
}

ResourceLedger::Counter ResourceLedger::cumulative(ChannelKind kind, int group) const {
  auto it = counters_.find({static_cast<int>(kind), group});
  return it == counters_.end() ? Counter{} : it->second;
}

std::vector<int> ResourceLedger::allocations_without_dci() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < has_dci_.size(); ++i) {
    if (!has_dci_[i]) out.push_back(static_cast<int>(i));
  }
  return out;
}

void ResourceLedger::export_csv(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << "subframe,kind,prbs,rnti_kind,group\n";
  for (const Allocation& a : allocations_) {
    out << a.subframe << ',' << to_string(a.channel) << ',' << a.prb_count << ','
        << to_string(a.rnti_kind) << ',' << a.group << '\n';
  }
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace gcsim::frame
