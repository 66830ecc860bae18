#include "gcsim/sim/trace.h"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gcsim/sim/csv.h"

namespace gcsim::sim {

using access::ArrivalEvent;
using access::PacketDoneEvent;
using access::PmchIdleEvent;
using access::TxEvent;

const std::string& RunTrace::meta_value(std::string_view key) const {
  for (const auto& [k, v] : meta) {
    if (k == key) return v;
  }
  throw std::out_of_range("trace has no meta key '" + std::string(key) + "'");
}

void RunTrace::set_meta(std::string key, std::string value) {
  if (key.find_first_of(",;=\n") != std::string::npos ||
      value.find_first_of(",;\n") != std::string::npos) {
    throw std::invalid_argument("meta entry '" + key + "' contains a separator");
  }
  for (auto& [k, v] : meta) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  meta.emplace_back(std::move(key), std::move(value));
}

namespace {

std::string i(std::int64_t v) { return std::to_string(v); }

std::string row(std::int64_t subframe, std::string_view event, std::string group,
                std::string packet, std::string alloc, std::string prbs, std::string channel,
                std::string mcs, std::string detail) {
  std::string out = i(subframe);
  for (std::string_view f : {event, std::string_view(group), std::string_view(packet),
                             std::string_view(alloc), std::string_view(prbs),
                             std::string_view(channel), std::string_view(mcs),
                             std::string_view(detail)}) {
    out += ',';
    out += f;
  }
  out += '\n';
  return out;
}

std::string tx_row(const TxEvent& e) {
  std::string detail = "rnti_kind=" + std::string(frame::to_string(e.rnti_kind)) +
                       ";rnti=" + i(e.rnti) + ";retx=" + i(e.retransmission) + ";m=" + i(e.m) +
                       ";union_nack=" + i(e.union_nack) +
                       ";redundant_avoided=" + i(e.redundant_avoided) +
                       ";feedback=" + i(e.feedback) + ";feasible=" + i(e.mcs_feasible);
  return row(e.subframe, "TX", i(e.group), i(e.packet), i(e.alloc), i(e.prbs),
             std::string(frame::to_string(e.channel)), i(e.mcs), detail);
}

std::string done_row(const PacketDoneEvent& e) {
  std::string detail = "arrival=" + i(e.arrival) + ";schedulable=" + i(e.schedulable) +
                       ";first_tx=" + i(e.first_tx) + ";full_delivery=" + i(e.full_delivery) +
                       ";members=" + i(e.members) + ";delivered=" + i(e.delivered) +
                       ";initial_allocations=" + i(e.initial_allocations) +
                       ";retx_allocations=" + i(e.retx_allocations) +
                       ";retx_rounds=" + i(e.retx_rounds) +
                       ";failed_processes=" + i(e.failed_processes);
  return row(e.subframe, "DONE", i(e.group), i(e.packet), "", i(e.prbs), "", "", detail);
}

std::map<std::string, std::string, std::less<>> parse_detail(std::string_view detail) {
  std::map<std::string, std::string, std::less<>> out;
  if (detail.empty()) return out;
  for (const std::string& kv : split(detail, ';')) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad detail entry '" + kv + "'");
    out.emplace(kv.substr(0, eq), kv.substr(eq + 1));
  }
  return out;
}

std::int64_t field(const std::map<std::string, std::string, std::less<>>& d, std::string_view k) {
  auto it = d.find(k);
  if (it == d.end()) throw std::invalid_argument("detail lacks '" + std::string(k) + "'");
  return parse_int(it->second);
}

}  // namespace

std::string trace_to_csv(const RunTrace& trace) {
  std::string out(kTraceHeader);
  out += '\n';
  for (const auto& [k, v] : trace.meta) {
    out += ",META,,,,,,," + k + "=" + v + "\n";
  }

  // (subframe, kind rank, index) merge of the four logs.
  struct Ref {
    std::int64_t subframe;
    int rank;
    std::size_t index;
  };
  const auto& ev = trace.events;
  std::vector<Ref> refs;
  refs.reserve(ev.arrivals.size() + ev.transmissions.size() + ev.pmch_idle.size() +
               ev.deliveries.size());
  for (std::size_t k = 0; k < ev.arrivals.size(); ++k) refs.push_back({ev.arrivals[k].subframe, 0, k});
  for (std::size_t k = 0; k < ev.transmissions.size(); ++k) {
    refs.push_back({ev.transmissions[k].subframe, 1, k});
  }
  for (std::size_t k = 0; k < ev.pmch_idle.size(); ++k) refs.push_back({ev.pmch_idle[k].subframe, 2, k});
  for (std::size_t k = 0; k < ev.deliveries.size(); ++k) {
    refs.push_back({ev.deliveries[k].subframe, 3, k});
  }
  std::stable_sort(refs.begin(), refs.end(), [](const Ref& a, const Ref& b) {
    if (a.subframe != b.subframe) return a.subframe < b.subframe;
    return a.rank < b.rank;
  });

  for (const Ref& r : refs) {
    switch (r.rank) {
      case 0: {
        const ArrivalEvent& e = ev.arrivals[r.index];
        out += row(e.subframe, "ARRIVAL", i(e.group), i(e.packet), "", "", "", "",
                   "members=" + i(e.members));
        break;
      }
      case 1: out += tx_row(ev.transmissions[r.index]); break;
      case 2: {
        const PmchIdleEvent& e = ev.pmch_idle[r.index];
        out += row(e.subframe, "PMCH_IDLE", "", "", "", i(e.prbs), "pmch", "", "");
        break;
      }
      default: out += done_row(ev.deliveries[r.index]); break;
    }
  }
  return out;
}

RunTrace trace_from_csv(std::string_view csv) {
  RunTrace trace;
  auto lines = split(csv, '\n');
  if (lines.empty() || trim(lines.front()) != kTraceHeader) {
    throw std::invalid_argument("trace: header row does not match '" + std::string(kTraceHeader) + "'");
  }
  for (std::size_t n = 1; n < lines.size(); ++n) {
    std::string_view line = lines[n];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 9) {
      throw std::invalid_argument("trace line " + std::to_string(n + 1) + ": expected 9 fields");
    }
    try {
      const std::string& event = f[1];
      if (event == "META") {
        const auto eq = f[8].find('=');
        if (eq == std::string::npos) throw std::invalid_argument("META without '='");
        trace.meta.emplace_back(f[8].substr(0, eq), f[8].substr(eq + 1));
        continue;
      }
      const std::int64_t subframe = parse_int(f[0]);
      const auto d = parse_detail(f[8]);
      if (event == "ARRIVAL") {
        trace.events.arrivals.push_back({subframe, static_cast<int>(parse_int(f[2])),
                                         static_cast<int>(parse_int(f[3])),
                                         static_cast<int>(field(d, "members"))});
      } else if (event == "TX") {
        TxEvent e;
        e.subframe = subframe;
        e.group = static_cast<int>(parse_int(f[2]));
        e.packet = static_cast<int>(parse_int(f[3]));
        e.alloc = static_cast<int>(parse_int(f[4]));
        e.prbs = static_cast<int>(parse_int(f[5]));
        e.channel = frame::parse_channel_kind(f[6]);
        e.mcs = static_cast<int>(parse_int(f[7]));
        auto rk = d.find("rnti_kind");
        if (rk == d.end()) throw std::invalid_argument("detail lacks 'rnti_kind'");
        e.rnti_kind = frame::parse_rnti_kind(rk->second);
        e.rnti = static_cast<std::uint32_t>(field(d, "rnti"));
        e.retransmission = field(d, "retx") != 0;
        e.m = static_cast<int>(field(d, "m"));
        e.union_nack = static_cast<int>(field(d, "union_nack"));
        e.redundant_avoided = static_cast<int>(field(d, "redundant_avoided"));
        e.feedback = static_cast<int>(field(d, "feedback"));
        e.mcs_feasible = field(d, "feasible") != 0;
        trace.events.transmissions.push_back(e);
      } else if (event == "PMCH_IDLE") {
        trace.events.pmch_idle.push_back({subframe, static_cast<int>(parse_int(f[5]))});
      } else if (event == "DONE") {
        PacketDoneEvent e;
        e.subframe = subframe;
        e.group = static_cast<int>(parse_int(f[2]));
        e.packet = static_cast<int>(parse_int(f[3]));
        e.prbs = parse_int(f[5]);
        e.arrival = field(d, "arrival");
        e.schedulable = field(d, "schedulable");
        e.first_tx = field(d, "first_tx");
        e.full_delivery = field(d, "full_delivery");
        e.members = static_cast<int>(field(d, "members"));
        e.delivered = static_cast<int>(field(d, "delivered"));
        e.initial_allocations = static_cast<int>(field(d, "initial_allocations"));
        e.retx_allocations = static_cast<int>(field(d, "retx_allocations"));
        e.retx_rounds = static_cast<int>(field(d, "retx_rounds"));
        e.failed_processes = static_cast<int>(field(d, "failed_processes"));
        trace.events.deliveries.push_back(e);
      } else {
        throw std::invalid_argument("unknown event '" + event + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("trace line " + std::to_string(n + 1) + ": " + e.what());
    }
  }
  return trace;
}

}  // namespace gcsim::sim
