#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcsim/access/events.h"

namespace gcsim::sim {

// Everything a report is computed from: run parameters plus the event log.
struct RunTrace {
  std::vector<std::pair<std::string, std::string>> meta;
  access::EventLog events;

  const std::string& meta_value(std::string_view key) const;  // throws std::out_of_range
  void set_meta(std::string key, std::string value);
};

inline constexpr std::string_view kTraceHeader =
    "subframe,event,group,packet,alloc,prbs,channel,mcs,detail";

// META rows first, then events by subframe; within a subframe ARRIVAL, TX,
// PMCH_IDLE, DONE, each kind in log order. detail is a ';'-separated
// key=value list.
std::string trace_to_csv(const RunTrace& trace);
RunTrace trace_from_csv(std::string_view csv);

}  // namespace gcsim::sim
