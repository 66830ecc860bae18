#pragma once

#include <memory>

#include "gcsim/access/context.h"
#include "gcsim/frame/ledger.h"
#include "gcsim/radio/geometry.h"
#include "gcsim/sim/config.h"
#include "gcsim/sim/metrics.h"
#include "gcsim/sim/trace.h"

namespace gcsim::sim {

// Radio state of one drop: geometry, group sessions and member links.
struct Scenario {
  radio::CellGrid grid;
  radio::UeDrop drop;
  access::CellEnvironment env;
};

// Groups take consecutive runs of group_size UEs served by the centre cell.
Scenario build_scenario(const SimConfig& cfg);

struct RunResult {
  MetricsReport report;
  RunTrace trace;
  frame::ResourceLedger ledger;
};

// Validates, drops UEs, feeds voice traffic for warmup + horizon subframes
// and keeps stepping until every packet has a final outcome.
RunResult run(const SimConfig& cfg);

}  // namespace gcsim::sim
