#pragma once

#include <cstddef>

#include "gcsim/harq/reception_matrix.h"

namespace gcsim::coding {

inline constexpr std::size_t kOracleMaxRows = 12;

// Exact minimum number of disjoint-NACK groups the pending rows can be
// split into, i.e. the chromatic number of the conflict graph. Subset DP,
// exponential in the row count. max_m = 0 means no cap on group size.
int oracle_min_partition(const harq::ReceptionMatrix& matrix, int max_m = 0);

}  // namespace gcsim::coding
