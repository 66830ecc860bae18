#include "gcsim/coding/oracle.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcsim::coding {

int oracle_min_partition(const harq::ReceptionMatrix& matrix, int max_m) {
  const std::size_t n = matrix.row_count();
  if (n > kOracleMaxRows) {
    throw std::invalid_argument("oracle_min_partition: " + std::to_string(n) + " rows exceeds " +
                                std::to_string(kOracleMaxRows));
  }
  if (max_m < 0) throw std::invalid_argument("oracle_min_partition: max_m must be >= 0");
  if (n == 0) return 0;

  // Conflicts straight from the ACK/NACK entries, one UE column at a time.
  std::vector<std::uint32_t> conflict(n, 0);
  for (int ue : matrix.ues()) {
    std::uint32_t nackers = 0;
    for (std::size_t r = 0; r < n; ++r) {
      if (matrix.nack(r, ue)) nackers |= 1u << r;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (nackers & (1u << r)) conflict[r] |= nackers & ~(1u << r);
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (matrix.rows()[r].nack.empty()) {
      throw std::invalid_argument("oracle_min_partition: row without NACK");
    }
  }

  const std::uint32_t full = (1u << n) - 1;
  std::vector<char> independent(full + 1, 0);
  independent[0] = 1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const int low = std::countr_zero(s);
    const std::uint32_t rest = s & (s - 1);
    independent[s] = independent[rest] && !(conflict[static_cast<std::size_t>(low)] & rest) &&
                     (max_m == 0 || std::popcount(s) <= max_m);
  }

  constexpr int kInf = 1 << 20;
  std::vector<int> best(full + 1, kInf);
  best[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    // The group holding the lowest row of s is some independent subset
    // containing that row.
    const std::uint32_t low = s & (~s + 1);
    const std::uint32_t rest = s ^ low;
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint32_t g = sub | low;
      if (independent[g]) best[s] = std::min(best[s], best[s ^ g] + 1);
      if (sub == 0) break;
    }
  }
  return best[full];
}

}  // namespace gcsim::coding
