#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace gcsim {

using Rng = std::mt19937_64;

// Independent, named random substreams derived from one master seed.
//
// Every consumer asks for its own (name, id) stream, so adding or removing a
// consumer never shifts the draws seen by another one.
class RngFactory {
 public:
  explicit RngFactory(std::uint64_t master_seed) : master_(master_seed) {}

  Rng stream(std::string_view name, std::uint64_t id = 0) const;
  std::uint64_t master_seed() const { return master_; }

 private:
  std::uint64_t master_;
};

std::uint64_t splitmix64(std::uint64_t x);

// Uniform double in [0, 1) from 53 random bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace gcsim
