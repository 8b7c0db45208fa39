#ifndef EXPLORER_RNG_HPP_
#define EXPLORER_RNG_HPP_

#include <cstdint>
#include <random>

namespace explorer {

// Seeded uniform stream for the stochastic policy.
//
// Stream algorithm (stable by construction, not implementation-defined):
// std::mt19937_64 seeded directly with the 64-bit seed; each uniform draw is
// the top 53 bits of one engine output scaled into [0, 1):
//   u = (x >> 11) * 2^-53
// The agent consumes exactly one draw per tick in stochastic mode and none
// in deterministic mode.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  double next_uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace explorer

#endif  // EXPLORER_RNG_HPP_
