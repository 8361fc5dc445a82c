#include "stosched/core/rng.hpp"

namespace stosched {

namespace {
constexpr std::uint32_t lo32(std::uint64_t x) { return static_cast<std::uint32_t>(x); }
constexpr std::uint32_t hi32(std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); }
}  // namespace

RngStream::RngStream(std::uint64_t seed) {
  std::seed_seq seq{lo32(seed), hi32(seed)};
  engine_.seed(seq);
}

RngStream RngStream::derive(std::uint64_t master_seed, std::uint64_t index) {
  // The trailing tag keeps derived streams disjoint from RngStream(seed).
  std::seed_seq seq{lo32(master_seed), hi32(master_seed), lo32(index), hi32(index),
                    0x7472u};
  return RngStream(seq);
}

}  // namespace stosched
