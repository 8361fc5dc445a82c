#pragma once

#include <cstdint>
#include <random>

namespace stosched {

/// Explicit random stream. The engine is std::mt19937_64, whose output
/// sequence is fixed by the C++ standard; seeding goes through std::seed_seq,
/// which is also fully specified. Uniforms are built from the top 53 bits, so
/// a given seed yields identical draws on every conforming platform.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  /// Independent stream for (master_seed, index). Used to give every Monte
  /// Carlo trial its own stream so results do not depend on execution order.
  static RngStream derive(std::uint64_t master_seed, std::uint64_t index);

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform on (0, 1].
  double uniform_pos() { return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; }

 private:
  explicit RngStream(std::seed_seq& seq) : engine_(seq) {}
  std::mt19937_64 engine_;
};

}  // namespace stosched
