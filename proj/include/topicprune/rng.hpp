#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace topicprune {

// Stateless splitmix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

// Derives an independent stream seed from (seed, tag, index). This is the
// documented split function: every parallel unit of work (a document, a
// replication, an LDA fit) gets its stream as mix_seed(parent_seed, tag, i),
// so results do not depend on scheduling order.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag,
                       std::uint64_t index = 0);

// Stream tags used across the toolkit.
inline constexpr std::uint64_t kStreamBeta = 1;
inline constexpr std::uint64_t kStreamDocument = 2;
inline constexpr std::uint64_t kStreamReplication = 3;
inline constexpr std::uint64_t kStreamLda = 4;

// Deterministic random stream. The engine is std::mt19937_64 (fully specified
// by the standard); all samplers below are implemented explicitly rather than
// through std:: distributions, whose algorithms vary across library
// implementations.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  static RngStream derive(std::uint64_t seed, std::uint64_t tag,
                          std::uint64_t index = 0) {
    return RngStream(mix_seed(seed, tag, index));
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  std::uint64_t uniform_u64() { return engine_(); }

  // Uniform integer on [0, n).
  std::int64_t uniform_int(std::int64_t n);

  // Standard normal via the Marsaglia polar method.
  double normal();

  // Gamma(shape, 1). Marsaglia-Tsang for shape >= 1; for shape < 1 the draw
  // is boosted through Gamma(shape + 1) and a uniform power, which stays
  // accurate deep in the small-shape regime.
  double gamma(double shape);

  // Poisson(mean): sequential inversion for small means, transformed
  // rejection (PTRS) for large ones.
  std::int64_t poisson(double mean);

 private:
  std::mt19937_64 engine_;
  bool have_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

}  // namespace topicprune
