#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bmf/matrix.hpp"

namespace bmf {

/// Counter-based random source: cell c of a stream seeded with s draws
/// splitmix64 evaluated at state s + (c+1)*phi. Platform-independent and
/// reproducible from (seed, counter) alone.
namespace rng {

inline constexpr const char* kGeneratorName = "splitmix64-counter";

inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline double uniform01(std::uint64_t seed, std::uint64_t counter) {
  return static_cast<double>(splitmix64_at(seed, counter) >> 11) * 0x1.0p-53;
}

/// Deterministic sub-stream seed for (master seed, stream index).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64_at(master, index);
}

}  // namespace rng

struct SynthSpec {
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  std::size_t k_true = 0;
  double dens_a = 0.0;
  double dens_b = 0.0;
  std::uint64_t seed = 0;
  std::size_t count = 1;
};

/// The synthetic-set presets (1..6): shape, planted factor count, densities.
SynthSpec synth_preset(int set_number);

/// Each cell is 1 independently with probability `density`.
BooleanMatrix gen_boolean_matrix(std::size_t rows, std::size_t cols,
                                 double density, std::uint64_t seed);

struct Dataset {
  BooleanMatrix data;    // planted product a_true ∘ b_true
  BooleanMatrix a_true;  // n×k
  BooleanMatrix b_true;  // k×m
};

std::vector<Dataset> gen_dataset(const SynthSpec& spec);

enum class NoiseKind { additive, subtractive, general };

NoiseKind noise_kind_from_string(const std::string& s);
std::string to_string(NoiseKind k);

struct NoiseSpec {
  NoiseKind kind = NoiseKind::general;
  double p = 0.0;  // flip probability, in [0, 1]
  std::uint64_t seed = 0;
};

/// Additive noise flips 0→1 only, subtractive 1→0 only, general flips any
/// cell; each eligible cell flips independently with probability p.
BooleanMatrix add_noise(const BooleanMatrix& m, const NoiseSpec& spec);

/// key=value sidecar describing a generated batch.
std::string format_metadata(const SynthSpec& spec);

}  // namespace bmf
