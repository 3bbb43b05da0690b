#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bmf/galois.hpp"
#include "bmf/matrix.hpp"

namespace bmf {

/// Residual errors after each emitted factor.
struct StepError {
  std::uint64_t uncovered = 0;
  std::uint64_t overcovered = 0;
};

struct FactorizationResult {
  FactorSet factors;
  std::uint64_t residual_uncovered = 0;
  std::uint64_t residual_overcovered = 0;
  std::vector<StepError> per_step;  // one entry per factor
};

/// A concept of the essential part, cached with its induced interval data in
/// the host matrix: the interval's search context (rows D↓, columns C↑) and
/// the rectangle every concept of the interval is guaranteed to cover.
struct IntervalSeed {
  Bitset ess_extent;   // C, closed in the essential part
  Bitset ess_intent;   // D, closed in the essential part
  Bitset rows_j;       // D↓ in the host matrix
  Bitset cols_j;       // C↑ in the host matrix
  Bitset lift_extent;  // C↑↓
  Bitset lift_intent;  // D↓↑
};

struct IntervalSeedSet {
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  std::vector<IntervalSeed> seeds;
};

/// Greedily covers the essential 1s with concepts of the essential part,
/// scoring each candidate by the essential cells its lifted rectangle picks
/// up. The lifted rectangles of the output jointly cover every essential
/// cell.
IntervalSeedSet compute_intervals(const BooleanMatrix& m);

/// Interval-guided greedy factorization. Each factor is a concept drawn from
/// a distinct seed interval, chosen by greedy attribute extension inside the
/// interval's restricted context, scored by newly covered 1s. Stops when at
/// most `epsilon` 1s remain uncovered (or at `max_factors`). From-below:
/// never covers a 0.
FactorizationResult greess(const BooleanMatrix& m, std::uint64_t epsilon = 0,
                           std::optional<std::size_t> max_factors = std::nullopt);

/// Greedy "on demand" concept search: grows an intent one attribute at a
/// time, re-closing after each step, keeping the attribute that covers the
/// most uncovered 1s. From-below; exact at epsilon = 0 with no factor cap.
FactorizationResult grecond(const BooleanMatrix& m, std::uint64_t epsilon = 0,
                            std::optional<std::size_t> max_factors = std::nullopt);

inline constexpr std::size_t kDefaultGreconConceptCap = 250000;

/// Enumeration-based greedy set cover over all concepts (the tiling-style
/// oracle baseline). Throws CapExceeded if the concept count passes the cap.
FactorizationResult grecon(const BooleanMatrix& m, std::uint64_t epsilon = 0,
                           std::size_t max_concepts = kDefaultGreconConceptCap,
                           std::optional<std::size_t> max_factors = std::nullopt);

struct AssoParams {
  double tau = 0.85;
  double w_plus = 1.0;
  double w_minus = 1.0;
};

struct AssoResult {
  BooleanMatrix usage;  // n×k object-factor matrix
  BooleanMatrix basis;  // k×m factor-attribute matrix
  FactorizationResult result;
};

/// Association-confidence heuristic for the fixed-k problem. Basis vector
/// candidates are rows of the attribute association matrix (confidence >=
/// tau); usage columns are grown by per-object cover gain with weights
/// w_plus / w_minus. May overcover; not guaranteed exact.
AssoResult asso(const BooleanMatrix& m, std::size_t k, AssoParams params = {});

enum class Algorithm { greess, grecond, grecon, asso };

Algorithm algorithm_from_string(const std::string& s);
std::string to_string(Algorithm a);

}  // namespace bmf
