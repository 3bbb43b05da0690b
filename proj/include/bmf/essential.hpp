#pragma once

#include <cstdint>
#include <optional>

#include "bmf/galois.hpp"
#include "bmf/matrix.hpp"

namespace bmf {

/// Default safety cap for the exact rank search.
inline constexpr std::size_t kDefaultRankConceptCap = 20;

struct EssentialReport {
  BooleanMatrix essential;
  std::uint64_t ones_input = 0;
  std::uint64_t ones_essential = 0;
  double ratio = 1.0;       // ones_essential / ones_input
  bool zero_input = false;  // ratio reported as 1.0 by convention
};

/// The essential part: cell (i,j) survives iff it holds a 1 and no strictly
/// smaller row carries column j, and no strictly smaller column carries row
/// i ("smaller" = strict containment of the attribute/object sets). Accepts
/// non-clarified input; the literal rule is applied with strict containment.
BooleanMatrix compute_essential(const BooleanMatrix& m);

EssentialReport essential_report(const BooleanMatrix& m);

/// True iff the concept covers at least one essential cell, i.e. belongs to
/// the union of the minimal cell intervals. Throws if `c` is not a concept
/// of `m`.
bool in_B_E(const BooleanMatrix& m, const FormalConcept& c);

/// Same, with the essential part supplied by the caller.
bool in_B_E(const BooleanMatrix& m, const BooleanMatrix& essential,
            const FormalConcept& c);

/// Replaces each rank-1 term of a from-below factorization by the concept
/// generated by its extent. The result covers at least as much, never more
/// than the matrix. Throws if A∘B is not contained in `m`.
FactorSet lift_to_concepts(const BooleanMatrix& m, const BooleanMatrix& a,
                           const BooleanMatrix& b);

/// Smallest k such that k concepts cover the matrix exactly; exhaustive, so
/// only for small instances. With `restrict_to_b_e`, candidates are limited
/// to concepts covering an essential cell. Throws CapExceeded when the
/// concept count passes `max_concepts`.
std::size_t boolean_rank_oracle(const BooleanMatrix& m,
                                bool restrict_to_b_e = false,
                                std::size_t max_concepts = kDefaultRankConceptCap);

}  // namespace bmf
