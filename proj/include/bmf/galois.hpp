#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bmf/errors.hpp"
#include "bmf/matrix.hpp"

namespace bmf {

/// Builds a set over `universe` from explicit indices, range-checked.
Bitset index_set(std::size_t universe, std::span<const std::size_t> indices);
Bitset index_set(std::size_t universe,
                 std::initializer_list<std::size_t> indices);

/// Attributes shared by every row in `rows`; all columns for the empty set.
Bitset up(const BooleanMatrix& m, const Bitset& rows);

/// Objects having every attribute in `cols`; all rows for the empty set.
Bitset down(const BooleanMatrix& m, const Bitset& cols);

inline Bitset up_down(const BooleanMatrix& m, const Bitset& rows) {
  return down(m, up(m, rows));
}
inline Bitset down_up(const BooleanMatrix& m, const Bitset& cols) {
  return up(m, down(m, cols));
}

/// Least concept whose extent contains row i.
FormalConcept object_concept(const BooleanMatrix& m, std::size_t i);
/// Greatest concept whose intent contains column j.
FormalConcept attribute_concept(const BooleanMatrix& m, std::size_t j);

bool is_concept(const BooleanMatrix& m, const Bitset& extent,
                const Bitset& intent);

/// All formal concepts, each once, in lectic order on intents. Output may be
/// exponential in min(n, m); pass `max_concepts` to bail out early.
std::vector<FormalConcept> enumerate_concepts(
    const BooleanMatrix& m,
    std::optional<std::size_t> max_concepts = std::nullopt);

/// The lattice range [γ(C), μ(D)] generated by a row set C and column set D.
struct Interval {
  FormalConcept lower;  // γ(C)
  FormalConcept upper;  // μ(D)
  Bitset gen_rows;      // C
  Bitset gen_cols;      // D

  bool empty() const { return !lower.extent.is_subset_of(upper.extent); }

  /// Membership test: a concept lies in the interval iff it contains both
  /// generators.
  bool contains(const FormalConcept& c) const {
    return gen_rows.is_subset_of(c.extent) && gen_cols.is_subset_of(c.intent);
  }
};

Interval interval(const BooleanMatrix& m, const Bitset& c, const Bitset& d);

/// Member concepts of [γ(C), μ(D)], reported in host coordinates. Computed
/// as the concepts of the restriction of the matrix to rows D↓ and columns
/// C↑. Throws if the interval is empty (C×D not contained in the matrix).
std::vector<FormalConcept> interval_concepts(const BooleanMatrix& m,
                                             const Bitset& c, const Bitset& d);

/// Containment of the cell intervals: [γ(i),μ(j)] ⊆ [γ(i'),μ(j')]. Both
/// cells must hold a 1.
bool interval_contained(const BooleanMatrix& m, std::size_t i, std::size_t j,
                        std::size_t i2, std::size_t j2);

inline bool concept_covers(const FormalConcept& c, std::size_t i,
                           std::size_t j) {
  return c.covers(i, j);
}

/// One concept per line: "extent: i1 i2 ... | intent: j1 j2 ..." with sorted
/// indices.
std::string format_concept_list(std::span<const FormalConcept> concepts);
std::vector<FormalConcept> parse_concept_list(std::string_view text,
                                              std::size_t n_rows,
                                              std::size_t n_cols);

}  // namespace bmf
