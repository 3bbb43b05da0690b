#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "bmf/bitset.hpp"

namespace bmf {

/// Immutable 0/1 matrix, bit-packed row-major with a cached transpose so
/// intersections along either axis are word-parallel.
class BooleanMatrix {
 public:
  BooleanMatrix() = default;

  /// All-zero matrix of the given shape.
  BooleanMatrix(std::size_t n_rows, std::size_t n_cols)
      : n_(n_rows),
        m_(n_cols),
        rows_(n_rows, Bitset(n_cols)),
        cols_(n_cols, Bitset(n_rows)) {}

  /// Takes ownership of row bitsets (each sized `n_cols`) and builds the
  /// column views.
  static BooleanMatrix from_rows(std::size_t n_cols, std::vector<Bitset> rows);

  static BooleanMatrix from_cells(
      std::size_t n_rows, std::size_t n_cols,
      std::initializer_list<std::pair<std::size_t, std::size_t>> ones);

  std::size_t n_rows() const { return n_; }
  std::size_t n_cols() const { return m_; }

  bool at(std::size_t i, std::size_t j) const { return rows_[i].test(j); }

  /// Row i as a set of column indices.
  const Bitset& row(std::size_t i) const { return rows_[i]; }
  /// Column j as a set of row indices.
  const Bitset& col(std::size_t j) const { return cols_[j]; }

  /// Number of 1-cells (the L1 norm).
  std::uint64_t ones() const { return ones_; }

  bool operator==(const BooleanMatrix& o) const {
    return n_ == o.n_ && m_ == o.m_ && rows_ == o.rows_;
  }

 private:
  std::size_t n_ = 0, m_ = 0;
  std::vector<Bitset> rows_;
  std::vector<Bitset> cols_;
  std::uint64_t ones_ = 0;
};

/// A pair of closed row/column sets; also used as a plain rectangle where an
/// algorithm (e.g. asso) produces non-maximal blocks.
struct FormalConcept {
  Bitset extent;  // rows
  Bitset intent;  // columns

  bool covers(std::size_t i, std::size_t j) const {
    return extent.test(i) && intent.test(j);
  }
  bool operator==(const FormalConcept&) const = default;
};

/// Ordered list of factors over a fixed host shape. Order is the discovery
/// order of the producing algorithm.
struct FactorSet {
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  std::vector<FormalConcept> concepts;

  std::size_t size() const { return concepts.size(); }
};

struct ErrorSplit {
  std::uint64_t uncovered = 0;   // 1s of the first matrix missed by the second
  std::uint64_t overcovered = 0; // 0s of the first matrix hit by the second
};

/// Boolean matrix product: (A∘B)_ij = max_l min(A_il, B_lj).
BooleanMatrix bool_product(const BooleanMatrix& a, const BooleanMatrix& b);

std::uint64_t hamming_norm(const BooleanMatrix& m);

/// Number of cells where the two matrices differ.
std::uint64_t error(const BooleanMatrix& c, const BooleanMatrix& d);

ErrorSplit error_split(const BooleanMatrix& data, const BooleanMatrix& model);

/// True iff j1 <= j2 cellwise.
bool contained(const BooleanMatrix& j1, const BooleanMatrix& j2);

struct ClarifyResult {
  BooleanMatrix matrix;             // no duplicate rows, no duplicate columns
  std::vector<std::size_t> row_map; // original row -> kept row index
  std::vector<std::size_t> col_map; // original col -> kept col index
};

/// Removes duplicate rows and columns, keeping the first occurrence of each.
ClarifyResult clarify(const BooleanMatrix& m);

/// Characteristic matrices of the first l factors: A is n×l with column p the
/// extent of factor p, B is l×m with row p its intent. Throws if l exceeds
/// the factor count.
std::pair<BooleanMatrix, BooleanMatrix> factors_to_matrices(const FactorSet& f,
                                                            std::size_t l);

/// Splits a product into its k rank-1 terms: rectangle l is A_⋅l ∘ B_l⋅.
std::vector<BooleanMatrix> factorization_as_rectangles(const BooleanMatrix& a,
                                                       const BooleanMatrix& b);

/// Cellwise max of the first l factor rectangles (the induced product).
BooleanMatrix product_of_factors(const FactorSet& f, std::size_t l);

inline BooleanMatrix product_of_factors(const FactorSet& f) {
  return product_of_factors(f, f.size());
}

}  // namespace bmf
