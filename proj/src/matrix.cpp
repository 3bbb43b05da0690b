#include "bmf/matrix.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

namespace bmf {

BooleanMatrix BooleanMatrix::from_rows(std::size_t n_cols,
                                       std::vector<Bitset> rows) {
  BooleanMatrix m;
  m.n_ = rows.size();
  m.m_ = n_cols;
  m.rows_ = std::move(rows);
  m.cols_.assign(n_cols, Bitset(m.n_));
  for (std::size_t i = 0; i < m.n_; ++i) {
    if (m.rows_[i].size() != n_cols)
      throw std::invalid_argument("row width does not match column count");
    m.rows_[i].for_each([&](std::size_t j) { m.cols_[j].set(i); });
    m.ones_ += m.rows_[i].count();
  }
  return m;
}

BooleanMatrix BooleanMatrix::from_cells(
    std::size_t n_rows, std::size_t n_cols,
    std::initializer_list<std::pair<std::size_t, std::size_t>> ones) {
  std::vector<Bitset> rows(n_rows, Bitset(n_cols));
  for (auto [i, j] : ones) {
    if (i >= n_rows || j >= n_cols)
      throw std::out_of_range("cell index out of range");
    rows[i].set(j);
  }
  return from_rows(n_cols, std::move(rows));
}

BooleanMatrix bool_product(const BooleanMatrix& a, const BooleanMatrix& b) {
  if (a.n_cols() != b.n_rows())
    throw std::invalid_argument("bool_product: inner dimensions differ (" +
                                std::to_string(a.n_cols()) + " vs " +
                                std::to_string(b.n_rows()) + ")");
  std::vector<Bitset> rows(a.n_rows(), Bitset(b.n_cols()));
  for (std::size_t i = 0; i < a.n_rows(); ++i)
    a.row(i).for_each([&](std::size_t l) { rows[i] |= b.row(l); });
  return BooleanMatrix::from_rows(b.n_cols(), std::move(rows));
}

std::uint64_t hamming_norm(const BooleanMatrix& m) { return m.ones(); }

static void require_same_shape(const BooleanMatrix& a, const BooleanMatrix& b,
                               const char* op) {
  if (a.n_rows() != b.n_rows() || a.n_cols() != b.n_cols())
    throw std::invalid_argument(std::string(op) + ": dimension mismatch");
}

std::uint64_t error(const BooleanMatrix& c, const BooleanMatrix& d) {
  require_same_shape(c, d, "error");
  std::uint64_t e = 0;
  for (std::size_t i = 0; i < c.n_rows(); ++i) {
    e += Bitset::and_not_count(c.row(i), d.row(i));
    e += Bitset::and_not_count(d.row(i), c.row(i));
  }
  return e;
}

ErrorSplit error_split(const BooleanMatrix& data, const BooleanMatrix& model) {
  require_same_shape(data, model, "error_split");
  ErrorSplit s;
  for (std::size_t i = 0; i < data.n_rows(); ++i) {
    s.uncovered += Bitset::and_not_count(data.row(i), model.row(i));
    s.overcovered += Bitset::and_not_count(model.row(i), data.row(i));
  }
  return s;
}

bool contained(const BooleanMatrix& j1, const BooleanMatrix& j2) {
  require_same_shape(j1, j2, "contained");
  for (std::size_t i = 0; i < j1.n_rows(); ++i)
    if (!j1.row(i).is_subset_of(j2.row(i))) return false;
  return true;
}

ClarifyResult clarify(const BooleanMatrix& m) {
  // First occurrence of each distinct row, then of each distinct column of
  // the row-reduced matrix. Row removal cannot merge distinct columns: two
  // columns differing only on a dropped duplicate row also differ on its
  // kept representative.
  ClarifyResult out;
  out.row_map.resize(m.n_rows());
  out.col_map.resize(m.n_cols());

  std::vector<std::size_t> kept_rows;
  {
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < m.n_rows(); ++i) {
      std::string key;
      key.reserve(m.n_cols());
      for (std::size_t j = 0; j < m.n_cols(); ++j)
        key.push_back(m.at(i, j) ? '1' : '0');
      auto [it, fresh] = seen.emplace(std::move(key), kept_rows.size());
      if (fresh) kept_rows.push_back(i);
      out.row_map[i] = it->second;
    }
  }

  std::vector<std::size_t> kept_cols;
  {
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t j = 0; j < m.n_cols(); ++j) {
      std::string key;
      key.reserve(kept_rows.size());
      for (std::size_t r : kept_rows) key.push_back(m.at(r, j) ? '1' : '0');
      auto [it, fresh] = seen.emplace(std::move(key), kept_cols.size());
      if (fresh) kept_cols.push_back(j);
      out.col_map[j] = it->second;
    }
  }

  std::vector<Bitset> rows(kept_rows.size(), Bitset(kept_cols.size()));
  for (std::size_t r = 0; r < kept_rows.size(); ++r)
    for (std::size_t c = 0; c < kept_cols.size(); ++c)
      if (m.at(kept_rows[r], kept_cols[c])) rows[r].set(c);
  out.matrix = BooleanMatrix::from_rows(kept_cols.size(), std::move(rows));
  return out;
}

std::pair<BooleanMatrix, BooleanMatrix> factors_to_matrices(const FactorSet& f,
                                                            std::size_t l) {
  if (l > f.size())
    throw std::invalid_argument("factors_to_matrices: prefix exceeds factor count");
  std::vector<Bitset> a_rows(f.n_rows, Bitset(l));
  std::vector<Bitset> b_rows(l, Bitset(f.n_cols));
  for (std::size_t p = 0; p < l; ++p) {
    f.concepts[p].extent.for_each([&](std::size_t i) { a_rows[i].set(p); });
    b_rows[p] = f.concepts[p].intent;
  }
  return {BooleanMatrix::from_rows(l, std::move(a_rows)),
          BooleanMatrix::from_rows(f.n_cols, std::move(b_rows))};
}

std::vector<BooleanMatrix> factorization_as_rectangles(const BooleanMatrix& a,
                                                       const BooleanMatrix& b) {
  if (a.n_cols() != b.n_rows())
    throw std::invalid_argument("factorization_as_rectangles: inner dimensions differ");
  std::vector<BooleanMatrix> rects;
  rects.reserve(a.n_cols());
  for (std::size_t l = 0; l < a.n_cols(); ++l) {
    std::vector<Bitset> rows(a.n_rows(), Bitset(b.n_cols()));
    a.col(l).for_each([&](std::size_t i) { rows[i] = b.row(l); });
    rects.push_back(BooleanMatrix::from_rows(b.n_cols(), std::move(rows)));
  }
  return rects;
}

BooleanMatrix product_of_factors(const FactorSet& f, std::size_t l) {
  if (l > f.size())
    throw std::invalid_argument("product_of_factors: prefix exceeds factor count");
  std::vector<Bitset> rows(f.n_rows, Bitset(f.n_cols));
  for (std::size_t p = 0; p < l; ++p)
    f.concepts[p].extent.for_each(
        [&](std::size_t i) { rows[i] |= f.concepts[p].intent; });
  return BooleanMatrix::from_rows(f.n_cols, std::move(rows));
}

}  // namespace bmf
