#include "bmf/essential.hpp"

#include <algorithm>
#include <stdexcept>

namespace bmf {

BooleanMatrix compute_essential(const BooleanMatrix& m) {
  const std::size_t n = m.n_rows(), cols = m.n_cols();

  // strict_row_sub[i]: rows whose attribute set is strictly inside row i's.
  std::vector<Bitset> strict_row_sub(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t i2 = 0; i2 < n; ++i2)
      if (i2 != i && m.row(i2).is_strict_subset_of(m.row(i)))
        strict_row_sub[i].set(i2);

  std::vector<Bitset> strict_col_sub(cols, Bitset(cols));
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t j2 = 0; j2 < cols; ++j2)
      if (j2 != j && m.col(j2).is_strict_subset_of(m.col(j)))
        strict_col_sub[j].set(j2);

  std::vector<Bitset> rows(n, Bitset(cols));
  for (std::size_t i = 0; i < n; ++i) {
    m.row(i).for_each([&](std::size_t j) {
      if (strict_row_sub[i].intersects(m.col(j))) return;
      if (strict_col_sub[j].intersects(m.row(i))) return;
      rows[i].set(j);
    });
  }
  return BooleanMatrix::from_rows(cols, std::move(rows));
}

EssentialReport essential_report(const BooleanMatrix& m) {
  EssentialReport r;
  r.essential = compute_essential(m);
  r.ones_input = m.ones();
  r.ones_essential = r.essential.ones();
  if (r.ones_input == 0) {
    r.zero_input = true;
    r.ratio = 1.0;
  } else {
    r.ratio = static_cast<double>(r.ones_essential) /
              static_cast<double>(r.ones_input);
  }
  return r;
}

bool in_B_E(const BooleanMatrix& m, const BooleanMatrix& essential,
            const FormalConcept& c) {
  if (!is_concept(m, c.extent, c.intent))
    throw std::invalid_argument("in_B_E: input is not a concept of the matrix");
  bool hit = false;
  c.extent.for_each([&](std::size_t i) {
    if (!hit && essential.row(i).intersects(c.intent)) hit = true;
  });
  return hit;
}

bool in_B_E(const BooleanMatrix& m, const FormalConcept& c) {
  return in_B_E(m, compute_essential(m), c);
}

FactorSet lift_to_concepts(const BooleanMatrix& m, const BooleanMatrix& a,
                           const BooleanMatrix& b) {
  BooleanMatrix prod = bool_product(a, b);
  if (!contained(prod, m))
    throw std::invalid_argument("lift_to_concepts: factorization is not from-below");

  FactorSet f;
  f.n_rows = m.n_rows();
  f.n_cols = m.n_cols();
  for (std::size_t l = 0; l < a.n_cols(); ++l) {
    Bitset intent = up(m, a.col(l));
    FormalConcept c{down(m, intent), std::move(intent)};
    if (std::find(f.concepts.begin(), f.concepts.end(), c) == f.concepts.end())
      f.concepts.push_back(std::move(c));
  }
  return f;
}

namespace {

// Branch on the first uncovered 1-cell: any exact cover must pick a concept
// covering it. Masks index the 1-cells of the matrix.
struct RankSearch {
  const std::vector<Bitset>& masks;
  const std::vector<std::vector<std::size_t>>& covering;  // per 1-cell
  std::size_t n_ones;

  bool coverable(const Bitset& covered, std::size_t depth_left) {
    if (covered.count() == n_ones) return true;
    if (depth_left == 0) return false;
    std::size_t cell = 0;
    for (std::size_t c = 0; c < n_ones; ++c)
      if (!covered.test(c)) {
        cell = c;
        break;
      }
    for (std::size_t idx : covering[cell]) {
      Bitset next = covered;
      next |= masks[idx];
      if (coverable(next, depth_left - 1)) return true;
    }
    return false;
  }
};

}  // namespace

std::size_t boolean_rank_oracle(const BooleanMatrix& m, bool restrict_to_b_e,
                                std::size_t max_concepts) {
  if (m.ones() == 0) return 0;

  std::vector<FormalConcept> concepts = enumerate_concepts(m, max_concepts);
  if (restrict_to_b_e) {
    BooleanMatrix ess = compute_essential(m);
    std::erase_if(concepts, [&](const FormalConcept& c) {
      return !in_B_E(m, ess, c);
    });
  }

  // Index the 1-cells row-major.
  std::vector<std::vector<std::size_t>> cell_index(m.n_rows());
  std::size_t n_ones = 0;
  for (std::size_t i = 0; i < m.n_rows(); ++i) {
    cell_index[i].assign(m.n_cols(), 0);
    m.row(i).for_each([&](std::size_t j) { cell_index[i][j] = n_ones++; });
  }

  std::vector<Bitset> masks;
  masks.reserve(concepts.size());
  for (const FormalConcept& c : concepts) {
    Bitset mask(n_ones);
    c.extent.for_each([&](std::size_t i) {
      (c.intent & m.row(i)).for_each([&](std::size_t j) {
        mask.set(cell_index[i][j]);
      });
    });
    masks.push_back(std::move(mask));
  }

  std::vector<std::vector<std::size_t>> covering(n_ones);
  for (std::size_t idx = 0; idx < masks.size(); ++idx)
    masks[idx].for_each([&](std::size_t c) { covering[c].push_back(idx); });
  for (std::size_t c = 0; c < n_ones; ++c)
    if (covering[c].empty())
      throw std::logic_error("rank oracle: a 1-cell lies in no candidate concept");

  std::size_t max_mask = 0;
  for (const Bitset& mask : masks) max_mask = std::max(max_mask, mask.count());

  RankSearch search{masks, covering, n_ones};
  std::size_t k = (n_ones + max_mask - 1) / max_mask;  // counting lower bound
  while (!search.coverable(Bitset(n_ones), k)) ++k;
  return k;
}

}  // namespace bmf
