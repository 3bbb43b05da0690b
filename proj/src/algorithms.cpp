#include "bmf/algorithms.hpp"

#include <algorithm>
#include <stdexcept>

#include "bmf/essential.hpp"

namespace bmf {

namespace {

// Uncovered 1-cells, kept as per-row column sets.
struct Uncovered {
  std::vector<Bitset> rows;
  std::uint64_t total = 0;

  explicit Uncovered(const BooleanMatrix& m) : total(m.ones()) {
    rows.reserve(m.n_rows());
    for (std::size_t i = 0; i < m.n_rows(); ++i) rows.push_back(m.row(i));
  }

  std::uint64_t rect_gain(const Bitset& extent, const Bitset& intent) const {
    std::uint64_t g = 0;
    extent.for_each([&](std::size_t i) {
      g += Bitset::and_count(rows[i], intent);
    });
    return g;
  }

  void remove_rect(const Bitset& extent, const Bitset& intent) {
    extent.for_each([&](std::size_t i) {
      total -= Bitset::and_count(rows[i], intent);
      rows[i] -= intent;
    });
  }
};

}  // namespace

IntervalSeedSet compute_intervals(const BooleanMatrix& m) {
  BooleanMatrix ess = compute_essential(m);
  Uncovered u(ess);

  IntervalSeedSet out;
  out.n_rows = m.n_rows();
  out.n_cols = m.n_cols();

  while (u.total > 0) {
    Bitset intent(m.n_cols());              // D, closed in the essential part
    Bitset extent(ess.n_rows(), true);      // D↓ in the essential part
    Bitset lift_ext, lift_int;
    std::uint64_t score = 0;

    while (true) {
      std::size_t best_j = Bitset::npos;
      std::uint64_t best_score = score;
      Bitset best_ext, best_int, best_lift_ext, best_lift_int;

      for (std::size_t j = 0; j < m.n_cols(); ++j) {
        if (intent.test(j)) continue;
        Bitset cand_ext = extent & ess.col(j);
        Bitset cand_int = up(ess, cand_ext);
        Bitset cand_lift_ext = down(m, up(m, cand_ext));
        Bitset cand_lift_int = up(m, down(m, cand_int));
        std::uint64_t s = u.rect_gain(cand_lift_ext, cand_lift_int);
        if (s > best_score) {
          best_score = s;
          best_j = j;
          best_ext = std::move(cand_ext);
          best_int = std::move(cand_int);
          best_lift_ext = std::move(cand_lift_ext);
          best_lift_int = std::move(cand_lift_int);
        }
      }
      if (best_j == Bitset::npos) break;
      extent = std::move(best_ext);
      intent = std::move(best_int);
      lift_ext = std::move(best_lift_ext);
      lift_int = std::move(best_lift_int);
      score = best_score;
    }

    if (score == 0)
      throw std::logic_error("compute_intervals: no candidate covers an essential cell");

    IntervalSeed seed;
    seed.ess_extent = extent;
    seed.ess_intent = intent;
    seed.rows_j = down(m, intent);
    seed.cols_j = up(m, extent);
    seed.lift_extent = lift_ext;
    seed.lift_intent = lift_int;
    out.seeds.push_back(std::move(seed));

    u.remove_rect(lift_ext, lift_int);
  }
  return out;
}

namespace {

// Greedy attribute extension inside one interval's restricted context.
// Returns the best concept found and the number of uncovered cells it picks
// up; {<>, 0} if nothing in the interval helps.
std::pair<FormalConcept, std::uint64_t> search_interval(
    const BooleanMatrix& m, const IntervalSeed& seed, const Uncovered& u) {
  Bitset extent = seed.rows_j;  // extent of the empty intent within the context
  Bitset intent(m.n_cols());
  std::uint64_t score = 0;
  bool committed = false;

  while (true) {
    std::size_t best_j = Bitset::npos;
    std::uint64_t best_score = score;
    Bitset best_ext, best_int;

    for (std::size_t j = seed.cols_j.find_first(); j != Bitset::npos;
         j = seed.cols_j.find_from(j + 1)) {
      if (intent.test(j)) continue;
      Bitset cand_ext = extent & m.col(j);
      // Closing inside the context equals closing in the host matrix here:
      // the extent always contains the seed's generator rows, so its intent
      // cannot leave the context's columns.
      Bitset cand_int = up(m, cand_ext);
      std::uint64_t s = u.rect_gain(cand_ext, cand_int);
      if (s > best_score) {
        best_score = s;
        best_j = j;
        best_ext = std::move(cand_ext);
        best_int = std::move(cand_int);
      }
    }
    if (best_j == Bitset::npos) break;
    extent = std::move(best_ext);
    intent = std::move(best_int);
    score = best_score;
    committed = true;
  }

  if (!committed) return {FormalConcept{}, 0};
  return {FormalConcept{std::move(extent), std::move(intent)}, score};
}

}  // namespace

FactorizationResult greess(const BooleanMatrix& m, std::uint64_t epsilon,
                           std::optional<std::size_t> max_factors) {
  IntervalSeedSet seeds = compute_intervals(m);
  std::vector<bool> used(seeds.seeds.size(), false);

  Uncovered u(m);
  FactorizationResult res;
  res.factors.n_rows = m.n_rows();
  res.factors.n_cols = m.n_cols();

  while (u.total > epsilon &&
         (!max_factors || res.factors.size() < *max_factors)) {
    std::uint64_t best_score = 0;
    std::size_t best_seed = Bitset::npos;
    FormalConcept best_concept;

    for (std::size_t s = 0; s < seeds.seeds.size(); ++s) {
      if (used[s]) continue;
      auto [c, sc] = search_interval(m, seeds.seeds[s], u);
      if (sc > best_score) {
        best_score = sc;
        best_seed = s;
        best_concept = std::move(c);
      }
    }

    if (best_seed == Bitset::npos)
      throw std::logic_error(
          "greess: all remaining intervals have zero gain while 1s stay uncovered");

    used[best_seed] = true;
    u.remove_rect(best_concept.extent, best_concept.intent);
    res.factors.concepts.push_back(std::move(best_concept));
    res.per_step.push_back({u.total, 0});
  }

  res.residual_uncovered = u.total;
  res.residual_overcovered = 0;
  return res;
}

FactorizationResult grecond(const BooleanMatrix& m, std::uint64_t epsilon,
                            std::optional<std::size_t> max_factors) {
  Uncovered u(m);
  FactorizationResult res;
  res.factors.n_rows = m.n_rows();
  res.factors.n_cols = m.n_cols();

  while (u.total > epsilon &&
         (!max_factors || res.factors.size() < *max_factors)) {
    Bitset intent(m.n_cols());
    Bitset extent(m.n_rows(), true);
    std::uint64_t score = 0;

    while (true) {
      std::size_t best_j = Bitset::npos;
      std::uint64_t best_score = score;
      Bitset best_ext, best_int;
      for (std::size_t j = 0; j < m.n_cols(); ++j) {
        if (intent.test(j)) continue;
        Bitset cand_ext = extent & m.col(j);
        Bitset cand_int = up(m, cand_ext);
        std::uint64_t s = u.rect_gain(cand_ext, cand_int);
        if (s > best_score) {
          best_score = s;
          best_j = j;
          best_ext = std::move(cand_ext);
          best_int = std::move(cand_int);
        }
      }
      if (best_j == Bitset::npos) break;
      extent = std::move(best_ext);
      intent = std::move(best_int);
      score = best_score;
    }

    if (score == 0)
      throw std::logic_error("grecond: no attribute improves while 1s stay uncovered");

    u.remove_rect(extent, intent);
    res.factors.concepts.push_back({std::move(extent), std::move(intent)});
    res.per_step.push_back({u.total, 0});
  }

  res.residual_uncovered = u.total;
  res.residual_overcovered = 0;
  return res;
}

FactorizationResult grecon(const BooleanMatrix& m, std::uint64_t epsilon,
                           std::size_t max_concepts,
                           std::optional<std::size_t> max_factors) {
  std::vector<FormalConcept> concepts = enumerate_concepts(m, max_concepts);

  Uncovered u(m);
  FactorizationResult res;
  res.factors.n_rows = m.n_rows();
  res.factors.n_cols = m.n_cols();

  std::vector<bool> used(concepts.size(), false);
  while (u.total > epsilon &&
         (!max_factors || res.factors.size() < *max_factors)) {
    std::uint64_t best_gain = 0;
    std::size_t best = Bitset::npos;
    for (std::size_t c = 0; c < concepts.size(); ++c) {
      if (used[c]) continue;
      std::uint64_t g = u.rect_gain(concepts[c].extent, concepts[c].intent);
      if (g > best_gain) {
        best_gain = g;
        best = c;
      }
    }
    if (best == Bitset::npos)
      throw std::logic_error("grecon: no concept covers the remaining 1s");
    used[best] = true;
    u.remove_rect(concepts[best].extent, concepts[best].intent);
    res.factors.concepts.push_back(concepts[best]);
    res.per_step.push_back({u.total, 0});
  }

  res.residual_uncovered = u.total;
  res.residual_overcovered = 0;
  return res;
}

AssoResult asso(const BooleanMatrix& m, std::size_t k, AssoParams params) {
  if (k < 1) throw std::invalid_argument("asso: k must be at least 1");
  if (!(params.tau > 0.0 && params.tau <= 1.0))
    throw std::invalid_argument("asso: tau must lie in (0, 1]");

  const std::size_t n = m.n_rows(), cols = m.n_cols();

  // Candidate basis vectors: row j of the association matrix has a 1 at j'
  // iff conf({j} => {j'}) >= tau. Attributes with empty support give an
  // all-zero candidate.
  std::vector<Bitset> candidates(cols, Bitset(cols));
  for (std::size_t j = 0; j < cols; ++j) {
    std::uint64_t supp = m.col(j).count();
    if (supp == 0) continue;
    for (std::size_t j2 = 0; j2 < cols; ++j2) {
      std::uint64_t both = Bitset::and_count(m.col(j), m.col(j2));
      if (static_cast<double>(both) >= params.tau * static_cast<double>(supp))
        candidates[j].set(j2);
    }
  }

  std::vector<Bitset> covered(n, Bitset(cols));  // current model A∘B

  // Per-candidate gain of the best usage column against the current model.
  auto evaluate = [&](const Bitset& basis, Bitset& usage_out) {
    double total = 0.0;
    usage_out = Bitset(n);
    for (std::size_t i = 0; i < n; ++i) {
      Bitset fresh = basis - covered[i];
      std::uint64_t plus = Bitset::and_count(fresh, m.row(i));
      std::uint64_t minus = fresh.count() - plus;
      double gain = params.w_plus * static_cast<double>(plus) -
                    params.w_minus * static_cast<double>(minus);
      if (gain > 0.0) {
        usage_out.set(i);
        total += gain;
      }
    }
    return total;
  };

  // Candidates are tried in descending initial-gain order; each may be
  // selected at most once.
  std::vector<std::size_t> order(cols);
  for (std::size_t j = 0; j < cols; ++j) order[j] = j;
  {
    std::vector<double> initial(cols);
    Bitset ignored;
    for (std::size_t j = 0; j < cols; ++j)
      initial[j] = evaluate(candidates[j], ignored);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return initial[a] > initial[b];
    });
  }

  AssoResult out;
  out.result.factors.n_rows = n;
  out.result.factors.n_cols = cols;
  std::vector<bool> used(cols, false);
  std::vector<Bitset> usage_cols, basis_rows;

  std::size_t rounds = std::min(k, cols);
  for (std::size_t step = 0; step < rounds; ++step) {
    double best_gain = -1.0;
    std::size_t best_c = Bitset::npos;
    Bitset best_usage;
    for (std::size_t c : order) {
      if (used[c]) continue;
      Bitset usage;
      double gain = evaluate(candidates[c], usage);
      if (gain > best_gain) {
        best_gain = gain;
        best_c = c;
        best_usage = std::move(usage);
      }
    }
    used[best_c] = true;

    const Bitset& basis = candidates[best_c];
    best_usage.for_each([&](std::size_t i) { covered[i] |= basis; });
    usage_cols.push_back(best_usage);
    basis_rows.push_back(basis);
    out.result.factors.concepts.push_back({std::move(best_usage), basis});

    StepError e;
    for (std::size_t i = 0; i < n; ++i) {
      e.uncovered += Bitset::and_not_count(m.row(i), covered[i]);
      e.overcovered += Bitset::and_not_count(covered[i], m.row(i));
    }
    out.result.per_step.push_back(e);
  }

  if (!out.result.per_step.empty()) {
    out.result.residual_uncovered = out.result.per_step.back().uncovered;
    out.result.residual_overcovered = out.result.per_step.back().overcovered;
  } else {
    out.result.residual_uncovered = m.ones();
  }

  std::vector<Bitset> a_rows(n, Bitset(usage_cols.size()));
  for (std::size_t l = 0; l < usage_cols.size(); ++l)
    usage_cols[l].for_each([&](std::size_t i) { a_rows[i].set(l); });
  out.usage = BooleanMatrix::from_rows(usage_cols.size(), std::move(a_rows));
  out.basis = BooleanMatrix::from_rows(cols, std::move(basis_rows));
  return out;
}

Algorithm algorithm_from_string(const std::string& s) {
  if (s == "greess") return Algorithm::greess;
  if (s == "grecond") return Algorithm::grecond;
  if (s == "grecon") return Algorithm::grecon;
  if (s == "asso") return Algorithm::asso;
  throw std::invalid_argument("unknown algorithm: " + s);
}

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::greess: return "greess";
    case Algorithm::grecond: return "grecond";
    case Algorithm::grecon: return "grecon";
    case Algorithm::asso: return "asso";
  }
  return "?";
}

}  // namespace bmf
