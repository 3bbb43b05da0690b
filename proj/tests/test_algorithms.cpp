#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bmf/algorithms.hpp"
#include "bmf/essential.hpp"
#include "bmf/synth.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bmf;

namespace {

BooleanMatrix identity(std::size_t n) {
  std::vector<Bitset> rows(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) rows[i].set(i);
  return BooleanMatrix::from_rows(n, std::move(rows));
}

void check_from_below_run(const BooleanMatrix& m, const FactorizationResult& r,
                          std::uint64_t epsilon) {
  CHECK(r.residual_overcovered == 0);
  CHECK(r.residual_uncovered <= epsilon);
  std::uint64_t prev = m.ones();
  for (std::size_t l = 0; l < r.per_step.size(); ++l) {
    CHECK(r.per_step[l].overcovered == 0);
    CHECK(r.per_step[l].uncovered <= prev);
    prev = r.per_step[l].uncovered;
    auto split = error_split(m, product_of_factors(r.factors, l + 1));
    CHECK(split.overcovered == 0);
    CHECK(split.uncovered == r.per_step[l].uncovered);
  }
  if (epsilon == 0) CHECK(product_of_factors(r.factors) == m);
}

}  // namespace

TEST_CASE("compute_intervals") {
  SUBCASE("identity: one singleton seed per 1") {
    IntervalSeedSet g = compute_intervals(identity(4));
    CHECK(g.seeds.size() == 4);
    for (const auto& s : g.seeds) {
      CHECK(s.ess_extent.count() == 1);
      CHECK(s.ess_intent.count() == 1);
    }
  }
  SUBCASE("all-ones: a single seed") {
    IntervalSeedSet g = compute_intervals(parse_dense("111\n111\n"));
    REQUIRE(g.seeds.size() == 1);
    CHECK(g.seeds[0].lift_extent == Bitset(2, true));
    CHECK(g.seeds[0].lift_intent == Bitset(3, true));
  }
  SUBCASE("lifted rectangles cover every essential cell") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      BooleanMatrix m =
          seed == 0 ? fixtures::i6() : oracle::random_matrix(8, 7, 0.4, seed);
      BooleanMatrix ess = compute_essential(m);
      IntervalSeedSet g = compute_intervals(m);
      BooleanMatrix covered(m.n_rows(), m.n_cols());
      for (const auto& s : g.seeds) {
        // each seed is a concept of the essential part
        CHECK(is_concept(ess, s.ess_extent, s.ess_intent));
        std::vector<Bitset> rows;
        for (std::size_t i = 0; i < m.n_rows(); ++i) {
          Bitset r = covered.row(i);
          if (s.lift_extent.test(i)) r |= s.lift_intent;
          rows.push_back(std::move(r));
        }
        covered = BooleanMatrix::from_rows(m.n_cols(), std::move(rows));
      }
      CHECK(contained(ess, covered));
      CHECK(contained(covered, m));
    }
  }
}

TEST_CASE("greess") {
  SUBCASE("exact at epsilon 0") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      BooleanMatrix m = oracle::random_matrix(10, 9, 0.4, seed + 500);
      check_from_below_run(m, greess(m, 0), 0);
    }
  }
  SUBCASE("epsilon = ||I|| yields no factors") {
    BooleanMatrix i6 = fixtures::i6();
    FactorizationResult r = greess(i6, i6.ones());
    CHECK(r.factors.size() == 0);
    CHECK(r.residual_uncovered == i6.ones());
  }
  SUBCASE("6x5 fixture: exact with at most one factor per seed") {
    BooleanMatrix i6 = fixtures::i6();
    IntervalSeedSet g = compute_intervals(i6);
    FactorizationResult r = greess(i6, 0);
    CHECK(product_of_factors(r.factors) == i6);
    CHECK(r.factors.size() <= g.seeds.size());
    CHECK(r.factors.size() <= 5);
  }
  SUBCASE("factors are concepts and honor their seed intervals") {
    BooleanMatrix m = oracle::random_matrix(9, 9, 0.45, 42);
    IntervalSeedSet g = compute_intervals(m);
    FactorizationResult r = greess(m, 0);
    CHECK(r.factors.size() <= g.seeds.size());
    for (const auto& c : r.factors.concepts) {
      CHECK(is_concept(m, c.extent, c.intent));
      bool from_some_seed = false;
      for (const auto& s : g.seeds)
        if (s.ess_extent.is_subset_of(c.extent) &&
            s.ess_intent.is_subset_of(c.intent))
          from_some_seed = true;
      CHECK(from_some_seed);
    }
  }
  SUBCASE("epsilon budget is respected without overshoot") {
    BooleanMatrix m = oracle::random_matrix(10, 10, 0.5, 77);
    for (std::uint64_t eps : {1u, 5u, 20u}) {
      FactorizationResult r = greess(m, eps);
      CHECK(r.residual_uncovered <= eps);
      check_from_below_run(m, r, eps);
    }
  }
  SUBCASE("max_factors caps the run") {
    BooleanMatrix m = oracle::random_matrix(12, 10, 0.4, 99);
    FactorizationResult full = greess(m, 0);
    if (full.factors.size() > 2) {
      FactorizationResult capped = greess(m, 0, 2);
      CHECK(capped.factors.size() == 2);
      CHECK(capped.per_step[1].uncovered == full.per_step[1].uncovered);
    }
  }
  SUBCASE("deterministic") {
    BooleanMatrix m = oracle::random_matrix(10, 8, 0.4, 123);
    FactorizationResult a = greess(m, 0), b = greess(m, 0);
    REQUIRE(a.factors.size() == b.factors.size());
    for (std::size_t l = 0; l < a.factors.size(); ++l)
      CHECK(a.factors.concepts[l] == b.factors.concepts[l]);
  }
}

TEST_CASE("grecond") {
  SUBCASE("all-ones needs one factor") {
    FactorizationResult r = grecond(parse_dense("111\n111\n"));
    CHECK(r.factors.size() == 1);
    CHECK(r.residual_uncovered == 0);
  }
  SUBCASE("identity needs n") {
    FactorizationResult r = grecond(identity(5));
    CHECK(r.factors.size() == 5);
  }
  SUBCASE("planted products: exact, strictly falling residual") {
    SynthSpec spec{30, 20, 8, 0.2, 0.2, 7, 5};
    for (const Dataset& d : gen_dataset(spec)) {
      FactorizationResult r = grecond(d.data, 0);
      check_from_below_run(d.data, r, 0);
      std::uint64_t prev = d.data.ones();
      for (const auto& s : r.per_step) {
        CHECK(s.uncovered < prev);
        prev = s.uncovered;
      }
    }
  }
  SUBCASE("emitted factors are concepts") {
    BooleanMatrix m = oracle::random_matrix(9, 9, 0.5, 31);
    for (const auto& c : grecond(m).factors.concepts)
      CHECK(is_concept(m, c.extent, c.intent));
  }
}

TEST_CASE("grecon") {
  SUBCASE("identity needs n") {
    CHECK(grecon(identity(4)).factors.size() == 4);
  }
  SUBCASE("6x5 fixture: exact, at least rank many factors") {
    BooleanMatrix i6 = fixtures::i6();
    FactorizationResult r = grecon(i6, 0);
    CHECK(product_of_factors(r.factors) == i6);
    CHECK(r.factors.size() >= boolean_rank_oracle(i6, false, 1000));
  }
  SUBCASE("cap is enforced") {
    CHECK_THROWS_AS(grecon(fixtures::i6(), 0, 3), CapExceeded);
  }
  SUBCASE("stays inside the greedy set-cover bound") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      BooleanMatrix m = oracle::random_matrix(6, 6, 0.5, seed + 600);
      if (m.ones() == 0) continue;
      FactorizationResult r = grecon(m, 0);
      std::size_t rank = boolean_rank_oracle(m, false, 4000);
      double bound = static_cast<double>(rank) *
                     (1.0 + std::log(static_cast<double>(m.ones())));
      CHECK(static_cast<double>(r.factors.size()) <= bound);
      CHECK(r.factors.size() >= rank);
    }
  }
}

TEST_CASE("all three from-below algorithms agree on exactness") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    BooleanMatrix m = oracle::random_matrix(8, 8, 0.45, seed + 700);
    std::size_t rank = m.ones() == 0 ? 0 : boolean_rank_oracle(m, false, 4000);
    for (auto run : {greess(m, 0), grecond(m, 0), grecon(m, 0)}) {
      CHECK(product_of_factors(run.factors) == m);
      CHECK(run.factors.size() >= rank);
      check_from_below_run(m, run, 0);
    }
  }
}

TEST_CASE("asso") {
  SUBCASE("identity with tau 1 decomposes exactly") {
    BooleanMatrix id = identity(4);
    AssoResult r = asso(id, 4, {1.0, 1.0, 1.0});
    CHECK(bool_product(r.usage, r.basis) == id);
    CHECK(r.result.residual_uncovered == 0);
    CHECK(r.result.residual_overcovered == 0);
  }
  SUBCASE("all-ones with k=1") {
    BooleanMatrix ones = parse_dense("111\n111\n");
    AssoResult r = asso(ones, 1);
    CHECK(bool_product(r.usage, r.basis) == ones);
  }
  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(asso(identity(3), 0), std::invalid_argument);
    CHECK_THROWS_AS(asso(identity(3), 2, {0.0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(asso(identity(3), 2, {1.5, 1, 1}), std::invalid_argument);
  }
  SUBCASE("per-step errors match the emitted matrices") {
    BooleanMatrix m = oracle::random_matrix(12, 10, 0.35, 800);
    AssoResult r = asso(m, 6);
    REQUIRE(r.usage.n_cols() == r.result.per_step.size());
    for (std::size_t l = 1; l <= r.result.per_step.size(); ++l) {
      auto split = error_split(m, product_of_factors(r.result.factors, l));
      CHECK(split.uncovered == r.result.per_step[l - 1].uncovered);
      CHECK(split.overcovered == r.result.per_step[l - 1].overcovered);
    }
  }
  SUBCASE("may refuse to cover everything") {
    // two attributes never confident about each other stay separate basis
    // vectors; a k=1 run must leave residual
    BooleanMatrix m = parse_dense("10\n01\n");
    AssoResult r = asso(m, 1, {1.0, 1.0, 1.0});
    CHECK(r.result.residual_uncovered > 0);
  }
}
