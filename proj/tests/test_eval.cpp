#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bmf/essential.hpp"
#include "bmf/eval.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bmf;

TEST_CASE("coverage_quality on the 6x5 fixture") {
  BooleanMatrix i6 = fixtures::i6();
  FactorSet f = fixtures::i6_factors();
  CHECK(coverage_quality(i6, f, 0) == doctest::Approx(0.0));
  CHECK(coverage_quality(i6, f, 1) == doctest::Approx(6.0 / 16.0));
  CHECK(coverage_quality(i6, f, 2) == doctest::Approx(10.0 / 16.0));
  CHECK(coverage_quality(i6, f, 4) == doctest::Approx(1.0));
  CHECK_THROWS_AS(coverage_quality(i6, f, 5), std::invalid_argument);

  SUBCASE("matrix-pair form agrees") {
    auto [a, b] = factors_to_matrices(f, 4);
    for (std::size_t l = 0; l <= 4; ++l)
      CHECK(coverage_quality(i6, a, b, l) ==
            doctest::Approx(coverage_quality(i6, f, l)));
  }
}

TEST_CASE("coverage_curve") {
  BooleanMatrix i6 = fixtures::i6();
  FactorSet f = fixtures::i6_factors();
  CoverageCurve curve = coverage_curve(i6, f);
  REQUIRE(curve.values.size() == 5);
  CHECK(curve.values[0] == doctest::Approx(0.0));
  CHECK(curve.values.back() == doctest::Approx(1.0));
  CHECK(curve.exact());

  SUBCASE("incremental values equal per-prefix recomputation") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      BooleanMatrix m = oracle::random_matrix(8, 8, 0.5, seed + 10);
      if (m.ones() == 0) continue;
      FactorSet rand{8, 8, {}};
      for (std::size_t l = 0; l < 5; ++l)
        rand.concepts.push_back(
            {oracle::random_matrix(8, 1, 0.4, seed * 11 + l).col(0),
             oracle::random_matrix(1, 8, 0.4, seed * 17 + l).row(0)});
      CoverageCurve c = coverage_curve(m, rand);
      for (std::size_t l = 0; l <= rand.size(); ++l)
        CHECK(c.values[l] == doctest::Approx(coverage_quality(m, rand, l)));
    }
  }
  SUBCASE("from-below runs give monotone curves ending at 1") {
    BooleanMatrix m = oracle::random_matrix(12, 10, 0.4, 77);
    FactorizationResult r = grecond(m, 0);
    CoverageCurve c = coverage_curve(m.ones(), r);
    CHECK(c.exact());
    for (std::size_t l = 0; l + 1 < c.values.size(); ++l)
      CHECK(c.values[l] <= c.values[l + 1]);
    CoverageCurve direct = coverage_curve(m, r.factors);
    REQUIRE(direct.values.size() == c.values.size());
    for (std::size_t l = 0; l < c.values.size(); ++l)
      CHECK(direct.values[l] == doctest::Approx(c.values[l]));
  }
  SUBCASE("zero matrix convention") {
    CoverageCurve c = coverage_curve(BooleanMatrix(3, 3), FactorSet{3, 3, {}});
    CHECK(c.zero_matrix);
    REQUIRE(c.values.size() == 1);
    CHECK(c.values[0] == doctest::Approx(1.0));
  }
}

TEST_CASE("factors_for_coverage") {
  CoverageCurve curve{{0.0, 0.375, 0.625, 0.8, 1.0}, false};
  CHECK(factors_for_coverage(curve, 1.0) == 4);
  CHECK(factors_for_coverage(curve, 0.5) == 2);
  CHECK(factors_for_coverage(curve, 0.375) == 1);

  CoverageCurve plateau{{0.0, 0.4, 0.6, 0.6, 0.6}, false};
  CHECK(factors_for_coverage(plateau, 1.0) == std::nullopt);
  CHECK(factors_for_coverage(plateau, 0.6) == 2);

  CHECK_THROWS_AS(factors_for_coverage(curve, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(factors_for_coverage(curve, 1.2), std::invalid_argument);

  SUBCASE("monotone in the threshold") {
    std::optional<std::size_t> prev;
    for (double th : {0.1, 0.3, 0.5, 0.7, 0.9, 1.0}) {
      auto cur = factors_for_coverage(curve, th);
      if (prev && cur) CHECK(*cur >= *prev);
      prev = cur;
    }
  }
}

TEST_CASE("run_experiment") {
  ExperimentConfig cfg;
  cfg.spec = {24, 16, 5, 0.25, 0.25, 99, 8};
  cfg.algorithms = {Algorithm::grecond, Algorithm::greess};

  ExperimentReport report = run_experiment(cfg);
  REQUIRE(report.algorithms.size() == 2);
  REQUIRE(report.essential.size() == 8);

  SUBCASE("from-below mean curves are monotone and end exactly") {
    for (const auto& s : report.algorithms) {
      CHECK(s.mean_curve.front() == doctest::Approx(0.0));
      CHECK(s.mean_curve.back() == doctest::Approx(1.0));
      for (std::size_t l = 0; l + 1 < s.mean_curve.size(); ++l)
        CHECK(s.mean_curve[l] <= s.mean_curve[l + 1] + 1e-12);
      CHECK(s.threshold_factors.back().has_value());
    }
  }
  SUBCASE("essential rows match direct computation") {
    auto sets = gen_dataset(cfg.spec);
    for (std::size_t d = 0; d < sets.size(); ++d) {
      EssentialReport er = essential_report(sets[d].data);
      CHECK(report.essential[d].ones_input == er.ones_input);
      CHECK(report.essential[d].ones_essential == er.ones_essential);
    }
  }
  SUBCASE("thread pool merges deterministically") {
    ExperimentConfig par = cfg;
    par.threads = 4;
    ExperimentReport r2 = run_experiment(par);
    REQUIRE(r2.algorithms.size() == report.algorithms.size());
    for (std::size_t a = 0; a < report.algorithms.size(); ++a) {
      REQUIRE(r2.algorithms[a].mean_curve.size() ==
              report.algorithms[a].mean_curve.size());
      for (std::size_t l = 0; l < report.algorithms[a].mean_curve.size(); ++l)
        CHECK(r2.algorithms[a].mean_curve[l] ==
              report.algorithms[a].mean_curve[l]);
    }
    CHECK(format_curve_csv(r2) == format_curve_csv(report));
    CHECK(format_essential_csv(r2) == format_essential_csv(report));
  }
  SUBCASE("noise run scores against the noisy input by default") {
    ExperimentConfig noisy = cfg;
    noisy.spec.count = 3;
    noisy.noise = NoiseSpec{NoiseKind::general, 0.08, 5};
    noisy.algorithms = {Algorithm::grecond};
    ExperimentReport rn = run_experiment(noisy);
    CHECK(rn.algorithms[0].mean_curve.back() == doctest::Approx(1.0));
    auto sets = gen_dataset(noisy.spec);
    BooleanMatrix noised = add_noise(
        sets[0].data, {NoiseKind::general, 0.08, rng::derive_seed(5, 0)});
    CHECK(rn.essential[0].ones_input == noised.ones());
  }
}

TEST_CASE("csv formats") {
  ExperimentConfig cfg;
  cfg.spec = {12, 10, 3, 0.3, 0.3, 7, 2};
  cfg.algorithms = {Algorithm::grecond};
  cfg.thresholds = {0.5, 1.0};
  ExperimentReport report = run_experiment(cfg);

  std::string curve = format_curve_csv(report);
  CHECK(curve.rfind("algorithm,l,mean_coverage\n", 0) == 0);
  CHECK(curve.find("grecond,0,0.0000\n") != std::string::npos);

  std::string thr = format_thresholds_csv(report);
  CHECK(thr.rfind("algorithm,threshold,factors\n", 0) == 0);
  CHECK(thr.find("grecond,0.5000,") != std::string::npos);

  std::string ess = format_essential_csv(report);
  CHECK(ess.rfind("dataset,ones_I,ones_E,ratio\n", 0) == 0);

  SUBCASE("unreached thresholds are empty fields") {
    AlgorithmSummary s;
    s.algorithm = Algorithm::asso;
    s.mean_curve = {0.0, 0.5};
    s.threshold_factors = {std::nullopt};
    ExperimentReport r;
    r.thresholds = {1.0};
    r.algorithms = {s};
    CHECK(format_thresholds_csv(r).find("asso,1.0000,\n") != std::string::npos);
  }
}
