#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bmf/algorithms.hpp"
#include "bmf/matrix.hpp"
#include "bmf/synth.hpp"

namespace bmf {

/// Coverage quality c_0..c_k of the factor prefixes: c_l = 1 - E(I, first l
/// factors)/||I||. For an all-zero input, every value is 1 and `zero_matrix`
/// is set.
struct CoverageCurve {
  std::vector<double> values;  // length k+1
  bool zero_matrix = false;

  std::size_t factor_count() const { return values.empty() ? 0 : values.size() - 1; }
  bool exact() const { return !values.empty() && values.back() >= 1.0; }
};

double coverage_quality(const BooleanMatrix& m, const FactorSet& f,
                        std::size_t l);
double coverage_quality(const BooleanMatrix& m, const BooleanMatrix& a,
                        const BooleanMatrix& b, std::size_t l);

/// Whole curve in one pass over a cumulative cover, no re-multiplication.
CoverageCurve coverage_curve(const BooleanMatrix& m, const FactorSet& f);

/// Curve from a factorization's recorded per-step errors.
CoverageCurve coverage_curve(std::uint64_t ones,
                             const FactorizationResult& result);

/// Smallest l with c_l >= threshold; nullopt (reported NA) if never reached.
std::optional<std::size_t> factors_for_coverage(const CoverageCurve& curve,
                                                double threshold);

struct ExperimentConfig {
  SynthSpec spec;
  std::vector<Algorithm> algorithms;
  std::optional<NoiseSpec> noise;
  std::uint64_t epsilon = 0;
  std::optional<std::size_t> max_factors;  // required stop criterion for asso
  std::vector<double> thresholds = {0.25, 0.5, 0.75, 1.0};
  bool measure_against_clean = false;  // default: score against the input matrix
  std::size_t threads = 1;
};

struct AlgorithmSummary {
  Algorithm algorithm;
  std::vector<double> mean_curve;                        // index l
  std::vector<std::optional<std::size_t>> threshold_factors;  // per threshold
  double seconds = 0.0;
};

struct EssentialRow {
  std::size_t dataset = 0;
  std::uint64_t ones_input = 0;
  std::uint64_t ones_essential = 0;
  double ratio = 1.0;
};

struct ExperimentReport {
  std::vector<AlgorithmSummary> algorithms;
  std::vector<EssentialRow> essential;
  std::vector<double> thresholds;
  double mean_essential_ratio = 0.0;
  double mean_density = 0.0;
};

/// Generates the datasets, runs every algorithm on each (after optional
/// noise), and aggregates per-l mean coverage plus essential-part ratios.
/// Aggregation always folds in dataset-index order, so the report does not
/// depend on scheduling.
ExperimentReport run_experiment(const ExperimentConfig& config);

std::string format_curve_csv(const ExperimentReport& report);
std::string format_thresholds_csv(const ExperimentReport& report);
std::string format_essential_csv(const ExperimentReport& report);

}  // namespace bmf
