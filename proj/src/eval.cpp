#include "bmf/eval.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "bmf/essential.hpp"

namespace bmf {

namespace {

double coverage_from_error(std::uint64_t ones, std::uint64_t err) {
  return 1.0 - static_cast<double>(err) / static_cast<double>(ones);
}

}  // namespace

double coverage_quality(const BooleanMatrix& m, const FactorSet& f,
                        std::size_t l) {
  if (l > f.size())
    throw std::invalid_argument("coverage_quality: prefix exceeds factor count");
  if (m.ones() == 0) return 1.0;
  return coverage_from_error(m.ones(), error(m, product_of_factors(f, l)));
}

double coverage_quality(const BooleanMatrix& m, const BooleanMatrix& a,
                        const BooleanMatrix& b, std::size_t l) {
  if (l > a.n_cols())
    throw std::invalid_argument("coverage_quality: prefix exceeds factor count");
  if (m.ones() == 0) return 1.0;
  std::vector<Bitset> rows(a.n_rows(), Bitset(b.n_cols()));
  for (std::size_t i = 0; i < a.n_rows(); ++i)
    a.row(i).for_each([&](std::size_t p) {
      if (p < l) rows[i] |= b.row(p);
    });
  BooleanMatrix prefix = BooleanMatrix::from_rows(b.n_cols(), std::move(rows));
  return coverage_from_error(m.ones(), error(m, prefix));
}

CoverageCurve coverage_curve(const BooleanMatrix& m, const FactorSet& f) {
  CoverageCurve curve;
  if (m.ones() == 0) {
    curve.zero_matrix = true;
    curve.values.assign(f.size() + 1, 1.0);
    return curve;
  }
  std::vector<Bitset> covered(m.n_rows(), Bitset(m.n_cols()));
  std::uint64_t miss = m.ones(), extra = 0;
  curve.values.push_back(0.0);
  for (const FormalConcept& c : f.concepts) {
    c.extent.for_each([&](std::size_t i) {
      Bitset fresh = c.intent - covered[i];
      miss -= Bitset::and_count(fresh, m.row(i));
      extra += Bitset::and_not_count(fresh, m.row(i));
      covered[i] |= c.intent;
    });
    curve.values.push_back(coverage_from_error(m.ones(), miss + extra));
  }
  return curve;
}

CoverageCurve coverage_curve(std::uint64_t ones,
                             const FactorizationResult& result) {
  CoverageCurve curve;
  if (ones == 0) {
    curve.zero_matrix = true;
    curve.values.assign(result.per_step.size() + 1, 1.0);
    return curve;
  }
  curve.values.push_back(0.0);
  for (const StepError& e : result.per_step)
    curve.values.push_back(coverage_from_error(ones, e.uncovered + e.overcovered));
  return curve;
}

std::optional<std::size_t> factors_for_coverage(const CoverageCurve& curve,
                                                double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0))
    throw std::invalid_argument("factors_for_coverage: threshold must lie in (0, 1]");
  for (std::size_t l = 0; l < curve.values.size(); ++l)
    if (curve.values[l] >= threshold) return l;
  return std::nullopt;
}

namespace {

struct DatasetOutcome {
  std::vector<CoverageCurve> curves;  // one per algorithm
  std::vector<double> seconds;
  EssentialRow essential;
  double density = 0.0;
};

FactorizationResult run_algorithm(Algorithm alg, const BooleanMatrix& input,
                                  const ExperimentConfig& cfg) {
  switch (alg) {
    case Algorithm::greess:
      return greess(input, cfg.epsilon, cfg.max_factors);
    case Algorithm::grecond:
      return grecond(input, cfg.epsilon, cfg.max_factors);
    case Algorithm::grecon:
      return grecon(input, cfg.epsilon, kDefaultGreconConceptCap, cfg.max_factors);
    case Algorithm::asso: {
      std::size_t k = cfg.max_factors.value_or(cfg.spec.k_true);
      if (k == 0) k = 1;
      return asso(input, k).result;
    }
  }
  throw std::logic_error("run_algorithm: unhandled algorithm");
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config) {
  std::vector<Dataset> datasets = gen_dataset(config.spec);
  std::vector<DatasetOutcome> outcomes(datasets.size());

  auto process = [&](std::size_t d) {
    const BooleanMatrix& clean = datasets[d].data;
    BooleanMatrix input = clean;
    if (config.noise) {
      NoiseSpec per = *config.noise;
      per.seed = rng::derive_seed(config.noise->seed, d);
      input = add_noise(clean, per);
    }

    DatasetOutcome& out = outcomes[d];
    EssentialReport er = essential_report(input);
    out.essential = {d, er.ones_input, er.ones_essential, er.ratio};
    out.density = static_cast<double>(input.ones()) /
                  static_cast<double>(std::max<std::size_t>(
                      1, input.n_rows() * input.n_cols()));

    for (Algorithm alg : config.algorithms) {
      auto t0 = std::chrono::steady_clock::now();
      FactorizationResult res = run_algorithm(alg, input, config);
      std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
      CoverageCurve curve = config.measure_against_clean
                                ? coverage_curve(clean, res.factors)
                                : coverage_curve(input.ones(), res);
      out.curves.push_back(std::move(curve));
      out.seconds.push_back(dt.count());
    }
  };

  if (config.threads <= 1 || datasets.size() <= 1) {
    for (std::size_t d = 0; d < datasets.size(); ++d) process(d);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t d = next.fetch_add(1); d < datasets.size();
           d = next.fetch_add(1))
        process(d);
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < config.threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Merge in dataset-index order regardless of which worker ran what.
  ExperimentReport report;
  report.thresholds = config.thresholds;
  for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
    AlgorithmSummary summary;
    summary.algorithm = config.algorithms[a];

    std::size_t max_len = 0;
    for (const auto& out : outcomes)
      max_len = std::max(max_len, out.curves[a].values.size());
    summary.mean_curve.assign(max_len, 0.0);
    for (const auto& out : outcomes) {
      const auto& v = out.curves[a].values;
      for (std::size_t l = 0; l < max_len; ++l)
        summary.mean_curve[l] += l < v.size() ? v[l] : v.back();
      summary.seconds += out.seconds[a];
    }
    for (double& v : summary.mean_curve)
      v /= static_cast<double>(outcomes.size());

    CoverageCurve mean{summary.mean_curve, false};
    for (double th : config.thresholds)
      summary.threshold_factors.push_back(factors_for_coverage(mean, th));
    report.algorithms.push_back(std::move(summary));
  }

  for (const auto& out : outcomes) {
    report.essential.push_back(out.essential);
    report.mean_essential_ratio += out.essential.ratio;
    report.mean_density += out.density;
  }
  if (!outcomes.empty()) {
    report.mean_essential_ratio /= static_cast<double>(outcomes.size());
    report.mean_density /= static_cast<double>(outcomes.size());
  }
  return report;
}

namespace {

std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

std::string format_curve_csv(const ExperimentReport& report) {
  std::string out = "algorithm,l,mean_coverage\n";
  for (const auto& s : report.algorithms)
    for (std::size_t l = 0; l < s.mean_curve.size(); ++l)
      out += to_string(s.algorithm) + "," + std::to_string(l) + "," +
             fmt4(s.mean_curve[l]) + "\n";
  return out;
}

std::string format_thresholds_csv(const ExperimentReport& report) {
  std::string out = "algorithm,threshold,factors\n";
  for (const auto& s : report.algorithms)
    for (std::size_t t = 0; t < report.thresholds.size(); ++t) {
      out += to_string(s.algorithm) + "," + fmt4(report.thresholds[t]) + ",";
      if (s.threshold_factors[t]) out += std::to_string(*s.threshold_factors[t]);
      out += "\n";
    }
  return out;
}

std::string format_essential_csv(const ExperimentReport& report) {
  std::string out = "dataset,ones_I,ones_E,ratio\n";
  for (const auto& row : report.essential)
    out += std::to_string(row.dataset) + "," + std::to_string(row.ones_input) +
           "," + std::to_string(row.ones_essential) + "," + fmt4(row.ratio) +
           "\n";
  return out;
}

}  // namespace bmf
