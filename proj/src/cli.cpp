#include "bmf/cli.hpp"

#include <filesystem>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "bmf/algorithms.hpp"
#include "bmf/essential.hpp"
#include "bmf/eval.hpp"
#include "bmf/io.hpp"
#include "bmf/synth.hpp"

namespace bmf {

namespace {

struct InputOptions {
  std::string path;
  std::string format = "dense";
  std::optional<std::size_t> cols;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--input", in.path, "input matrix file")->required();
  cmd->add_option("--format", in.format, "matrix file format")
      ->check(CLI::IsMember({"dense", "sparse"}));
  cmd->add_option("--cols", in.cols,
                  "column count for sparse files without a #cols header");
}

BooleanMatrix load_input(const InputOptions& in) {
  return load_matrix(in.path, matrix_format_from_string(in.format), in.cols);
}

struct FactorizeOptions {
  InputOptions in;
  std::string algorithm;
  std::optional<std::uint64_t> epsilon;
  std::optional<std::size_t> max_factors;
  double tau = 0.85, w_plus = 1.0, w_minus = 1.0;
  std::size_t concept_cap = kDefaultGreconConceptCap;
  std::string out;
  std::string out_a, out_b, steps_csv;
};

int run_factorize(const FactorizeOptions& opt) {
  if (opt.epsilon && opt.max_factors)
    throw CLI::ValidationError("factorize",
                               "--epsilon and --max-factors are mutually exclusive");
  BooleanMatrix input = load_input(opt.in);
  Algorithm alg = algorithm_from_string(opt.algorithm);

  FactorizationResult res;
  if (alg == Algorithm::asso) {
    if (!opt.max_factors)
      throw CLI::ValidationError("factorize", "asso needs --max-factors (its k)");
    res = asso(input, *opt.max_factors, {opt.tau, opt.w_plus, opt.w_minus}).result;
  } else {
    std::uint64_t eps = opt.epsilon.value_or(0);
    switch (alg) {
      case Algorithm::greess: res = greess(input, eps, opt.max_factors); break;
      case Algorithm::grecond: res = grecond(input, eps, opt.max_factors); break;
      case Algorithm::grecon:
        res = grecon(input, eps, opt.concept_cap, opt.max_factors);
        break;
      default: break;
    }
  }

  atomic_write_file(opt.out, format_concept_list(res.factors.concepts));
  if (!opt.out_a.empty() || !opt.out_b.empty()) {
    auto [a, b] = factors_to_matrices(res.factors, res.factors.size());
    if (!opt.out_a.empty()) atomic_write_file(opt.out_a, format_dense(a));
    if (!opt.out_b.empty()) atomic_write_file(opt.out_b, format_dense(b));
  }
  if (!opt.steps_csv.empty()) {
    std::string csv = "step,e_u,e_o\n";
    for (std::size_t s = 0; s < res.per_step.size(); ++s)
      csv += std::to_string(s + 1) + "," +
             std::to_string(res.per_step[s].uncovered) + "," +
             std::to_string(res.per_step[s].overcovered) + "\n";
    atomic_write_file(opt.steps_csv, csv);
  }

  std::cerr << opt.algorithm << ": " << res.factors.size() << " factors, e_u="
            << res.residual_uncovered << ", e_o=" << res.residual_overcovered
            << "\n";
  return 0;
}

int run_essential(const InputOptions& in, const std::string& out) {
  BooleanMatrix input = load_input(in);
  EssentialReport report = essential_report(input);
  atomic_write_file(out, format_dense(report.essential));
  char line[128];
  std::snprintf(line, sizeof line, "ones_I=%llu, ones_E=%llu, ratio=%.4f",
                static_cast<unsigned long long>(report.ones_input),
                static_cast<unsigned long long>(report.ones_essential),
                report.ratio);
  std::cout << line;
  if (report.zero_input) std::cout << ", zero_input=1";
  std::cout << "\n";
  return 0;
}

int run_rank(const InputOptions& in, bool restrict_essential,
             std::size_t max_concepts) {
  BooleanMatrix input = load_input(in);
  std::cout << boolean_rank_oracle(input, restrict_essential, max_concepts)
            << "\n";
  return 0;
}

struct SynthOptions {
  SynthSpec spec;
  std::string out_dir;
  std::string format = "dense";
};

int run_synth(const SynthOptions& opt) {
  std::filesystem::create_directories(opt.out_dir);
  MatrixFormat fmt = matrix_format_from_string(opt.format);
  std::vector<Dataset> sets = gen_dataset(opt.spec);
  for (std::size_t d = 0; d < sets.size(); ++d) {
    char name[32];
    std::snprintf(name, sizeof name, "I_%04zu.%s", d, opt.format.c_str());
    save_matrix(sets[d].data, (std::filesystem::path(opt.out_dir) / name).string(),
                fmt);
  }
  atomic_write_file(
      (std::filesystem::path(opt.out_dir) / "metadata.txt").string(),
      format_metadata(opt.spec) + "format=" + opt.format + "\n");
  std::cerr << "wrote " << sets.size() << " matrices to " << opt.out_dir << "\n";
  return 0;
}

struct NoiseOptions {
  InputOptions in;
  std::string type = "general";
  double p = 0.0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_noise(const NoiseOptions& opt) {
  BooleanMatrix input = load_input(opt.in);
  NoiseSpec spec{noise_kind_from_string(opt.type), opt.p, opt.seed};
  save_matrix(add_noise(input, spec), opt.out,
              matrix_format_from_string(opt.in.format));
  return 0;
}

struct EvalOptions {
  ExperimentConfig config;
  std::vector<std::string> algorithms;
  std::string noise_type;
  double noise_p = 0.0;
  std::uint64_t noise_seed = 0;
  std::string out_dir;
};

int run_eval(EvalOptions& opt) {
  for (const std::string& a : opt.algorithms)
    opt.config.algorithms.push_back(algorithm_from_string(a));
  if (!opt.noise_type.empty())
    opt.config.noise =
        NoiseSpec{noise_kind_from_string(opt.noise_type), opt.noise_p, opt.noise_seed};

  ExperimentReport report = run_experiment(opt.config);
  std::filesystem::create_directories(opt.out_dir);
  auto dir = std::filesystem::path(opt.out_dir);
  atomic_write_file((dir / "curve.csv").string(), format_curve_csv(report));
  atomic_write_file((dir / "thresholds.csv").string(),
                    format_thresholds_csv(report));
  atomic_write_file((dir / "essential.csv").string(),
                    format_essential_csv(report));

  std::cerr << "mean density " << report.mean_density << ", mean essential ratio "
            << report.mean_essential_ratio << "\n";
  return 0;
}

}  // namespace

int dispatch(int argc, const char* const* argv) {
  CLI::App app{"Boolean matrix factorization workbench"};
  app.require_subcommand(1);

  FactorizeOptions fopt;
  CLI::App* fact = app.add_subcommand("factorize", "factorize a Boolean matrix");
  add_input_options(fact, fopt.in);
  fact->add_option("--algorithm", fopt.algorithm, "greess|grecond|grecon|asso")
      ->required()
      ->check(CLI::IsMember({"greess", "grecond", "grecon", "asso"}));
  fact->add_option("--epsilon", fopt.epsilon, "uncovered-1s budget (default 0)");
  fact->add_option("--max-factors", fopt.max_factors,
                   "stop after this many factors (asso: its k)");
  fact->add_option("--tau", fopt.tau, "asso confidence threshold");
  fact->add_option("--wplus", fopt.w_plus, "asso reward weight");
  fact->add_option("--wminus", fopt.w_minus, "asso penalty weight");
  fact->add_option("--concept-cap", fopt.concept_cap,
                   "grecon enumeration safety cap");
  fact->add_option("--out", fopt.out, "concept list output")->required();
  fact->add_option("--out-a", fopt.out_a, "dense dump of the object-factor matrix");
  fact->add_option("--out-b", fopt.out_b, "dense dump of the factor-attribute matrix");
  fact->add_option("--steps-csv", fopt.steps_csv, "per-step error CSV");

  InputOptions eopt_in;
  std::string eopt_out;
  CLI::App* ess = app.add_subcommand("essential", "compute the essential part");
  add_input_options(ess, eopt_in);
  ess->add_option("--out", eopt_out, "dense output for the essential matrix")
      ->required();

  InputOptions ropt_in;
  bool restrict_essential = false;
  std::size_t max_concepts = kDefaultRankConceptCap;
  CLI::App* rank = app.add_subcommand("rank", "exact Boolean rank (small inputs)");
  add_input_options(rank, ropt_in);
  rank->add_flag("--restrict-essential", restrict_essential,
                 "search only concepts covering an essential cell");
  rank->add_option("--max-concepts", max_concepts, "concept safety cap");

  SynthOptions sopt;
  CLI::App* synth = app.add_subcommand("synth", "generate planted-product data");
  synth->add_option("--rows", sopt.spec.n_rows)->required();
  synth->add_option("--cols", sopt.spec.n_cols)->required();
  synth->add_option("--k", sopt.spec.k_true)->required();
  synth->add_option("--dens-a", sopt.spec.dens_a)->required();
  synth->add_option("--dens-b", sopt.spec.dens_b)->required();
  synth->add_option("--seed", sopt.spec.seed)->required();
  synth->add_option("--count", sopt.spec.count)->required();
  synth->add_option("--out-dir", sopt.out_dir)->required();
  synth->add_option("--out-format", sopt.format, "dense|sparse")
      ->check(CLI::IsMember({"dense", "sparse"}));

  NoiseOptions nopt;
  CLI::App* noise = app.add_subcommand("noise", "flip cells at random");
  add_input_options(noise, nopt.in);
  noise->add_option("--type", nopt.type, "additive|subtractive|general")
      ->check(CLI::IsMember({"additive", "subtractive", "general"}));
  noise->add_option("--p", nopt.p, "flip probability")->required();
  noise->add_option("--seed", nopt.seed)->required();
  noise->add_option("--out", nopt.out)->required();

  EvalOptions vopt;
  CLI::App* eval = app.add_subcommand("eval", "batch coverage experiment");
  eval->add_option("--rows", vopt.config.spec.n_rows)->required();
  eval->add_option("--cols", vopt.config.spec.n_cols)->required();
  eval->add_option("--k", vopt.config.spec.k_true)->required();
  eval->add_option("--dens-a", vopt.config.spec.dens_a)->required();
  eval->add_option("--dens-b", vopt.config.spec.dens_b)->required();
  eval->add_option("--seed", vopt.config.spec.seed)->required();
  eval->add_option("--count", vopt.config.spec.count)->required();
  eval->add_option("--algorithms", vopt.algorithms, "comma-separated list")
      ->required()
      ->delimiter(',');
  eval->add_option("--epsilon", vopt.config.epsilon);
  eval->add_option("--max-factors", vopt.config.max_factors);
  eval->add_option("--noise-type", vopt.noise_type,
                   "additive|subtractive|general");
  eval->add_option("--noise-p", vopt.noise_p);
  eval->add_option("--noise-seed", vopt.noise_seed);
  eval->add_option("--thresholds", vopt.config.thresholds)->delimiter(',');
  eval->add_option("--threads", vopt.config.threads);
  eval->add_flag("--against-clean", vopt.config.measure_against_clean,
                 "score coverage against the pre-noise matrix");
  eval->add_option("--out-dir", vopt.out_dir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // CLI11 uses its own exit-code scheme; fold every usage problem into 1.
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (fact->parsed()) return run_factorize(fopt);
    if (ess->parsed()) return run_essential(eopt_in, eopt_out);
    if (rank->parsed())
      return run_rank(ropt_in, restrict_essential, max_concepts);
    if (synth->parsed()) return run_synth(sopt);
    if (noise->parsed()) return run_noise(nopt);
    if (eval->parsed()) return run_eval(vopt);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what()
              << " (raise the cap or shrink the input)\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

int dispatch(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("bmf");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return dispatch(static_cast<int>(argv.size()), argv.data());
}

}  // namespace bmf
