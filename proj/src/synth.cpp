#include "bmf/synth.hpp"

#include <stdexcept>

namespace bmf {

SynthSpec synth_preset(int set_number) {
  SynthSpec s;
  switch (set_number) {
    case 1: s = {300, 100, 20, 0.10, 0.10, 0, 1}; break;
    case 2: s = {500, 250, 20, 0.05, 0.05, 0, 1}; break;
    case 3: s = {500, 250, 20, 0.10, 0.05, 0, 1}; break;
    case 4: s = {500, 250, 30, 0.12, 0.12, 0, 1}; break;
    case 5: s = {1000, 500, 50, 0.10, 0.10, 0, 1}; break;
    case 6: s = {10000, 1000, 50, 0.10, 0.10, 0, 1}; break;
    default: throw std::invalid_argument("synth_preset: set number must be 1..6");
  }
  return s;
}

BooleanMatrix gen_boolean_matrix(std::size_t rows, std::size_t cols,
                                 double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0))
    throw std::invalid_argument("gen_boolean_matrix: density must lie in [0, 1]");
  std::vector<Bitset> out(rows, Bitset(cols));
  std::uint64_t counter = 0;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j, ++counter)
      if (rng::uniform01(seed, counter) < density) out[i].set(j);
  return BooleanMatrix::from_rows(cols, std::move(out));
}

std::vector<Dataset> gen_dataset(const SynthSpec& spec) {
  std::vector<Dataset> out;
  out.reserve(spec.count);
  for (std::size_t d = 0; d < spec.count; ++d) {
    std::uint64_t ds = rng::derive_seed(spec.seed, d);
    Dataset set;
    set.a_true = gen_boolean_matrix(spec.n_rows, spec.k_true, spec.dens_a,
                                    rng::derive_seed(ds, 0));
    set.b_true = gen_boolean_matrix(spec.k_true, spec.n_cols, spec.dens_b,
                                    rng::derive_seed(ds, 1));
    set.data = bool_product(set.a_true, set.b_true);
    out.push_back(std::move(set));
  }
  return out;
}

NoiseKind noise_kind_from_string(const std::string& s) {
  if (s == "additive") return NoiseKind::additive;
  if (s == "subtractive") return NoiseKind::subtractive;
  if (s == "general") return NoiseKind::general;
  throw std::invalid_argument("unknown noise kind: " + s);
}

std::string to_string(NoiseKind k) {
  switch (k) {
    case NoiseKind::additive: return "additive";
    case NoiseKind::subtractive: return "subtractive";
    case NoiseKind::general: return "general";
  }
  return "?";
}

BooleanMatrix add_noise(const BooleanMatrix& m, const NoiseSpec& spec) {
  if (!(spec.p >= 0.0 && spec.p <= 1.0))
    throw std::invalid_argument("add_noise: p must lie in [0, 1]");
  std::vector<Bitset> rows;
  rows.reserve(m.n_rows());
  for (std::size_t i = 0; i < m.n_rows(); ++i) rows.push_back(m.row(i));

  std::uint64_t counter = 0;
  for (std::size_t i = 0; i < m.n_rows(); ++i)
    for (std::size_t j = 0; j < m.n_cols(); ++j, ++counter) {
      bool one = m.at(i, j);
      bool eligible = spec.kind == NoiseKind::general ||
                      (spec.kind == NoiseKind::additive && !one) ||
                      (spec.kind == NoiseKind::subtractive && one);
      if (!eligible) continue;
      if (rng::uniform01(spec.seed, counter) < spec.p) {
        if (one)
          rows[i].reset(j);
        else
          rows[i].set(j);
      }
    }
  return BooleanMatrix::from_rows(m.n_cols(), std::move(rows));
}

std::string format_metadata(const SynthSpec& spec) {
  std::string out;
  out += "rows=" + std::to_string(spec.n_rows) + "\n";
  out += "cols=" + std::to_string(spec.n_cols) + "\n";
  out += "k=" + std::to_string(spec.k_true) + "\n";
  out += "dens_a=" + std::to_string(spec.dens_a) + "\n";
  out += "dens_b=" + std::to_string(spec.dens_b) + "\n";
  out += "seed=" + std::to_string(spec.seed) + "\n";
  out += "count=" + std::to_string(spec.count) + "\n";
  out += std::string("generator=") + rng::kGeneratorName + "\n";
  return out;
}

}  // namespace bmf
