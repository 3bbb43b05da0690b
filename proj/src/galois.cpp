#include "bmf/galois.hpp"

#include <charconv>

namespace bmf {

Bitset index_set(std::size_t universe, std::span<const std::size_t> indices) {
  Bitset b(universe);
  for (std::size_t i : indices) {
    if (i >= universe)
      throw std::out_of_range("index " + std::to_string(i) +
                              " out of range (universe " +
                              std::to_string(universe) + ")");
    b.set(i);
  }
  return b;
}

Bitset index_set(std::size_t universe,
                 std::initializer_list<std::size_t> indices) {
  return index_set(universe,
                   std::span<const std::size_t>(indices.begin(), indices.size()));
}

Bitset up(const BooleanMatrix& m, const Bitset& rows) {
  if (rows.size() != m.n_rows())
    throw std::invalid_argument("up: row set size does not match matrix");
  Bitset out(m.n_cols(), true);
  rows.for_each([&](std::size_t i) { out &= m.row(i); });
  return out;
}

Bitset down(const BooleanMatrix& m, const Bitset& cols) {
  if (cols.size() != m.n_cols())
    throw std::invalid_argument("down: column set size does not match matrix");
  Bitset out(m.n_rows(), true);
  cols.for_each([&](std::size_t j) { out &= m.col(j); });
  return out;
}

FormalConcept object_concept(const BooleanMatrix& m, std::size_t i) {
  if (i >= m.n_rows()) throw std::out_of_range("object_concept: row out of range");
  const Bitset& intent = m.row(i);
  return {down(m, intent), intent};
}

FormalConcept attribute_concept(const BooleanMatrix& m, std::size_t j) {
  if (j >= m.n_cols())
    throw std::out_of_range("attribute_concept: column out of range");
  const Bitset& extent = m.col(j);
  return {extent, up(m, extent)};
}

bool is_concept(const BooleanMatrix& m, const Bitset& extent,
                const Bitset& intent) {
  return up(m, extent) == intent && down(m, intent) == extent;
}

std::vector<FormalConcept> enumerate_concepts(
    const BooleanMatrix& m, std::optional<std::size_t> max_concepts) {
  const std::size_t cols = m.n_cols();
  std::vector<FormalConcept> out;

  auto emit = [&](Bitset extent, Bitset intent) {
    if (max_concepts && out.size() >= *max_concepts)
      throw CapExceeded("concept count exceeds cap of " +
                        std::to_string(*max_concepts));
    out.push_back({std::move(extent), std::move(intent)});
  };

  Bitset full(cols, true);
  Bitset intent = up(m, down(m, Bitset(cols)));  // closure of the empty set
  emit(down(m, intent), intent);

  // NextClosure: repeatedly step to the lectically next closed intent.
  while (intent != full) {
    bool advanced = false;
    for (std::size_t jj = cols; jj-- > 0;) {
      if (intent.test(jj)) continue;
      Bitset candidate(cols);
      // candidate = closure((intent ∩ {0..jj-1}) ∪ {jj})
      {
        Bitset seed(cols);
        intent.for_each([&](std::size_t k) {
          if (k < jj) seed.set(k);
        });
        seed.set(jj);
        candidate = down_up(m, seed);
      }
      if (candidate.equal_below(intent, jj)) {
        emit(down(m, candidate), candidate);
        intent = std::move(candidate);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;  // unreachable: the full set is always closed
  }
  return out;
}

Interval interval(const BooleanMatrix& m, const Bitset& c, const Bitset& d) {
  Bitset c_up = up(m, c);
  Bitset d_down = down(m, d);
  Interval out;
  out.lower = {down(m, c_up), std::move(c_up)};
  out.upper = {d_down, up(m, d_down)};
  out.gen_rows = c;
  out.gen_cols = d;
  return out;
}

std::vector<FormalConcept> interval_concepts(const BooleanMatrix& m,
                                             const Bitset& c, const Bitset& d) {
  // Non-empty iff C×D is contained in the matrix: every generator row must
  // carry every generator column.
  bool ok = true;
  c.for_each([&](std::size_t i) {
    if (!d.is_subset_of(m.row(i))) ok = false;
  });
  if (!ok)
    throw std::invalid_argument(
        "interval_concepts: interval is empty (generators not jointly in the matrix)");

  Bitset sub_rows = down(m, d);
  Bitset sub_cols = up(m, c);
  std::vector<std::size_t> row_of = sub_rows.to_indices();
  std::vector<std::size_t> col_of = sub_cols.to_indices();

  std::vector<Bitset> rows(row_of.size(), Bitset(col_of.size()));
  for (std::size_t r = 0; r < row_of.size(); ++r)
    for (std::size_t cc = 0; cc < col_of.size(); ++cc)
      if (m.at(row_of[r], col_of[cc])) rows[r].set(cc);
  BooleanMatrix restricted =
      BooleanMatrix::from_rows(col_of.size(), std::move(rows));

  std::vector<FormalConcept> out;
  for (const FormalConcept& sub : enumerate_concepts(restricted)) {
    FormalConcept host{Bitset(m.n_rows()), Bitset(m.n_cols())};
    sub.extent.for_each([&](std::size_t r) { host.extent.set(row_of[r]); });
    sub.intent.for_each([&](std::size_t cc) { host.intent.set(col_of[cc]); });
    out.push_back(std::move(host));
  }
  return out;
}

bool interval_contained(const BooleanMatrix& m, std::size_t i, std::size_t j,
                        std::size_t i2, std::size_t j2) {
  if (i >= m.n_rows() || i2 >= m.n_rows() || j >= m.n_cols() ||
      j2 >= m.n_cols())
    throw std::out_of_range("interval_contained: cell out of range");
  if (!m.at(i, j) || !m.at(i2, j2))
    throw std::invalid_argument("interval_contained: both cells must contain 1");
  return m.row(i).is_subset_of(m.row(i2)) && m.col(j).is_subset_of(m.col(j2));
}

std::string format_concept_list(std::span<const FormalConcept> concepts) {
  std::string out;
  for (const FormalConcept& c : concepts) {
    out += "extent:";
    c.extent.for_each([&](std::size_t i) { out += " " + std::to_string(i); });
    out += " | intent:";
    c.intent.for_each([&](std::size_t j) { out += " " + std::to_string(j); });
    out.push_back('\n');
  }
  return out;
}

namespace {

std::vector<std::size_t> parse_index_run(std::string_view body, std::size_t ln) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos < body.size()) {
    while (pos < body.size() && body[pos] == ' ') ++pos;
    if (pos >= body.size()) break;
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(body.data() + pos, body.data() + body.size(), v);
    if (ec != std::errc{} || p == body.data() + pos)
      throw ParseError(ln, "malformed index in concept list");
    pos = static_cast<std::size_t>(p - body.data());
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<FormalConcept> parse_concept_list(std::string_view text,
                                              std::size_t n_rows,
                                              std::size_t n_cols) {
  std::vector<FormalConcept> out;
  std::size_t ln = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++ln;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    constexpr std::string_view kExtent = "extent:";
    std::size_t bar = line.find('|');
    constexpr std::string_view kIntent = "intent:";
    if (line.substr(0, kExtent.size()) != kExtent ||
        bar == std::string_view::npos ||
        line.substr(bar + 1).find(kIntent) == std::string_view::npos)
      throw ParseError(ln, "malformed concept line");
    std::string_view ext_body = line.substr(kExtent.size(), bar - kExtent.size());
    std::string_view int_body =
        line.substr(line.find(kIntent, bar) + kIntent.size());

    FormalConcept c{Bitset(n_rows), Bitset(n_cols)};
    for (std::size_t i : parse_index_run(ext_body, ln)) {
      if (i >= n_rows) throw ParseError(ln, "extent index out of range");
      c.extent.set(i);
    }
    for (std::size_t j : parse_index_run(int_body, ln)) {
      if (j >= n_cols) throw ParseError(ln, "intent index out of range");
      c.intent.set(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace bmf
