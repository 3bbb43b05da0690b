#include "bmf/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

namespace bmf {

namespace {

// Lines split on '\n'; a trailing newline does not create an extra line.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

MatrixFormat matrix_format_from_string(const std::string& s) {
  if (s == "dense") return MatrixFormat::dense;
  if (s == "sparse") return MatrixFormat::sparse;
  throw std::invalid_argument("unknown matrix format: " + s);
}

BooleanMatrix parse_dense(std::string_view text) {
  auto lines = split_lines(text);
  std::vector<Bitset> rows;
  std::size_t width = 0;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    std::string_view line = strip_cr(lines[ln]);
    std::vector<bool> cells;
    enum { kStart, kCell, kSep } prev = kStart;
    for (char ch : line) {
      if (ch == '0' || ch == '1') {
        cells.push_back(ch == '1');
        prev = kCell;
      } else if (ch == ' ' || ch == ',') {
        if (prev != kCell) throw ParseError(ln + 1, "unexpected separator");
        prev = kSep;
      } else {
        throw ParseError(ln + 1, std::string("invalid character '") + ch +
                                     "' in dense matrix");
      }
    }
    if (prev == kSep) throw ParseError(ln + 1, "trailing separator");
    if (rows.empty()) {
      width = cells.size();
    } else if (cells.size() != width) {
      throw ParseError(ln + 1, "ragged row: expected " + std::to_string(width) +
                                   " cells, got " + std::to_string(cells.size()));
    }
    Bitset row(cells.size());
    for (std::size_t j = 0; j < cells.size(); ++j)
      if (cells[j]) row.set(j);
    rows.push_back(std::move(row));
  }
  return BooleanMatrix::from_rows(width, std::move(rows));
}

std::string format_dense(const BooleanMatrix& m) {
  std::string out;
  out.reserve(m.n_rows() * (m.n_cols() + 1));
  for (std::size_t i = 0; i < m.n_rows(); ++i) {
    for (std::size_t j = 0; j < m.n_cols(); ++j)
      out.push_back(m.at(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

BooleanMatrix parse_sparse(std::string_view text,
                           std::optional<std::size_t> n_cols) {
  auto lines = split_lines(text);
  std::optional<std::size_t> header_cols;
  std::vector<std::vector<std::size_t>> row_indices;
  std::vector<std::size_t> row_lines;  // for error reporting

  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    std::string_view line = strip_cr(lines[ln]);
    if (!line.empty() && line.front() == '#') {
      constexpr std::string_view kColsKey = "#cols=";
      if (line.substr(0, kColsKey.size()) == kColsKey) {
        std::size_t v = 0;
        auto body = line.substr(kColsKey.size());
        auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
        if (ec != std::errc{} || p != body.data() + body.size())
          throw ParseError(ln + 1, "malformed #cols header");
        if (header_cols && *header_cols != v)
          throw ParseError(ln + 1, "conflicting #cols headers");
        header_cols = v;
      }
      continue;
    }
    std::vector<std::size_t> idx;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
      if (pos >= line.size()) break;
      std::size_t v = 0;
      auto [p, ec] =
          std::from_chars(line.data() + pos, line.data() + line.size(), v);
      if (ec != std::errc{} || p == line.data() + pos)
        throw ParseError(ln + 1, "malformed column index");
      pos = static_cast<std::size_t>(p - line.data());
      if (pos < line.size() && line[pos] != ' ' && line[pos] != '\t')
        throw ParseError(ln + 1, "malformed column index");
      idx.push_back(v);
    }
    row_indices.push_back(std::move(idx));
    row_lines.push_back(ln + 1);
  }

  if (n_cols && header_cols && *n_cols != *header_cols)
    throw ParseError(1, "declared column count disagrees with #cols header");
  std::optional<std::size_t> cols = header_cols ? header_cols : n_cols;
  if (!cols)
    throw ParseError(1, "sparse input needs a column count (#cols header or flag)");

  std::vector<Bitset> rows(row_indices.size(), Bitset(*cols));
  for (std::size_t r = 0; r < row_indices.size(); ++r)
    for (std::size_t j : row_indices[r]) {
      if (j >= *cols)
        throw ParseError(row_lines[r], "column index " + std::to_string(j) +
                                           " out of range (cols=" +
                                           std::to_string(*cols) + ")");
      rows[r].set(j);
    }
  return BooleanMatrix::from_rows(*cols, std::move(rows));
}

std::string format_sparse(const BooleanMatrix& m) {
  std::string out = "#cols=" + std::to_string(m.n_cols()) + "\n";
  for (std::size_t i = 0; i < m.n_rows(); ++i) {
    bool first = true;
    m.row(i).for_each([&](std::size_t j) {
      if (!first) out.push_back(' ');
      out += std::to_string(j);
      first = false;
    });
    out.push_back('\n');
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BooleanMatrix load_matrix(const std::string& path, MatrixFormat format,
                          std::optional<std::size_t> sparse_cols) {
  std::string text = read_file(path);
  return format == MatrixFormat::dense ? parse_dense(text)
                                       : parse_sparse(text, sparse_cols);
}

void save_matrix(const BooleanMatrix& m, const std::string& path,
                 MatrixFormat format) {
  atomic_write_file(
      path, format == MatrixFormat::dense ? format_dense(m) : format_sparse(m));
}

void atomic_write_file(const std::string& path, std::string_view content) {
  std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace bmf
