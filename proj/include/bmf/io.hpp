#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "bmf/errors.hpp"
#include "bmf/matrix.hpp"

namespace bmf {

enum class MatrixFormat { dense, sparse };

MatrixFormat matrix_format_from_string(const std::string& s);

/// Dense text: one line per row, cells '0'/'1', optional single space or
/// comma separators. All rows must have the same width.
BooleanMatrix parse_dense(std::string_view text);
std::string format_dense(const BooleanMatrix& m);

/// Sparse text (FIMI style): each line lists the 0-based column indices of
/// that row's 1s; a blank line is an empty row. The column count comes from a
/// "#cols=m" header line or from `n_cols`; if both are present they must
/// agree. Lines starting with '#' are not rows.
BooleanMatrix parse_sparse(std::string_view text,
                           std::optional<std::size_t> n_cols = std::nullopt);
std::string format_sparse(const BooleanMatrix& m);  // writes the #cols header

BooleanMatrix load_matrix(const std::string& path, MatrixFormat format,
                          std::optional<std::size_t> sparse_cols = std::nullopt);
void save_matrix(const BooleanMatrix& m, const std::string& path,
                 MatrixFormat format);

/// Writes via a temp file in the same directory plus rename, so readers never
/// observe a partial file.
void atomic_write_file(const std::string& path, std::string_view content);

std::string read_file(const std::string& path);

}  // namespace bmf
