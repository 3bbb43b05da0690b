#pragma once

#include "bmf/galois.hpp"
#include "bmf/io.hpp"
#include "bmf/matrix.hpp"

namespace fixtures {

// 6x5 workhorse matrix; rows 0..5, columns 0..4 (a..e).
inline bmf::BooleanMatrix i6() {
  return bmf::parse_dense(
      "11010\n"
      "10011\n"
      "01100\n"
      "00010\n"
      "11110\n"
      "11001\n");
}

// The four-factor exact decomposition of i6.
inline bmf::FactorSet i6_factors() {
  bmf::FactorSet f;
  f.n_rows = 6;
  f.n_cols = 5;
  f.concepts = {
      {bmf::Bitset::of(6, {0, 4, 5}), bmf::Bitset::of(5, {0, 1})},
      {bmf::Bitset::of(6, {0, 1, 3, 4}), bmf::Bitset::of(5, {3})},
      {bmf::Bitset::of(6, {1, 5}), bmf::Bitset::of(5, {0, 4})},
      {bmf::Bitset::of(6, {2, 4}), bmf::Bitset::of(5, {1, 2})},
  };
  return f;
}

// Essential cells of i6.
inline bmf::BooleanMatrix i6_essential() {
  return bmf::BooleanMatrix::from_cells(
      6, 5, {{0, 0}, {0, 1}, {1, 4}, {2, 2}, {3, 3}, {5, 1}, {5, 4}});
}

// 4x5 matrix with Boolean rank 3 whose essential part has rank 4.
inline bmf::BooleanMatrix rank_gap() {
  return bmf::parse_dense(
      "10111\n"
      "01101\n"
      "01001\n"
      "10110\n");
}

inline bmf::BooleanMatrix rank_gap_a() {
  return bmf::parse_dense("110\n011\n001\n100\n");
}

inline bmf::BooleanMatrix rank_gap_b() {
  return bmf::parse_dense("10110\n00101\n01001\n");
}

inline bmf::BooleanMatrix rank_gap_essential() {
  return bmf::parse_dense(
      "00001\n"
      "00100\n"
      "01000\n"
      "10010\n");
}

// 3x4 matrix whose column-0 concept covers no essential cell.
inline bmf::BooleanMatrix spine() {
  return bmf::parse_dense(
      "1100\n"
      "1010\n"
      "1001\n");
}

}  // namespace fixtures
