#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "liaison/ff_poly.hpp"

namespace liaison {

inline constexpr int kMaxMinorSize = 6;
inline constexpr int kMaxMatrixDim = 16;

/// m x n matrix of polynomials over a common F_p, the presentation O^n -> O^m.
class PolyMatrix {
 public:
  /// Zero matrix.
  PolyMatrix(std::uint32_t p, int rows, int cols);
  /// Throws DimensionMismatch for ragged rows and FieldMismatch for mixed primes.
  PolyMatrix(std::uint32_t p, std::vector<std::vector<FFPoly>> rows);

  /// One matrix row per line, entries separated by commas; '#' starts a
  /// comment and blank lines are skipped. Throws Parse.
  static PolyMatrix parse(std::string_view text, std::uint32_t p);
  static PolyMatrix read_file(const std::filesystem::path& path, std::uint32_t p);
  /// Column vector from entry texts.
  static PolyMatrix column(std::uint32_t p, const std::vector<std::string>& entries);

  std::uint32_t prime() const noexcept { return p_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  const FFPoly& at(int i, int j) const;
  void set(int i, int j, FFPoly value);
  int variables_used() const noexcept;

  PolyMatrix with_zero_rows(int k) const;
  PolyMatrix with_zero_cols(int k) const;
  /// Row i of the result is row perm[i] of this matrix.
  PolyMatrix with_rows_permuted(const std::vector<int>& perm) const;
  /// [this | other].
  PolyMatrix hconcat(const PolyMatrix& other) const;

  /// All size x size minors, row subsets outer and column subsets inner, each
  /// in lexicographic order. Laplace expansion with memoization; size is
  /// capped at kMaxMinorSize.
  std::vector<FFPoly> minors(int size) const;
  FFPoly determinant() const;

  /// Text in the format accepted by parse.
  std::string to_string() const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::uint32_t p_;
  int rows_;
  int cols_;
  std::vector<FFPoly> entries_;  // row-major
};

/// All k-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k);

}  // namespace liaison
