#include "liaison/poly_matrix.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "liaison/error.hpp"
#include "liaison/io.hpp"

namespace liaison {

namespace {

void check_dims(int rows, int cols) {
  if (rows < 0 || cols < 0 || rows > kMaxMatrixDim || cols > kMaxMatrixDim) {
    throw Error(ErrorCode::DimensionMismatch,
                "matrix dimensions must lie in [0, " + std::to_string(kMaxMatrixDim) + "]");
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

class MinorTable {
 public:
  explicit MinorTable(const PolyMatrix& u) : u_(u) {}

  FFPoly det(std::uint32_t row_mask, std::uint32_t col_mask) {
    const std::uint64_t key = (static_cast<std::uint64_t>(row_mask) << 32) | col_mask;
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int r0 = std::countr_zero(row_mask);
    const std::uint32_t rest_rows = row_mask & (row_mask - 1);
    FFPoly value(u_.prime());
    int sign_index = 0;
    for (std::uint32_t cols = col_mask; cols != 0; cols &= cols - 1, ++sign_index) {
      const int c = std::countr_zero(cols);
      const FFPoly& entry = u_.at(r0, c);
      if (entry.is_zero()) continue;
      const std::uint32_t rest_cols = col_mask & ~(1U << c);
      FFPoly term = rest_rows == 0 ? entry : entry * det(rest_rows, rest_cols);
      if (sign_index % 2 == 0) {
        value += term;
      } else {
        value -= term;
      }
    }
    memo_.emplace(key, value);
    return value;
  }

 private:
  const PolyMatrix& u_;
  std::unordered_map<std::uint64_t, FFPoly> memo_;
};

std::uint32_t mask_of(const std::vector<int>& idx) {
  std::uint32_t m = 0;
  for (int i : idx) m |= 1U << i;
  return m;
}

}  // namespace

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

PolyMatrix::PolyMatrix(std::uint32_t p, int rows, int cols) : p_(p), rows_(rows), cols_(cols) {
  check_dims(rows, cols);
  entries_.assign(static_cast<std::size_t>(rows * cols), FFPoly(p));
}

PolyMatrix::PolyMatrix(std::uint32_t p, std::vector<std::vector<FFPoly>> rows)
    : p_(p), rows_(static_cast<int>(rows.size())), cols_(rows.empty() ? 0 : static_cast<int>(rows[0].size())) {
  check_dims(rows_, cols_);
  static_cast<void>(FFPoly(p));  // validates p even for an empty matrix
  entries_.reserve(static_cast<std::size_t>(rows_ * cols_));
  for (auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) {
      throw Error(ErrorCode::DimensionMismatch, "matrix rows have different lengths");
    }
    for (auto& e : row) {
      if (e.prime() != p) throw Error(ErrorCode::FieldMismatch, "matrix entry over another field");
      entries_.push_back(std::move(e));
    }
  }
}

PolyMatrix PolyMatrix::parse(std::string_view text, std::uint32_t p) {
  std::vector<std::vector<FFPoly>> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::vector<FFPoly> row;
    while (true) {
      const auto comma = line.find(',');
      const auto entry = trim(line.substr(0, comma));
      try {
        row.push_back(FFPoly::parse(entry, p));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::Parse) throw;
        throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": " + e.what());
      }
      if (comma == std::string_view::npos) break;
      line = line.substr(comma + 1);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::Parse, "matrix has no rows");
  return PolyMatrix(p, std::move(rows));
}

PolyMatrix PolyMatrix::read_file(const std::filesystem::path& path, std::uint32_t p) {
  return parse(read_text_file(path), p);
}

PolyMatrix PolyMatrix::column(std::uint32_t p, const std::vector<std::string>& entries) {
  std::vector<std::vector<FFPoly>> rows;
  for (const auto& e : entries) rows.push_back({FFPoly::parse(e, p)});
  return PolyMatrix(p, std::move(rows));
}

const FFPoly& PolyMatrix::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= rows_ || j >= cols_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix index out of range");
  }
  return entries_[static_cast<std::size_t>(i * cols_ + j)];
}

void PolyMatrix::set(int i, int j, FFPoly value) {
  if (value.prime() != p_) throw Error(ErrorCode::FieldMismatch, "matrix entry over another field");
  at(i, j);
  entries_[static_cast<std::size_t>(i * cols_ + j)] = std::move(value);
}

int PolyMatrix::variables_used() const noexcept {
  int used = 0;
  for (const auto& e : entries_) used = std::max(used, e.variables_used());
  return used;
}

PolyMatrix PolyMatrix::with_zero_rows(int k) const {
  PolyMatrix out(p_, rows_ + k, cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
  }
  return out;
}

PolyMatrix PolyMatrix::with_zero_cols(int k) const {
  PolyMatrix out(p_, rows_, cols_ + k);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
  }
  return out;
}

PolyMatrix PolyMatrix::with_rows_permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != rows_) {
    throw Error(ErrorCode::DimensionMismatch, "permutation length differs from row count");
  }
  std::vector<bool> seen(static_cast<std::size_t>(rows_), false);
  PolyMatrix out(p_, rows_, cols_);
  for (int i = 0; i < rows_; ++i) {
    const int src = perm[static_cast<std::size_t>(i)];
    if (src < 0 || src >= rows_ || seen[static_cast<std::size_t>(src)]) {
      throw Error(ErrorCode::PreconditionViolated, "not a permutation");
    }
    seen[static_cast<std::size_t>(src)] = true;
    for (int j = 0; j < cols_; ++j) out.set(i, j, at(src, j));
  }
  return out;
}

PolyMatrix PolyMatrix::hconcat(const PolyMatrix& other) const {
  if (other.p_ != p_) throw Error(ErrorCode::FieldMismatch, "hconcat over different fields");
  if (other.rows_ != rows_) throw Error(ErrorCode::DimensionMismatch, "hconcat row counts differ");
  PolyMatrix out(p_, rows_, cols_ + other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
    for (int j = 0; j < other.cols_; ++j) out.set(i, cols_ + j, other.at(i, j));
  }
  return out;
}

std::vector<FFPoly> PolyMatrix::minors(int size) const {
  if (size < 1 || size > kMaxMinorSize) {
    throw Error(ErrorCode::MinorTooLarge,
                "minor size " + std::to_string(size) + " outside [1, " +
                    std::to_string(kMaxMinorSize) + "]");
  }
  std::vector<FFPoly> out;
  if (size > rows_ || size > cols_) return out;
  MinorTable table(*this);
  const auto row_sets = subsets(rows_, size);
  const auto col_sets = subsets(cols_, size);
  out.reserve(row_sets.size() * col_sets.size());
  for (const auto& rs : row_sets) {
    const auto rm = mask_of(rs);
    for (const auto& cs : col_sets) out.push_back(table.det(rm, mask_of(cs)));
  }
  return out;
}

FFPoly PolyMatrix::determinant() const {
  if (rows_ != cols_) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  if (rows_ == 0) return FFPoly::constant(p_, 1);
  return minors(rows_).front();
}

std::string PolyMatrix::to_string() const {
  std::string out;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += at(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

}  // namespace liaison
