#include "linalg.hpp"

#include "errors.hpp"

namespace idealkit {

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t p = row;
    while (p < rows_ && at(p, col).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != row)
      for (std::size_t c = col; c < cols_; ++c) std::swap(at(p, c), at(row, c));
    Coeff inv = at(row, col).inverse();
    for (std::size_t c = col; c < cols_; ++c)
      if (!at(row, c).is_zero()) at(row, c) = at(row, c) * inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || at(r, col).is_zero()) continue;
      Coeff f = at(r, col);
      for (std::size_t c = col; c < cols_; ++c)
        if (!at(row, c).is_zero()) at(r, c) -= f * at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<Coeff>> Matrix::kernel() const {
  Matrix m = *this;
  auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  Coeff one = zero_.one_like();
  std::vector<std::vector<Coeff>> out;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Coeff> v(cols_, zero_);
    v[f] = one;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return m.rref().size();
}

std::optional<std::vector<Coeff>> solve_linear(const Matrix& a, const std::vector<Coeff>& b) {
  if (b.size() != a.rows()) fail(ErrorCode::kDimensionMismatch, "right-hand side length differs from row count");
  Matrix aug(a.rows(), a.cols() + 1, a.zero());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  auto pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<Coeff> x(a.cols(), a.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
  return x;
}

}  // namespace idealkit
