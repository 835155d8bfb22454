#include "lsb/linalg.hpp"

namespace lsb {

std::vector<std::size_t> row_reduce(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][col];
    for (Rational& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(RationalMatrix m) { return row_reduce(m).size(); }

RationalMatrix nullspace(RationalMatrix m, std::size_t cols) {
  const std::vector<std::size_t> pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  RationalMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(RationalMatrix m, const std::vector<Rational>& rhs) {
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t r = 0; r < m.size(); ++r) m[r].push_back(rhs[r]);
  const std::vector<std::size_t> pivots = row_reduce(m);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  std::vector<Rational> x(cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
  return x;
}

}  // namespace lsb
