#include <algorithm>
#include <cstdlib>
#include <utility>

#include "kpath/error.hpp"
#include "kpath/lp.hpp"

namespace kpath {

// Bareiss: every intermediate value is a minor of the input, so the divisions
// are exact and 0/1 inputs of small order stay well inside 64 bits.
long long determinant(std::vector<std::vector<long long>> a) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw InvalidInput("determinant of a non-square matrix");
  }
  if (n == 0) return 1;
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

namespace {

// Advances `c` to the next r-subset of 0..n-1 in lexicographic order.
bool next_combination(std::vector<int>& c, int n) {
  const int r = static_cast<int>(c.size());
  int i = r - 1;
  while (i >= 0 && c[i] == n - r + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
  return true;
}

}  // namespace

std::optional<SquareSubmatrix> find_non_tu_witness(const std::vector<std::vector<int>>& m, int max_order) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  for (int order = 1; order <= std::min({max_order, rows, cols}); ++order) {
    std::vector<int> r(static_cast<std::size_t>(order));
    for (int i = 0; i < order; ++i) r[i] = i;
    do {
      std::vector<int> c(static_cast<std::size_t>(order));
      for (int i = 0; i < order; ++i) c[i] = i;
      do {
        std::vector<std::vector<long long>> sub(static_cast<std::size_t>(order),
                                                std::vector<long long>(static_cast<std::size_t>(order)));
        for (int i = 0; i < order; ++i) {
          for (int j = 0; j < order; ++j) sub[i][j] = m[r[i]][c[j]];
        }
        long long det = determinant(std::move(sub));
        if (std::llabs(det) >= 2) return SquareSubmatrix{r, c, det};
      } while (next_combination(c, cols));
    } while (next_combination(r, rows));
  }
  return std::nullopt;
}

}  // namespace kpath
