#include "pascaldet/pascal_table.hpp"

#include <algorithm>

namespace pascaldet {

ExactNat binomial(Index n, Index k) {
  if (n < 0 || k < 0 || k > n) throw std::domain_error("binomial: requires 0 <= k <= n");
  const Index m = std::min(k, n - k);
  // acc = C(n - m + t, t) after step t, so each division is exact.
  ExactNat acc(1);
  for (Index t = 1; t <= m; ++t) {
    acc *= ExactInt(n - m + t);
    acc /= ExactInt(t);
  }
  return acc;
}

ExactNat pascal_entry(Index i, Index j) {
  if (i < 0 || j < 0) throw std::domain_error("pascal_entry: indices must be nonnegative");
  return binomial(i + j, i);
}

PascalTable::PascalTable(Index rows, Index cols) {
  if (rows < 1 || cols < 1) throw std::domain_error("PascalTable: dimensions must be >= 1");
  entries_.resize(rows, cols);
  // Anti-diagonal wavefront: wave d reads only wave d-1, so the fill order is
  // deterministic whether or not waves are processed in parallel.
  for (Index d = 0; d <= rows + cols - 2; ++d) {
    const Index i_lo = std::max<Index>(0, d - cols + 1);
    const Index i_hi = std::min<Index>(d, rows - 1);
    for (Index i = i_lo; i <= i_hi; ++i) {
      const Index j = d - i;
      if (i == 0 || j == 0)
        entries_(i, j) = 1;
      else
        entries_(i, j) = entries_(i - 1, j) + entries_(i, j - 1);
    }
  }
}

PascalTable build_pascal_table(Index rows, Index cols) { return PascalTable(rows, cols); }

}  // namespace pascaldet
