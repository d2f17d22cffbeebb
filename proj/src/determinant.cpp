#include "pascaldet/determinant.hpp"

#include <utility>

namespace pascaldet {

namespace {

void require_square(Eigen::Ref<const IntGrid> m, const char* who) {
  if (m.rows() < 1 || m.cols() != m.rows())
    throw std::domain_error(std::string(who) + ": matrix must be square and nonempty");
}

}  // namespace

ExactInt det_bareiss(Eigen::Ref<const IntGrid> m) {
  require_square(m, "det_bareiss");
  const Index n = m.rows();
  IntGrid a = m;
  int sign = 1;
  ExactInt prev(1);
  for (Index c = 0; c + 1 < n; ++c) {
    // Any nonzero pivot keeps the Sylvester divisions exact; take the first.
    Index p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return ExactInt(0);
    if (p != c) {
      a.row(p).swap(a.row(c));
      sign = -sign;
    }
    for (Index r = c + 1; r < n; ++r) {
      for (Index col = c + 1; col < n; ++col)
        a(r, col) = (a(r, col) * a(c, c) - a(r, c) * a(c, col)) / prev;
      a(r, c) = 0;
    }
    prev = a(c, c);
  }
  ExactInt det = a(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

ExactInt det_condensation(Eigen::Ref<const IntGrid> m) {
  require_square(m, "det_condensation");
  const Index n = m.rows();
  if (n == 1) return m(0, 0);

  // First condensation step needs no division.
  IntGrid prev = m;
  IntGrid cur(n - 1, n - 1);
  for (Index i = 0; i + 1 < n; ++i)
    for (Index j = 0; j + 1 < n; ++j)
      cur(i, j) = prev(i, j) * prev(i + 1, j + 1) - prev(i, j + 1) * prev(i + 1, j);

  // Desnanot-Jacobi: each further step divides by the interior of the grid
  // two steps back. A zero interior pivot stops condensation for this
  // instance entirely.
  while (cur.rows() > 1) {
    const Index s = cur.rows();
    IntGrid next(s - 1, s - 1);
    for (Index i = 0; i + 1 < s; ++i)
      for (Index j = 0; j + 1 < s; ++j) {
        const ExactInt& pivot = prev(i + 1, j + 1);
        if (pivot == 0) return det_bareiss(m);
        next(i, j) = (cur(i, j) * cur(i + 1, j + 1) - cur(i, j + 1) * cur(i + 1, j)) / pivot;
      }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur(0, 0);
}

}  // namespace pascaldet
