#pragma once

#include "pascaldet/det_array.hpp"
#include "pascaldet/exact.hpp"
#include "pascaldet/pascal_table.hpp"
#include "pascaldet/verdict.hpp"

#include <stdexcept>

namespace pascaldet {

// Two cells of the binomial table together with their recurrence parents:
// u = P(i, j), v = P(i-1, j), w = P(i, j-1), and the primed triple at
// (i2, j2). By the recurrence, u = v + w and u2 = v2 + w2.
struct ParallelepipedCells {
  Index i, j, i2, j2;
  ExactNat u, v, w, u2, v2, w2;

  static ParallelepipedCells at(const PascalTable& t, Index i, Index j, Index i2, Index j2);
};

// Checks both 2x2-determinant identities implied by the recurrence:
//   (i)  u*v2 - u2*v = w*v2 - w2*v
//   (ii) w*v2 - w2*v = w*u2 - w2*u
Verdict parallelepiped_check(const PascalTable& t, Index i, Index j, Index i2, Index j2);

// Exhaustive sweep over 1 <= i, j, i2, j2 <= bound in lexicographic order.
Verdict parallelepiped_sweep(const PascalTable& t, Index bound);

// Cross-ratio of the four order-k array entries at the corners of the
// axis-aligned rectangle anchored at (i, j) with offsets (m, l):
//   W = (PD(i+m, j+l) * PD(i, j)) / (PD(i+m, j) * PD(i, j+l))
// Exact rational in lowest terms; positive for these arrays.
struct StarWeight {
  Index order;
  Index i, j;
  Index m, l;
  ExactRatio value;
};

StarWeight star_weight(const DetArrayTable& dt, Index i, Index j, Index m, Index l);
StarWeight star_weight(Index k, Index i, Index j, Index m, Index l);

// The weight is one constant rational for every anchor (i, s-i) along the
// anti-diagonal i+j = s.
Verdict star_invariance_check(const DetArrayTable& dt, Index s, Index m, Index l);
Verdict star_invariance_check(Index k, Index s, Index m, Index l);

// Product of the anti-diagonal entries of the r-by-r window at (i, j):
// prod_{a=0..r-1} t(i+a, j+r-1-a).
template <typename Table>
ExactNat backdiag_product(const Table& t, Index i, Index j, Index r) {
  if (i < 0 || j < 0 || r < 1 || i + r > t.rows() || j + r > t.cols())
    throw std::domain_error("backdiag_product: window out of range");
  ExactNat prod(1);
  for (Index a = 0; a < r; ++a) prod *= t(i + a, j + r - 1 - a);
  return prod;
}

// Minor-ratio identity for a pair of r-by-r windows anchored on one
// anti-diagonal: det ratio equals the ratio of back-diagonal products.
struct RatioWitness {
  Index order = 1;
  Index size = 1;
  Index i = 0, j = 0, i2 = 0, j2 = 0;
  bool pass = false;
  bool zero_denominator = false;
  ExactRatio minor_ratio;
  ExactRatio backdiag_ratio;
};

RatioWitness ratio_identity_check(const DetArrayTable& dt, Index r, Index i, Index j, Index i2,
                                  Index j2);

// N(n, r) = C(n, r) * C(n, r-1) / n; the division is exact.
ExactNat narayana_closed_form(Index n, Index r);

// Entry (i, j) of the order-2 array equals N(i+j+1, j+1) over the whole
// window 0..i_max x 0..j_max.
Verdict narayana_map_check(Index i_max, Index j_max);

}  // namespace pascaldet
