#pragma once

#include "pascaldet/exact.hpp"

#include <Eigen/Dense>

#include <stdexcept>

namespace pascaldet {

// Contiguous square window: result(a, b) = t(top + a, left + b).
struct MinorSpec {
  Index top = 0;
  Index left = 0;
  Index size = 1;
};

template <typename Table>
IntGrid minor(const Table& t, MinorSpec spec) {
  if (spec.top < 0 || spec.left < 0 || spec.size < 1 || spec.top + spec.size > t.rows() ||
      spec.left + spec.size > t.cols())
    throw std::domain_error("minor: window out of range");
  IntGrid out(spec.size, spec.size);
  for (Index a = 0; a < spec.size; ++a)
    for (Index b = 0; b < spec.size; ++b) out(a, b) = t(spec.top + a, spec.left + b);
  return out;
}

// Exact determinant by fraction-free (Bareiss) elimination with row-swap
// pivoting. Every intermediate value stays integral.
ExactInt det_bareiss(Eigen::Ref<const IntGrid> m);

// Exact determinant by Dodgson condensation. Falls back to det_bareiss for
// the whole instance when an interior condensation pivot is zero.
ExactInt det_condensation(Eigen::Ref<const IntGrid> m);

}  // namespace pascaldet
