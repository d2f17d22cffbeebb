#pragma once

#include "pascaldet/exact.hpp"

#include <vector>

namespace pascaldet {

struct LatticePoint {
  Index x = 0;
  Index y = 0;
  friend bool operator==(LatticePoint a, LatticePoint b) { return a.x == b.x && a.y == b.y; }
};

using LatticePath = std::vector<LatticePoint>;

// Terminals for the order-k family behind entry (i, j): path a runs from
// A_a = (-(i+a), 0) to B_a = (0, j+a), so the single-path count from A_a to
// B_b is C((i+a)+(j+b), i+a) and the path matrix is exactly the k-by-k
// binomial window at (i, j). Sources and sinks are strictly ordered, so only
// the identity assignment can be vertex-disjoint.
struct PathFamilySpec {
  Index order = 1;
  std::vector<LatticePoint> sources;
  std::vector<LatticePoint> sinks;

  static PathFamilySpec for_entry(Index k, Index i, Index j);
};

// Number of monotone unit-step (east/north) paths; 0 when the destination is
// not weakly north-east of the source.
ExactNat count_paths(LatticePoint from, LatticePoint to);

// All monotone paths from 'from' to 'to', each as its full vertex list, in a
// fixed deterministic order.
std::vector<LatticePath> enumerate_paths(LatticePoint from, LatticePoint to);

// True when no two paths of the family share a lattice point.
bool vertex_disjoint(const std::vector<LatticePath>& family);

// Enumeration guard: the family count is exponential, so instances above the
// configured bound are rejected outright.
struct OracleLimits {
  Index max_order = 3;
  Index max_index = 5;
};

// Exhaustive count of pairwise vertex-disjoint monotone path families for the
// terminals of PathFamilySpec::for_entry(k, i, j). Deliberately brute force;
// throws std::length_error above the configured limits.
ExactNat count_nonintersecting_paths(Index k, Index i, Index j, const OracleLimits& limits = {});

}  // namespace pascaldet
