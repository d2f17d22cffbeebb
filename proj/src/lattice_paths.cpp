#include "pascaldet/lattice_paths.hpp"

#include "pascaldet/pascal_table.hpp"

#include <cstdint>
#include <stdexcept>

namespace pascaldet {

PathFamilySpec PathFamilySpec::for_entry(Index k, Index i, Index j) {
  if (k < 1) throw std::domain_error("PathFamilySpec: order must be >= 1");
  if (i < 0 || j < 0) throw std::domain_error("PathFamilySpec: indices must be nonnegative");
  PathFamilySpec spec;
  spec.order = k;
  for (Index a = 0; a < k; ++a) {
    spec.sources.push_back({-(i + a), 0});
    spec.sinks.push_back({0, j + a});
  }
  return spec;
}

ExactNat count_paths(LatticePoint from, LatticePoint to) {
  const Index dx = to.x - from.x;
  const Index dy = to.y - from.y;
  if (dx < 0 || dy < 0) return ExactNat(0);
  return binomial(dx + dy, dx);
}

namespace {

void enumerate_rec(LatticePoint at, LatticePoint to, LatticePath& current,
                   std::vector<LatticePath>& out) {
  if (at == to) {
    out.push_back(current);
    return;
  }
  if (at.x < to.x) {
    current.push_back({at.x + 1, at.y});
    enumerate_rec({at.x + 1, at.y}, to, current, out);
    current.pop_back();
  }
  if (at.y < to.y) {
    current.push_back({at.x, at.y + 1});
    enumerate_rec({at.x, at.y + 1}, to, current, out);
    current.pop_back();
  }
}

// Vertex sets as bitmasks over the bounding grid, one bit per lattice point.
struct MaskEnumerator {
  Index x_min, y_max, height, words;

  std::size_t bit(LatticePoint p) const {
    return static_cast<std::size_t>((p.x - x_min) * height + p.y);
  }

  void collect(LatticePoint at, LatticePoint to, std::vector<std::uint64_t>& mask,
               std::vector<std::uint64_t>& out) const {
    const std::size_t b = bit(at);
    mask[b >> 6] |= std::uint64_t(1) << (b & 63);
    if (at == to) {
      out.insert(out.end(), mask.begin(), mask.end());
    } else {
      if (at.x < to.x) collect({at.x + 1, at.y}, to, mask, out);
      if (at.y < to.y) collect({at.x, at.y + 1}, to, mask, out);
    }
    mask[b >> 6] &= ~(std::uint64_t(1) << (b & 63));
  }
};

bool masks_intersect(const std::uint64_t* a, const std::uint64_t* b, Index words) {
  for (Index w = 0; w < words; ++w)
    if (a[w] & b[w]) return true;
  return false;
}

void count_rec(const std::vector<std::vector<std::uint64_t>>& per_path, Index words, Index depth,
               std::vector<std::uint64_t>& used, ExactNat& count) {
  const auto& masks = per_path[static_cast<std::size_t>(depth)];
  const Index n = static_cast<Index>(masks.size()) / words;
  for (Index p = 0; p < n; ++p) {
    const std::uint64_t* mask = masks.data() + p * words;
    if (masks_intersect(mask, used.data(), words)) continue;
    if (depth + 1 == static_cast<Index>(per_path.size())) {
      ++count;
      continue;
    }
    for (Index w = 0; w < words; ++w) used[static_cast<std::size_t>(w)] |= mask[w];
    count_rec(per_path, words, depth + 1, used, count);
    for (Index w = 0; w < words; ++w) used[static_cast<std::size_t>(w)] &= ~mask[w];
  }
}

}  // namespace

std::vector<LatticePath> enumerate_paths(LatticePoint from, LatticePoint to) {
  std::vector<LatticePath> out;
  if (to.x < from.x || to.y < from.y) return out;
  LatticePath current{from};
  enumerate_rec(from, to, current, out);
  return out;
}

bool vertex_disjoint(const std::vector<LatticePath>& family) {
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = a + 1; b < family.size(); ++b)
      for (const LatticePoint& p : family[a])
        for (const LatticePoint& q : family[b])
          if (p == q) return false;
  return true;
}

ExactNat count_nonintersecting_paths(Index k, Index i, Index j, const OracleLimits& limits) {
  if (k < 1 || i < 0 || j < 0)
    throw std::domain_error("count_nonintersecting_paths: invalid instance");
  if (k > limits.max_order || i > limits.max_index || j > limits.max_index)
    throw std::length_error("count_nonintersecting_paths: instance exceeds configured size bound");

  const PathFamilySpec spec = PathFamilySpec::for_entry(k, i, j);
  MaskEnumerator grid;
  grid.x_min = -(i + k - 1);
  grid.y_max = j + k - 1;
  grid.height = grid.y_max + 1;
  const Index cells = (0 - grid.x_min + 1) * grid.height;
  grid.words = (cells + 63) / 64;

  std::vector<std::vector<std::uint64_t>> per_path(static_cast<std::size_t>(k));
  for (Index a = 0; a < k; ++a) {
    std::vector<std::uint64_t> scratch(static_cast<std::size_t>(grid.words), 0);
    grid.collect(spec.sources[static_cast<std::size_t>(a)], spec.sinks[static_cast<std::size_t>(a)],
                 scratch, per_path[static_cast<std::size_t>(a)]);
  }

  ExactNat count(0);
  std::vector<std::uint64_t> used(static_cast<std::size_t>(grid.words), 0);
  count_rec(per_path, grid.words, 0, used, count);
  return count;
}

}  // namespace pascaldet
