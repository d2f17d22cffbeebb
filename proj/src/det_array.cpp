#include "pascaldet/det_array.hpp"

#include "pascaldet/determinant.hpp"

namespace pascaldet {

ExactNat det_entry(Index k, Index i, Index j) {
  if (k < 1) throw std::domain_error("det_entry: order must be >= 1");
  if (i < 0 || j < 0) throw std::domain_error("det_entry: indices must be nonnegative");
  IntGrid window(k, k);
  for (Index a = 0; a < k; ++a)
    for (Index b = 0; b < k; ++b) window(a, b) = pascal_entry(i + a, j + b);
  return det_bareiss(window);
}

DetArrayTable::DetArrayTable(const PascalTable& source, Index order, Index rows, Index cols)
    : order_(order), source_rows_(source.rows()), source_cols_(source.cols()) {
  if (order < 1 || rows < 1 || cols < 1)
    throw std::domain_error("DetArrayTable: order and dimensions must be >= 1");
  if (source.rows() < rows + order - 1 || source.cols() < cols + order - 1)
    throw std::domain_error("DetArrayTable: source table too small for requested window");
  entries_.resize(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) entries_(i, j) = det_bareiss(minor(source, {i, j, order}));
}

DetArrayTable::DetArrayTable(Index order, Index rows, Index cols)
    : DetArrayTable(PascalTable(rows + (order < 1 ? 0 : order - 1), cols + (order < 1 ? 0 : order - 1)),
                    order, rows, cols) {}

DetArrayTable build_det_array(Index k, Index rows, Index cols) {
  return DetArrayTable(k, rows, cols);
}

Verdict column_identity_first(Index k, Index i_max) {
  if (k < 1) throw std::domain_error("column_identity_first: order must be >= 1");
  Index checked = 0;
  for (Index i = 0; i <= i_max; ++i) {
    const ExactNat d = det_entry(k, i, 0);
    ++checked;
    if (d != 1)
      return Verdict::failing({{{"k", k}, {"i", i}, {"j", 0}}, to_decimal(d), "1"}, checked);
  }
  return Verdict::passing(checked);
}

Verdict column_identity_second(Index k, Index i_max) {
  if (k < 1) throw std::domain_error("column_identity_second: order must be >= 1");
  Index checked = 0;
  ExactNat previous(0);
  for (Index i = 0; i <= i_max; ++i) {
    const ExactNat d = det_entry(k, i, 1);
    const ExactNat expected = binomial(i + k, k);
    ++checked;
    if (d != expected)
      return Verdict::failing({{{"k", k}, {"i", i}, {"j", 1}}, to_decimal(d), to_decimal(expected)},
                              checked);
    if (i > 0 && d <= previous)
      return Verdict::failing({{{"k", k}, {"i", i}, {"j", 1}},
                               to_decimal(d),
                               to_decimal(previous),
                               "not strictly increasing"},
                              checked);
    previous = d;
  }
  return Verdict::passing(checked);
}

}  // namespace pascaldet
