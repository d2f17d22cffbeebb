#pragma once

#include "pascaldet/exact.hpp"
#include "pascaldet/pascal_table.hpp"
#include "pascaldet/verdict.hpp"

#include <stdexcept>
#include <string>

namespace pascaldet {

// Entry (i, j) of the order-k determinantal array: the determinant of the
// k-by-k window of the squared binomial array anchored at (i, j).
ExactNat det_entry(Index k, Index i, Index j);

// Materialized window of the order-k determinantal array. The source field
// records the dimensions of the binomial table the entries were cut from;
// every entry is computed independently per cell. Order 1 reduces to the
// binomial table entry-wise.
class DetArrayTable {
 public:
  DetArrayTable(const PascalTable& source, Index order, Index rows, Index cols);
  DetArrayTable(Index order, Index rows, Index cols);

  Index order() const { return order_; }
  Index rows() const { return entries_.rows(); }
  Index cols() const { return entries_.cols(); }
  Index source_rows() const { return source_rows_; }
  Index source_cols() const { return source_cols_; }

  const ExactNat& operator()(Index i, Index j) const {
    if (i < 0 || j < 0 || i >= rows() || j >= cols())
      throw std::domain_error("DetArrayTable: index out of range");
    return entries_(i, j);
  }

  const IntGrid& entries() const { return entries_; }

  std::string label() const {
    return "pd" + std::to_string(order_) + "[" + std::to_string(rows()) + "x" +
           std::to_string(cols()) + "]";
  }

 private:
  Index order_;
  Index source_rows_;
  Index source_cols_;
  IntGrid entries_;
};

inline std::string table_label(const DetArrayTable& t) { return t.label(); }

DetArrayTable build_det_array(Index k, Index rows, Index cols);

// Column j = 0 of the order-k array is constantly 1.
Verdict column_identity_first(Index k, Index i_max);

// Column j = 1 of the order-k array equals C(i+k, k) and is strictly
// increasing in i.
Verdict column_identity_second(Index k, Index i_max);

}  // namespace pascaldet
