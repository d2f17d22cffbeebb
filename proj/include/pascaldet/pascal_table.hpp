#pragma once

#include "pascaldet/exact.hpp"
#include "pascaldet/sequence.hpp"

#include <stdexcept>
#include <string>

namespace pascaldet {

// C(n, k) by the multiplicative formula; every intermediate division is exact.
ExactNat binomial(Index n, Index k);

// Entry of the squared binomial array: P(i, j) = C(i+j, i).
ExactNat pascal_entry(Index i, Index j);

// Memoized rectangular window of the squared binomial array. Immutable after
// construction; concurrent reads are safe.
class PascalTable {
 public:
  PascalTable(Index rows, Index cols);

  Index rows() const { return entries_.rows(); }
  Index cols() const { return entries_.cols(); }

  const ExactNat& operator()(Index i, Index j) const {
    if (i < 0 || j < 0 || i >= rows() || j >= cols())
      throw std::domain_error("PascalTable: index out of range");
    return entries_(i, j);
  }

  const IntGrid& entries() const { return entries_; }

  std::string label() const {
    return "pascal[" + std::to_string(rows()) + "x" + std::to_string(cols()) + "]";
  }

 private:
  IntGrid entries_;
};

inline std::string table_label(const PascalTable& t) { return t.label(); }

PascalTable build_pascal_table(Index rows, Index cols);

}  // namespace pascaldet
