#pragma once

#include "pascaldet/exact.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace pascaldet {

// Where a sequence was cut from: row i / column j / anti-diagonal d of a named
// table, or free-standing values.
struct SequenceOrigin {
  enum class Kind { row, column, antidiagonal, coefficients, adhoc };

  Kind kind = Kind::adhoc;
  Index index = 0;
  std::string table;

  std::string describe() const {
    switch (kind) {
      case Kind::row: return table + " row " + std::to_string(index);
      case Kind::column: return table + " column " + std::to_string(index);
      case Kind::antidiagonal: return table + " antidiagonal " + std::to_string(index);
      case Kind::coefficients: return "coefficients";
      case Kind::adhoc: return table.empty() ? "sequence" : table;
    }
    return "sequence";
  }
};

// Finite sequence of exact nonnegative integers. Nonempty by construction.
class ExactSequence {
 public:
  ExactSequence(IntColumn values, SequenceOrigin origin = {})
      : values_(std::move(values)), origin_(std::move(origin)) {
    if (values_.size() < 1) throw std::domain_error("ExactSequence: must be nonempty");
    for (Index i = 0; i < values_.size(); ++i)
      if (values_[i] < 0) throw std::domain_error("ExactSequence: values must be nonnegative");
  }

  ExactSequence(std::initializer_list<long long> values, SequenceOrigin origin = {})
      : ExactSequence(from_list(values), std::move(origin)) {}

  Index size() const { return values_.size(); }
  const ExactNat& operator[](Index i) const { return values_[i]; }
  const IntColumn& values() const { return values_; }
  const SequenceOrigin& origin() const { return origin_; }

 private:
  static IntColumn from_list(std::initializer_list<long long> values) {
    IntColumn v(static_cast<Index>(values.size()));
    Index i = 0;
    for (long long x : values) v[i++] = ExactInt(x);
    return v;
  }

  IntColumn values_;
  SequenceOrigin origin_;
};

inline std::string table_label(const IntGrid&) { return "grid"; }

// Extraction of rows, columns and anti-diagonals from any table-like object
// (PascalTable, DetArrayTable, or a plain IntGrid). values[j] = t(i, j).
template <typename Table>
ExactSequence row_sequence(const Table& t, Index i, Index len) {
  if (i < 0 || i >= t.rows() || len < 1 || len > t.cols())
    throw std::domain_error("row_sequence: out of range");
  IntColumn v(len);
  for (Index j = 0; j < len; ++j) v[j] = t(i, j);
  return ExactSequence(std::move(v), {SequenceOrigin::Kind::row, i, table_label(t)});
}

template <typename Table>
ExactSequence column_sequence(const Table& t, Index j, Index len) {
  if (j < 0 || j >= t.cols() || len < 1 || len > t.rows())
    throw std::domain_error("column_sequence: out of range");
  IntColumn v(len);
  for (Index i = 0; i < len; ++i) v[i] = t(i, j);
  return ExactSequence(std::move(v), {SequenceOrigin::Kind::column, j, table_label(t)});
}

// Anti-diagonal i+j = d, ordered south-west to north-east: values[i] = t(i, d-i).
template <typename Table>
ExactSequence antidiagonal_sequence(const Table& t, Index d) {
  if (d < 0 || d >= t.rows() || d >= t.cols())
    throw std::domain_error("antidiagonal_sequence: out of range");
  IntColumn v(d + 1);
  for (Index i = 0; i <= d; ++i) v[i] = t(i, d - i);
  return ExactSequence(std::move(v), {SequenceOrigin::Kind::antidiagonal, d, table_label(t)});
}

}  // namespace pascaldet
