#pragma once

#include "pascaldet/exact.hpp"
#include "pascaldet/sequence.hpp"
#include "pascaldet/verdict.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pascaldet {

enum class SequenceProperty { log_concave, concave, symmetric };

std::string property_name(SequenceProperty p);

// Witness triple at the first failing index. For the pairwise symmetric check
// the triple is (a_i, a_i, a_{n-i}).
struct ViolationWitness {
  Index index = 0;
  ExactNat a_prev, a_mid, a_next;
};

struct SequenceReport {
  bool pass = true;
  SequenceProperty property = SequenceProperty::log_concave;
  std::optional<ViolationWitness> first_violation;
  SequenceOrigin origin;
};

// True when the witness triple violates the defining inequality of the
// property; used to recheck reports independently of the scan that built them.
bool witness_violates(SequenceProperty p, const ViolationWitness& w);

// a_{i-1} * a_{i+1} <= a_i^2 for every interior i; integer comparison only.
// Length <= 2 passes vacuously.
SequenceReport is_log_concave(const ExactSequence& s);

// a_{i-1} + a_{i+1} <= 2 * a_i for every interior i.
SequenceReport is_concave(const ExactSequence& s);

// a_i = a_{n-i} for every i.
SequenceReport is_symmetric(const ExactSequence& s);

// A polynomial has a property when its coefficient sequence does.
SequenceReport poly_is_log_concave(const ExactSequence& coeffs);

// For a strictly positive log-concave sequence indexed one-based as a_1,
// a_2, ..., verifies a_2 * a_{n+1} >= a_1 * a_{n+2} by cross-multiplication.
// Inputs that are not strictly positive and log-concave, or too short for the
// indices 1..n+2, are precondition errors.
Verdict cross_ratio_check(const ExactSequence& s, Index n);

// Scan of all 2x2 adjacent minors t(i,j)*t(i+1,j+1) - t(i,j+1)*t(i+1,j) with
// anchors in 0..row_max-1 x 0..col_max-1.
struct AdjacentMinorReport {
  std::string table;
  Index row_max = 0;
  Index col_max = 0;
  bool pass = true;
  struct NegativeMinor {
    Index i = 0;
    Index j = 0;
    ExactInt value;
  };
  std::optional<NegativeMinor> first_negative;
};

template <typename Table>
AdjacentMinorReport adjacent_minors_scan(const Table& t, Index row_max, Index col_max) {
  if (row_max < 1 || col_max < 1 || row_max >= t.rows() || col_max >= t.cols())
    throw std::domain_error("adjacent_minors_scan: window out of range");
  AdjacentMinorReport report;
  report.table = table_label(t);
  report.row_max = row_max;
  report.col_max = col_max;
  for (Index i = 0; i < row_max; ++i)
    for (Index j = 0; j < col_max; ++j) {
      ExactInt m = t(i, j) * t(i + 1, j + 1) - t(i, j + 1) * t(i + 1, j);
      if (m < 0) {
        report.pass = false;
        report.first_negative = AdjacentMinorReport::NegativeMinor{i, j, std::move(m)};
        return report;
      }
    }
  return report;
}

template <typename Table>
std::vector<SequenceReport> table_row_lc(const Table& t, Index i_max, Index len) {
  std::vector<SequenceReport> reports;
  reports.reserve(static_cast<std::size_t>(i_max) + 1);
  for (Index i = 0; i <= i_max; ++i) reports.push_back(is_log_concave(row_sequence(t, i, len)));
  return reports;
}

template <typename Table>
std::vector<SequenceReport> table_antidiag_lc(const Table& t, Index d_max) {
  std::vector<SequenceReport> reports;
  reports.reserve(static_cast<std::size_t>(d_max) + 1);
  for (Index d = 0; d <= d_max; ++d) reports.push_back(is_log_concave(antidiagonal_sequence(t, d)));
  return reports;
}

// Instance of the implication "anti-diagonal log-concave and nonnegative
// adjacent minors imply row log-concave" on a concrete window.
struct ImplicationReport {
  bool diagonal_premise = true;
  bool minors_premise = true;
  bool conclusion = true;
  bool holds = true;
  std::string detail;
};

template <typename Table>
ImplicationReport row_lc_implication_check(const Table& t, Index i_max, Index j_max) {
  ImplicationReport report;
  const Index d_max = std::min(i_max, j_max);
  for (const SequenceReport& r : table_antidiag_lc(t, d_max))
    if (!r.pass) {
      report.diagonal_premise = false;
      report.detail = "premise failed: " + r.origin.describe() + " not log-concave";
      break;
    }
  const AdjacentMinorReport minors = adjacent_minors_scan(t, i_max, j_max);
  if (!minors.pass) {
    report.minors_premise = false;
    if (report.detail.empty())
      report.detail = "premise failed: negative adjacent minor at (" +
                      std::to_string(minors.first_negative->i) + ", " +
                      std::to_string(minors.first_negative->j) + ")";
  }
  for (const SequenceReport& r : table_row_lc(t, i_max, j_max + 1))
    if (!r.pass) {
      report.conclusion = false;
      if (report.detail.empty())
        report.detail = "conclusion failed: " + r.origin.describe() + " not log-concave";
      break;
    }
  report.holds = !(report.diagonal_premise && report.minors_premise) || report.conclusion;
  return report;
}

}  // namespace pascaldet
