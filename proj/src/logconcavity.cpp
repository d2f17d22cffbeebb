#include "pascaldet/logconcavity.hpp"

namespace pascaldet {

std::string property_name(SequenceProperty p) {
  switch (p) {
    case SequenceProperty::log_concave: return "log_concave";
    case SequenceProperty::concave: return "concave";
    case SequenceProperty::symmetric: return "symmetric";
  }
  return "unknown";
}

bool witness_violates(SequenceProperty p, const ViolationWitness& w) {
  switch (p) {
    case SequenceProperty::log_concave: return w.a_prev * w.a_next > w.a_mid * w.a_mid;
    case SequenceProperty::concave: return w.a_prev + w.a_next > 2 * w.a_mid;
    case SequenceProperty::symmetric: return w.a_prev != w.a_next;
  }
  return false;
}

namespace {

template <typename Violated>
SequenceReport scan_interior(const ExactSequence& s, SequenceProperty property, Violated violated) {
  SequenceReport report;
  report.property = property;
  report.origin = s.origin();
  for (Index i = 1; i + 1 < s.size(); ++i) {
    if (violated(s[i - 1], s[i], s[i + 1])) {
      report.pass = false;
      report.first_violation = ViolationWitness{i, s[i - 1], s[i], s[i + 1]};
      return report;
    }
  }
  return report;
}

}  // namespace

SequenceReport is_log_concave(const ExactSequence& s) {
  return scan_interior(s, SequenceProperty::log_concave,
                       [](const ExactNat& a, const ExactNat& b, const ExactNat& c) {
                         return a * c > b * b;
                       });
}

SequenceReport is_concave(const ExactSequence& s) {
  return scan_interior(s, SequenceProperty::concave,
                       [](const ExactNat& a, const ExactNat& b, const ExactNat& c) {
                         return a + c > 2 * b;
                       });
}

SequenceReport is_symmetric(const ExactSequence& s) {
  SequenceReport report;
  report.property = SequenceProperty::symmetric;
  report.origin = s.origin();
  const Index n = s.size() - 1;
  for (Index i = 0; i <= n - i; ++i) {
    if (s[i] != s[n - i]) {
      report.pass = false;
      report.first_violation = ViolationWitness{i, s[i], s[i], s[n - i]};
      return report;
    }
  }
  return report;
}

SequenceReport poly_is_log_concave(const ExactSequence& coeffs) { return is_log_concave(coeffs); }

Verdict cross_ratio_check(const ExactSequence& s, Index n) {
  if (n < 1) throw std::domain_error("cross_ratio_check: n must be >= 1");
  if (s.size() < n + 2)
    throw std::domain_error("cross_ratio_check: sequence too short for indices 1..n+2");
  for (Index i = 0; i < s.size(); ++i)
    if (s[i] <= 0) throw std::domain_error("cross_ratio_check: sequence must be strictly positive");
  if (!is_log_concave(s).pass)
    throw std::domain_error("cross_ratio_check: sequence must be log-concave");
  // One-based lemma indices: a_2 * a_{n+1} >= a_1 * a_{n+2}.
  const ExactInt lhs = s[1] * s[n];
  const ExactInt rhs = s[0] * s[n + 1];
  if (lhs >= rhs) return Verdict::passing(1);
  return Verdict::failing({{{"n", n}}, to_decimal(lhs), to_decimal(rhs)}, 1);
}

}  // namespace pascaldet
