#include "pascaldet/identities.hpp"

#include "pascaldet/determinant.hpp"

namespace pascaldet {

ParallelepipedCells ParallelepipedCells::at(const PascalTable& t, Index i, Index j, Index i2,
                                            Index j2) {
  if (i < 1 || j < 1 || i2 < 1 || j2 < 1)
    throw std::domain_error("ParallelepipedCells: indices must be >= 1 so both parents exist");
  ParallelepipedCells cells{i, j, i2, j2,
                            t(i, j), t(i - 1, j), t(i, j - 1),
                            t(i2, j2), t(i2 - 1, j2), t(i2, j2 - 1)};
  return cells;
}

Verdict parallelepiped_check(const PascalTable& t, Index i, Index j, Index i2, Index j2) {
  const ParallelepipedCells c = ParallelepipedCells::at(t, i, j, i2, j2);
  const ExactInt first = c.u * c.v2 - c.u2 * c.v;
  const ExactInt second = c.w * c.v2 - c.w2 * c.v;
  const ExactInt third = c.w * c.u2 - c.w2 * c.u;
  if (first != second)
    return Verdict::failing({{{"i", i}, {"j", j}, {"i2", i2}, {"j2", j2}},
                             to_decimal(first),
                             to_decimal(second),
                             "identity (i)"},
                            1);
  if (second != third)
    return Verdict::failing({{{"i", i}, {"j", j}, {"i2", i2}, {"j2", j2}},
                             to_decimal(second),
                             to_decimal(third),
                             "identity (ii)"},
                            1);
  return Verdict::passing(1);
}

Verdict parallelepiped_sweep(const PascalTable& t, Index bound) {
  if (bound < 1) throw std::domain_error("parallelepiped_sweep: bound must be >= 1");
  Index checked = 0;
  for (Index i = 1; i <= bound; ++i)
    for (Index j = 1; j <= bound; ++j)
      for (Index i2 = 1; i2 <= bound; ++i2)
        for (Index j2 = 1; j2 <= bound; ++j2) {
          const Verdict v = parallelepiped_check(t, i, j, i2, j2);
          ++checked;
          if (!v.pass) return Verdict::failing(*v.counterexample, checked);
        }
  return Verdict::passing(checked);
}

StarWeight star_weight(const DetArrayTable& dt, Index i, Index j, Index m, Index l) {
  if (m < 0 || l < 0) throw std::domain_error("star_weight: offsets must be nonnegative");
  const ExactInt num = dt(i + m, j + l) * dt(i, j);
  const ExactInt den = dt(i + m, j) * dt(i, j + l);
  if (den == 0) throw std::domain_error("star_weight: zero denominator");
  return StarWeight{dt.order(), i, j, m, l, ExactRatio(num, den)};
}

StarWeight star_weight(Index k, Index i, Index j, Index m, Index l) {
  if (k < 1) throw std::domain_error("star_weight: order must be >= 1");
  if (i < 0 || j < 0) throw std::domain_error("star_weight: indices must be nonnegative");
  if (m < 0 || l < 0) throw std::domain_error("star_weight: offsets must be nonnegative");
  const ExactInt num = det_entry(k, i + m, j + l) * det_entry(k, i, j);
  const ExactInt den = det_entry(k, i + m, j) * det_entry(k, i, j + l);
  if (den == 0) throw std::domain_error("star_weight: zero denominator");
  return StarWeight{k, i, j, m, l, ExactRatio(num, den)};
}

Verdict star_invariance_check(const DetArrayTable& dt, Index s, Index m, Index l) {
  if (s < 0) throw std::domain_error("star_invariance_check: empty anchor set");
  if (dt.rows() < s + m + 1 || dt.cols() < s + l + 1)
    throw std::domain_error("star_invariance_check: table too small for anti-diagonal windows");
  const ExactRatio reference = star_weight(dt, 0, s, m, l).value;
  Index checked = 1;
  for (Index i = 1; i <= s; ++i) {
    const ExactRatio w = star_weight(dt, i, s - i, m, l).value;
    ++checked;
    if (w != reference)
      return Verdict::failing(
          {{{"s", s}, {"m", m}, {"l", l}, {"i", i}}, to_decimal(w), to_decimal(reference)},
          checked);
  }
  return Verdict::passing(checked);
}

Verdict star_invariance_check(Index k, Index s, Index m, Index l) {
  if (k < 1) throw std::domain_error("star_invariance_check: order must be >= 1");
  if (s < 0) throw std::domain_error("star_invariance_check: empty anchor set");
  if (m < 0 || l < 0) throw std::domain_error("star_invariance_check: offsets must be nonnegative");
  const DetArrayTable dt(k, s + m + 1, s + l + 1);
  return star_invariance_check(dt, s, m, l);
}

RatioWitness ratio_identity_check(const DetArrayTable& dt, Index r, Index i, Index j, Index i2,
                                  Index j2) {
  if (i + j != i2 + j2)
    throw std::domain_error("ratio_identity_check: anchors must share an anti-diagonal");
  RatioWitness witness;
  witness.order = dt.order();
  witness.size = r;
  witness.i = i;
  witness.j = j;
  witness.i2 = i2;
  witness.j2 = j2;

  const ExactInt det_a = det_bareiss(minor(dt, {i, j, r}));
  const ExactInt det_b = det_bareiss(minor(dt, {i2, j2, r}));
  const ExactNat prod_a = backdiag_product(dt, i, j, r);
  const ExactNat prod_b = backdiag_product(dt, i2, j2, r);

  if (det_b == 0 || prod_b == 0) {
    witness.zero_denominator = true;
    witness.pass = false;
    return witness;
  }
  witness.minor_ratio = ExactRatio(det_a, det_b);
  witness.backdiag_ratio = ExactRatio(prod_a, prod_b);
  witness.pass = witness.minor_ratio == witness.backdiag_ratio;
  return witness;
}

ExactNat narayana_closed_form(Index n, Index r) {
  if (r < 1 || r > n) throw std::domain_error("narayana_closed_form: requires 1 <= r <= n");
  const ExactNat prod = binomial(n, r) * binomial(n, r - 1);
  ExactInt quotient, remainder;
  boost::multiprecision::divide_qr(prod, ExactInt(n), quotient, remainder);
  if (remainder != 0) throw std::logic_error("narayana_closed_form: division not exact");
  return quotient;
}

Verdict narayana_map_check(Index i_max, Index j_max) {
  if (i_max < 0 || j_max < 0) throw std::domain_error("narayana_map_check: bounds must be >= 0");
  const DetArrayTable pd2(2, i_max + 1, j_max + 1);
  Index checked = 0;
  for (Index i = 0; i <= i_max; ++i)
    for (Index j = 0; j <= j_max; ++j) {
      const ExactNat expected = narayana_closed_form(i + j + 1, j + 1);
      ++checked;
      if (pd2(i, j) != expected)
        return Verdict::failing(
            {{{"i", i}, {"j", j}}, to_decimal(pd2(i, j)), to_decimal(expected)}, checked);
    }
  return Verdict::passing(checked);
}

}  // namespace pascaldet
