#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>

namespace pascaldet {

// Arbitrary-precision scalars; every stored value is a bignum. ExactNat is an
// alias of the signed type (elimination needs negative intermediates);
// nonnegativity of array entries is a checked invariant, not a type property.
using ExactInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                               boost::multiprecision::et_off>;
using ExactNat = ExactInt;
using ExactRatio =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using Grid = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using ColumnVec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntGrid = Grid<ExactInt>;
using IntColumn = ColumnVec<ExactInt>;

inline std::string to_decimal(const ExactInt& v) { return v.str(); }

// Rationals are kept in lowest terms by the backend; render as "p/q", or just
// "p" for integral values.
inline std::string to_decimal(const ExactRatio& v) {
  const ExactInt num = boost::multiprecision::numerator(v);
  const ExactInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline ExactInt int_from_decimal(const std::string& s) { return ExactInt(s); }

}  // namespace pascaldet
