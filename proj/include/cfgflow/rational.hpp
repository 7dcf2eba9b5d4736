#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace cfgflow {

// Expression templates are disabled so the type behaves as a plain value
// inside Eigen expressions.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalVector = Vector<Rational>;
using RationalMatrix = Matrix<Rational>;

/// "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& value);

/// Accepts "p", "-p", "p/q" with optional surrounding whitespace. Rejects
/// decimals and zero denominators.
Rational parse_rational(std::string_view text);

/// Fixed-point rendering for human-readable reports only.
std::string to_decimal(const Rational& value, int digits = 6);

Integer factorial(unsigned n);

/// n!-style weight a! b! / c!, used by the Shapley-type flows.
Rational factorial_ratio(unsigned a, unsigned b, unsigned c);

template <typename Scalar>
Vector<Scalar> zeros(Eigen::Index size) {
  return Vector<Scalar>::Constant(size, Scalar(0));
}

/// Exact equality; Eigen's isApprox is tolerance based.
template <typename Derived, typename Other>
bool exactly_equal(const Eigen::MatrixBase<Derived>& a, const Eigen::MatrixBase<Other>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace cfgflow

namespace Eigen {

template <>
struct NumTraits<cfgflow::Rational> : GenericNumTraits<cfgflow::Rational> {
  using Real = cfgflow::Rational;
  using NonInteger = cfgflow::Rational;
  using Nested = cfgflow::Rational;
  using Literal = cfgflow::Rational;

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 3
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
