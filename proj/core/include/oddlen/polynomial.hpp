#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oddlen {

using BigInt = boost::multiprecision::cpp_int;

// Dense univariate polynomial over the integers, exact arithmetic.
// Canonical form: coeffs_[k] is the coefficient of x^k, no trailing zeros,
// and the zero polynomial is the empty coefficient sequence.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }

  static IntPolynomial zero() { return IntPolynomial{}; }
  static IntPolynomial one() { return constant(1); }
  static IntPolynomial constant(BigInt c);
  static IntPolynomial monomial(std::size_t exponent, BigInt coeff = 1);
  // 1 - x^k, the building block of every product formula here.
  static IntPolynomial one_minus_power(int k);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
  }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  bool operator==(const IntPolynomial&) const = default;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& scalar);
  IntPolynomial operator-() const;

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
  friend IntPolynomial operator*(const BigInt& s, IntPolynomial a) { return a *= s; }

  // p(x) * x^k
  IntPolynomial times_power(int k) const;
  // p(x) -> p(x^k); the q -> x^2 substitution used by the closed forms.
  IntPolynomial stretched(int k) const;
  BigInt evaluate(const BigInt& x) const;

  // Exact division in Z[x]; throws std::domain_error when the quotient does
  // not exist in the ring (nonzero remainder or non-dividing leading term).
  static IntPolynomial divide_exact(const IntPolynomial& numerator,
                                    const IntPolynomial& denominator);

  // Ascending exponent order, e.g. "1 - x^2 + x^4".
  std::string str() const;

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

// {"coeffs": [c0, c1, ...], "var": "x"} with exact decimal integers.
std::string to_json_string(const IntPolynomial& p);
IntPolynomial poly_from_json_string(std::string_view json_text);

}  // namespace oddlen
