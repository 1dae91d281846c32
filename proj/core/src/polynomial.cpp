#include "oddlen/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace oddlen {

IntPolynomial IntPolynomial::constant(BigInt c) {
  IntPolynomial p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

IntPolynomial IntPolynomial::monomial(std::size_t exponent, BigInt coeff) {
  IntPolynomial p;
  if (coeff != 0) {
    p.coeffs_.assign(exponent + 1, BigInt(0));
    p.coeffs_[exponent] = std::move(coeff);
  }
  return p;
}

IntPolynomial IntPolynomial::one_minus_power(int k) {
  if (k < 0) throw std::invalid_argument("one_minus_power: negative exponent");
  if (k == 0) return zero();  // 1 - x^0
  IntPolynomial p;
  p.coeffs_.assign(static_cast<std::size_t>(k) + 1, BigInt(0));
  p.coeffs_[0] = 1;
  p.coeffs_[static_cast<std::size_t>(k)] = -1;
  return p;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial p(*this);
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

IntPolynomial IntPolynomial::times_power(int k) const {
  if (k < 0) throw std::invalid_argument("times_power: negative exponent");
  if (is_zero() || k == 0) return *this;
  IntPolynomial p;
  p.coeffs_.assign(coeffs_.size() + static_cast<std::size_t>(k), BigInt(0));
  std::copy(coeffs_.begin(), coeffs_.end(), p.coeffs_.begin() + k);
  return p;
}

IntPolynomial IntPolynomial::stretched(int k) const {
  if (k <= 0) throw std::invalid_argument("stretched: exponent must be positive");
  if (is_zero() || k == 1) return *this;
  IntPolynomial p;
  p.coeffs_.assign((coeffs_.size() - 1) * static_cast<std::size_t>(k) + 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) p.coeffs_[i * k] = coeffs_[i];
  return p;
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& numerator,
                                          const IntPolynomial& denominator) {
  if (denominator.is_zero()) throw std::domain_error("divide_exact: division by zero");
  if (numerator.is_zero()) return zero();
  if (numerator.degree() < denominator.degree())
    throw std::domain_error("divide_exact: nonzero remainder");

  std::vector<BigInt> rem = numerator.coeffs_;
  const auto& den = denominator.coeffs_;
  const BigInt& lead = den.back();
  std::vector<BigInt> quot(rem.size() - den.size() + 1, BigInt(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt& top = rem[k + den.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0) throw std::domain_error("divide_exact: nonzero remainder");
    BigInt q = top / lead;
    for (std::size_t j = 0; j < den.size(); ++j) rem[k + j] -= q * den[j];
    quot[k] = std::move(q);
  }
  for (const auto& c : rem)
    if (c != 0) throw std::domain_error("divide_exact: nonzero remainder");
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    BigInt mag = negative ? BigInt(-c) : c;
    if (k == 0) {
      os << mag.str();
    } else {
      if (mag != 1) os << mag.str();
      os << (k == 1 ? "x" : "x^" + std::to_string(k));
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.str(); }

std::string to_json_string(const IntPolynomial& p) {
  std::string out = "{\"coeffs\":[";
  const auto& cs = p.coefficients();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (k) out += ',';
    out += cs[k].str();
  }
  out += "],\"var\":\"x\"}";
  return out;
}

IntPolynomial poly_from_json_string(std::string_view json_text) {
  const auto doc = nlohmann::json::parse(json_text);
  if (!doc.is_object() || !doc.contains("coeffs") || !doc["coeffs"].is_array())
    throw std::invalid_argument("polynomial JSON: expected {\"coeffs\": [...]}");
  if (doc.contains("var") && doc["var"] != "x")
    throw std::invalid_argument("polynomial JSON: unsupported variable");
  std::vector<BigInt> coeffs;
  coeffs.reserve(doc["coeffs"].size());
  for (const auto& c : doc["coeffs"]) {
    if (c.is_number_integer()) {
      coeffs.emplace_back(c.get<std::int64_t>());
    } else if (c.is_number_unsigned()) {
      coeffs.emplace_back(c.get<std::uint64_t>());
    } else {
      throw std::invalid_argument("polynomial JSON: coefficients must be integers");
    }
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace oddlen
