#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "torlens/base.hpp"

namespace torlens {

// Univariate integer polynomial.  Coefficients are stored lowest degree
// first; the highest-degree coefficient is nonzero unless the polynomial is
// zero (empty coefficient vector, degree -1).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static IntPolynomial constant(Int c) {
    return IntPolynomial(std::vector<Int>{std::move(c)});
  }
  static IntPolynomial x() { return IntPolynomial({Int(0), Int(1)}); }

  long long degree() const {
    return static_cast<long long>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Int>& coefficients() const { return coeffs_; }

  Int coefficient(long long i) const {
    if (i < 0 || i >= static_cast<long long>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  IntPolynomial operator+(const IntPolynomial& o) const {
    std::vector<Int> out(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (i < coeffs_.size()) out[i] += coeffs_[i];
      if (i < o.coeffs_.size()) out[i] += o.coeffs_[i];
    }
    return IntPolynomial(std::move(out));
  }

  IntPolynomial operator-(const IntPolynomial& o) const {
    std::vector<Int> out(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (i < coeffs_.size()) out[i] += coeffs_[i];
      if (i < o.coeffs_.size()) out[i] -= o.coeffs_[i];
    }
    return IntPolynomial(std::move(out));
  }

  IntPolynomial operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<Int> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
        out[i + j] += coeffs_[i] * o.coeffs_[j];
      }
    }
    return IntPolynomial(std::move(out));
  }

  IntPolynomial pow(long long e) const {
    if (e < 0) throw std::domain_error("IntPolynomial::pow: negative exponent");
    IntPolynomial result = constant(1);
    IntPolynomial base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  Int evaluate(const Int& at) const {
    Int acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      acc = acc * at + coeffs_[i];
    }
    return acc;
  }

  // Human-readable form for diagnostics, e.g. "x^2 + x + 1".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const Int& c = coeffs_[i];
      if (c == 0) continue;
      if (!out.empty()) out += (c < 0) ? " - " : " + ";
      else if (c < 0) out += "-";
      const Int a = abs(c);
      const bool unit = (a == 1) && i > 0;
      if (!unit) out += a.str();
      if (i > 0) {
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Int> coeffs_;
};

// 1 + x + ... + x^(p-1) for prime p.
inline IntPolynomial cyclotomic_polynomial(const Int& p) {
  if (!is_prime(p)) {
    throw std::domain_error("cyclotomic_polynomial: p must be prime, got " +
                            p.str());
  }
  if (p > 1000000) {
    throw ResourceLimitError("cyclotomic_polynomial: degree budget exceeded");
  }
  return IntPolynomial(std::vector<Int>(to_size(p, "p"), Int(1)));
}

// Coefficient of x^degree in f^k, computed from the full product.
inline Int power_coefficient(const IntPolynomial& f, long long k,
                             long long degree) {
  if (k < 0) throw std::domain_error("power_coefficient: negative exponent");
  if (degree < 0) {
    throw std::domain_error("power_coefficient: negative degree");
  }
  return f.pow(k).coefficient(degree);
}

}  // namespace torlens
