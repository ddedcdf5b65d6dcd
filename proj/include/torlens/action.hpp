#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "torlens/base.hpp"
#include "torlens/int_matrix.hpp"
#include "torlens/polynomial.hpp"

namespace torlens {

enum class ActionError {
  non_prime_p,
  even_p,
  wrong_order,
  not_free,
  dimension_mismatch,
};

class ActionValidationError : public std::runtime_error {
 public:
  ActionValidationError(ActionError code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ActionError code() const { return code_; }

 private:
  ActionError code_;
};

// A validated order-p lattice automorphism rho of Z^n that is free away
// from the origin.  Validation forces char(rho) = (1 + x + ... + x^(p-1))^k
// with n = k(p-1), det(rho) = 1, and |det(rho - id)| = p^k.
struct ActionData {
  Int p;
  IntMatrix rho;
  std::size_t n = 0;
  long long k = 0;
  Int det_rho_minus_id;
};

inline IntMatrix rho_minus_identity(const ActionData& a) {
  return a.rho - IntMatrix::identity(a.n);
}

inline Int fixed_point_count(const ActionData& a) { return pow_int(a.p, a.k); }

inline ActionData validate_action(const Int& p, const IntMatrix& rho) {
  if (!rho.is_square()) {
    throw std::invalid_argument("validate_action: rho must be square");
  }
  if (!is_prime(p)) {
    throw ActionValidationError(ActionError::non_prime_p,
                                "p must be an odd prime (got " + p.str() + ")");
  }
  if (p == 2) {
    throw ActionValidationError(ActionError::even_p,
                                "p must be an odd prime (got 2)");
  }
  const std::size_t n = rho.rows();
  const IntMatrix id = IntMatrix::identity(n);
  if (matrix_power(rho, p) != id) {
    throw ActionValidationError(ActionError::wrong_order,
                                "rho^p != id: rho does not define a Z/" +
                                    p.str() + " action");
  }
  if (rho == id) {
    throw ActionValidationError(ActionError::wrong_order,
                                "rho must not be the identity");
  }
  const Int det_rm1 = determinant(rho - id);
  if (det_rm1 == 0) {
    throw ActionValidationError(
        ActionError::not_free,
        "action is not free away from the origin: det(rho - id) == 0");
  }
  if (Int(n) % (p - 1) != 0) {
    throw ActionValidationError(ActionError::dimension_mismatch,
                                "matrix dimension " + std::to_string(n) +
                                    " is not a multiple of p - 1");
  }
  const long long k = to_long_long(Int(n) / (p - 1), "k");

  // Forced by the checks above; failures here are library bugs.
  if (characteristic_polynomial(rho) != cyclotomic_polynomial(p).pow(k)) {
    throw InternalConsistencyError(
        "validate_action: characteristic polynomial is not the expected "
        "cyclotomic power");
  }
  if (determinant(rho) != 1) {
    throw InternalConsistencyError("validate_action: det(rho) != 1");
  }
  if (abs(det_rm1) != pow_int(p, k)) {
    throw InternalConsistencyError(
        "validate_action: |det(rho - id)| != p^k");
  }
  return ActionData{p, rho, n, k, det_rm1};
}

// One fixed point of the induced torus action, with coordinates in [0, 1).
struct TorusFixedPoint {
  std::vector<Rational> coordinates;
};

inline Rational fractional_part(const Rational& q) {
  const Int num = numerator(q);
  const Int den = denominator(q);  // positive
  Int fl = num / den;
  if (num < 0 && num % den != 0) fl -= 1;
  return q - Rational(fl);
}

// The p^k fixed points of rho on the torus R^n / Z^n, enumerated through the
// Smith normal form of rho - id: with u(rho - id)v = diag(d_i), the points
// are v * (c_1/d_1, ..., c_n/d_n) mod Z^n over all 0 <= c_i < d_i.
inline std::vector<TorusFixedPoint> torus_fixed_points(const ActionData& a) {
  const Int total = fixed_point_count(a);
  if (total > 1000000) {
    throw ResourceLimitError(
        "torus_fixed_points: refusing to enumerate more than 10^6 points");
  }
  const SnfDecomposition snf = smith_normal_form(rho_minus_identity(a));
  std::vector<long long> d(a.n);
  for (std::size_t i = 0; i < a.n; ++i) {
    d[i] = to_long_long(snf.diagonal[i], "invariant factor");
    if (d[i] == 0) {
      throw InternalConsistencyError("torus_fixed_points: singular matrix");
    }
  }
  std::vector<TorusFixedPoint> points;
  points.reserve(to_size(total, "fixed point count"));
  std::vector<long long> c(a.n, 0);
  for (;;) {
    TorusFixedPoint pt;
    pt.coordinates.resize(a.n);
    for (std::size_t row = 0; row < a.n; ++row) {
      Rational x = 0;
      for (std::size_t i = 0; i < a.n; ++i) {
        if (c[i] != 0) x += Rational(snf.v.at(row, i) * c[i], Int(d[i]));
      }
      pt.coordinates[row] = fractional_part(x);
    }
    points.push_back(std::move(pt));
    std::size_t i = a.n;
    while (i > 0 && c[i - 1] == d[i - 1] - 1) c[--i] = 0;
    if (i == 0) break;
    ++c[i - 1];
  }

  if (Int(points.size()) != total) {
    throw InternalConsistencyError("torus_fixed_points: wrong count");
  }
  std::set<std::vector<Rational>> seen;
  for (const TorusFixedPoint& pt : points) {
    if (!seen.insert(pt.coordinates).second) {
      throw InternalConsistencyError("torus_fixed_points: duplicate point");
    }
    for (std::size_t row = 0; row < a.n; ++row) {
      Rational moved = 0;
      for (std::size_t i = 0; i < a.n; ++i) {
        moved += Rational(a.rho.at(row, i)) * pt.coordinates[i];
      }
      if (denominator(Rational(moved - pt.coordinates[row])) != 1) {
        throw InternalConsistencyError("torus_fixed_points: point not fixed");
      }
    }
  }
  return points;
}

// Multiplication by a generator on the rank-(p-1) sublattice of the group
// ring of Z/p cut out by vanishing norm: the companion matrix of
// 1 + x + ... + x^(p-1).  This is the canonical free example for each p.
inline IntMatrix regular_representation_action(const Int& p) {
  if (!is_prime(p) || p == 2) {
    throw std::domain_error("regular_representation_action: p must be an odd prime");
  }
  const std::size_t n = to_size(p - 1, "p - 1");
  IntMatrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m.at(i + 1, i) = 1;
  for (std::size_t i = 0; i < n; ++i) m.at(i, n - 1) = -1;
  return m;
}

}  // namespace torlens
