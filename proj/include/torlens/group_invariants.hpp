#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "torlens/abelian_group.hpp"
#include "torlens/action.hpp"
#include "torlens/base.hpp"
#include "torlens/int_matrix.hpp"

namespace torlens {

// H^1(Z/p; Z^n) = coker(rho - id); always (Z/p)^k for a valid action.
inline FgAbGroup h1(const ActionData& a) {
  const FgAbGroup g = cokernel(rho_minus_identity(a));
  const std::vector<Int> expected(static_cast<std::size_t>(a.k), a.p);
  if (g.free_rank != 0 || g.invariant_factors != expected ||
      !g.symbolic_summands.empty()) {
    throw InternalConsistencyError("h1: cokernel is not (Z/p)^k");
  }
  return g;
}

// Abelianization of Z^n x| Z/p: coker(rho - id) + Z/p = (Z/p)^(k+1).
inline FgAbGroup abelianization(const ActionData& a) {
  const FgAbGroup g = direct_sum(h1(a), make_cyclic_group(a.p));
  const std::vector<Int> expected(static_cast<std::size_t>(a.k) + 1, a.p);
  if (g.free_rank != 0 || g.invariant_factors != expected) {
    throw InternalConsistencyError("abelianization: result is not (Z/p)^(k+1)");
  }
  return g;
}

// The commutator subgroup is (rho - id) Z^n; full rank is equivalent to the
// freeness already enforced by validation.
inline bool commutator_rank_check(const ActionData& a) {
  return rank(rho_minus_identity(a)) == a.n;
}

// Canonical representative of one conjugacy class of order-p subgroups.
// Two representatives are conjugate iff their translation parts agree in
// coker(rho - id); labels enumerate the cokernel in mixed-radix order.
struct SubgroupClassRep {
  long long label = 0;
  std::vector<Int> translation;
};

inline std::vector<SubgroupClassRep> conjugacy_classes(const ActionData& a) {
  const Int total = fixed_point_count(a);
  if (total > 1000000) {
    throw ResourceLimitError(
        "conjugacy_classes: refusing to enumerate more than 10^6 classes");
  }
  const SnfDecomposition snf = smith_normal_form(rho_minus_identity(a));
  const IntMatrix u_inv = inverse_unimodular(snf.u);
  std::vector<long long> d(a.n);
  for (std::size_t i = 0; i < a.n; ++i) {
    d[i] = to_long_long(snf.diagonal[i], "invariant factor");
  }
  std::vector<SubgroupClassRep> reps;
  reps.reserve(to_size(total, "class count"));
  std::vector<long long> c(a.n, 0);
  long long label = 0;
  for (;;) {
    SubgroupClassRep rep;
    rep.label = label++;
    rep.translation.resize(a.n);
    for (std::size_t row = 0; row < a.n; ++row) {
      Int x = 0;
      for (std::size_t i = 0; i < a.n; ++i) {
        if (c[i] != 0) x += u_inv.at(row, i) * c[i];
      }
      rep.translation[row] = x;
    }
    reps.push_back(std::move(rep));
    std::size_t i = a.n;
    while (i > 0 && c[i - 1] == d[i - 1] - 1) c[--i] = 0;
    if (i == 0) break;
    ++c[i - 1];
  }
  if (Int(reps.size()) != total) {
    throw InternalConsistencyError("conjugacy_classes: wrong class count");
  }
  for (const Int& x : reps.front().translation) {
    if (x != 0) {
      throw InternalConsistencyError(
          "conjugacy_classes: class 0 is not the untranslated subgroup");
    }
  }
  return reps;
}

// r_j = dimension of the fixed subspace of the j-th exterior power of rho,
// computed as the rational kernel rank of ext^j(rho) - id, j = 0..n.
inline std::vector<long long> fixed_exterior_ranks(const ActionData& a) {
  if (determinant(a.rho) != 1) {
    throw InternalConsistencyError("fixed_exterior_ranks: det(rho) != 1");
  }
  if (binomial(static_cast<long long>(a.n),
               static_cast<long long>(a.n) / 2) > 100000) {
    throw ResourceLimitError(
        "fixed_exterior_ranks: exterior power budget exceeded");
  }
  std::vector<long long> r(a.n + 1);
  for (std::size_t j = 0; j <= a.n; ++j) {
    const IntMatrix lam = exterior_power(a.rho, j);
    r[j] = rational_kernel_rank(lam - IntMatrix::identity(lam.rows()));
  }
  if (r.front() != 1 || r.back() != 1) {
    throw InternalConsistencyError(
        "fixed_exterior_ranks: r_0 and r_n must both be 1");
  }
  return r;
}

// Closed form for k = 1 (rho of size p-1 with irreducible characteristic
// polynomial): r_j = (binom(p-1, j) + (-1)^j (p-1)) / p, and 0 for j >= p.
inline long long fixed_rank_closed_form_k1(const Int& p, long long j) {
  if (!is_prime(p) || p == 2) {
    throw std::domain_error("fixed_rank_closed_form_k1: p must be an odd prime");
  }
  if (j < 0) throw std::domain_error("fixed_rank_closed_form_k1: j < 0");
  if (Int(j) >= p) return 0;
  const long long sign = (j % 2 == 0) ? 1 : -1;
  const Int num = binomial(to_long_long(p - 1, "p - 1"), j) + sign * (p - 1);
  if (num % p != 0) {
    throw InternalConsistencyError(
        "fixed_rank_closed_form_k1: sum not divisible by p");
  }
  return to_long_long(num / p, "r_j");
}

}  // namespace torlens
