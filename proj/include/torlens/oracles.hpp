#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "torlens/action.hpp"
#include "torlens/base.hpp"
#include "torlens/group_invariants.hpp"
#include "torlens/polynomial.hpp"

namespace torlens {

// Result of one independent cross-check.
struct OracleOutcome {
  std::string name;
  std::string expected;
  std::string actual;
  bool agree = false;
};

// Brute-force conjugacy count: orbits of (Z/modulus)^n under translation by
// the columns of (id - rho).  For any modulus divisible by p the orbits are
// exactly the elements of coker(rho - id), so the count must be p^k.  This
// route never looks at a Smith normal form.
inline Int oracle_conjugacy_by_orbits(const ActionData& a, Int modulus = 0) {
  const Int pk = pow_int(a.p, a.k);
  if (modulus == 0) modulus = pk * a.p;
  if (modulus < 2 || modulus % pk != 0) {
    throw std::domain_error(
        "oracle_conjugacy_by_orbits: modulus must be a multiple of p^k");
  }
  const long long q = to_long_long(modulus, "modulus");
  Int states_big = 1;
  for (std::size_t i = 0; i < a.n; ++i) states_big *= q;
  if (states_big > 10000000) {
    throw ResourceLimitError(
        "oracle_conjugacy_by_orbits: state space exceeds 10^7");
  }
  const std::size_t states = to_size(states_big, "state count");

  // Generators: columns of (id - rho) reduced mod q.
  std::vector<std::vector<long long>> gens(a.n, std::vector<long long>(a.n));
  for (std::size_t col = 0; col < a.n; ++col) {
    for (std::size_t row = 0; row < a.n; ++row) {
      const Int entry = (row == col ? Int(1) : Int(0)) - a.rho.at(row, col);
      Int red = entry % q;
      if (red < 0) red += q;
      gens[col][row] = to_long_long(red, "generator entry");
    }
  }

  std::vector<std::int32_t> parent(states);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::int32_t x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](std::int32_t x, std::int32_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
  };

  std::vector<long long> digits(a.n);
  for (std::size_t s = 0; s < states; ++s) {
    std::size_t rem = s;
    for (std::size_t i = a.n; i-- > 0;) {
      digits[i] = static_cast<long long>(rem % static_cast<std::size_t>(q));
      rem /= static_cast<std::size_t>(q);
    }
    for (const auto& g : gens) {
      std::size_t neighbor = 0;
      for (std::size_t i = 0; i < a.n; ++i) {
        neighbor = neighbor * static_cast<std::size_t>(q) +
                   static_cast<std::size_t>((digits[i] + g[i]) % q);
      }
      unite(static_cast<std::int32_t>(s), static_cast<std::int32_t>(neighbor));
    }
  }
  Int orbits = 0;
  for (std::size_t s = 0; s < states; ++s) {
    if (find(static_cast<std::int32_t>(s)) == static_cast<std::int32_t>(s)) {
      ++orbits;
    }
  }
  return orbits;
}

// Character-theoretic route to the fixed exterior ranks: rho and all its
// nontrivial powers share the eigenvalue multiset (each primitive p-th root
// of unity with multiplicity k), so averaging traces over the group gives
//   r_j = ( binom(n, j) + (p-1) (-1)^j c_{n-j} ) / p
// where c_i is the x^i coefficient of (1 + x + ... + x^(p-1))^k.  The
// division must be exact.
inline std::vector<long long> oracle_r_by_characters(const ActionData& a) {
  const IntPolynomial phi_pow = cyclotomic_polynomial(a.p).pow(a.k);
  std::vector<long long> r(a.n + 1);
  for (std::size_t j = 0; j <= a.n; ++j) {
    const long long sign = (j % 2 == 0) ? 1 : -1;
    const Int num =
        binomial(static_cast<long long>(a.n), static_cast<long long>(j)) +
        (a.p - 1) * sign *
            phi_pow.coefficient(static_cast<long long>(a.n - j));
    if (num % a.p != 0) {
      throw InternalConsistencyError(
          "oracle_r_by_characters: character sum not divisible by p");
    }
    r[j] = to_long_long(num / a.p, "r_j");
  }
  return r;
}

// Fixed points of the torus action counted by the determinant alone.
inline Int oracle_fixed_point_count(const ActionData& a) {
  return abs(determinant(rho_minus_identity(a)));
}

// Per-degree agreement of the exterior-power computation, the character
// oracle, and (for k = 1) the closed form.
inline std::vector<OracleOutcome> oracle_closed_form_vs_exterior(
    const ActionData& a) {
  const std::vector<long long> by_exterior = fixed_exterior_ranks(a);
  const std::vector<long long> by_characters = oracle_r_by_characters(a);
  std::vector<OracleOutcome> out;
  out.reserve(a.n + 1);
  for (std::size_t j = 0; j <= a.n; ++j) {
    OracleOutcome o;
    o.name = "r_" + std::to_string(j);
    o.expected = std::to_string(by_characters[j]);
    o.actual = std::to_string(by_exterior[j]);
    o.agree = by_characters[j] == by_exterior[j];
    if (a.k == 1) {
      o.agree = o.agree && fixed_rank_closed_form_k1(
                               a.p, static_cast<long long>(j)) ==
                               by_characters[j];
    }
    out.push_back(std::move(o));
  }
  return out;
}

// Every oracle this library provides, as a flat outcome list.  The orbit
// enumeration (and its doubled-modulus stability check) is skipped when the
// state space would exceed its budget.
inline std::vector<OracleOutcome> run_all_oracles(const ActionData& a) {
  std::vector<OracleOutcome> out;
  const Int pk = fixed_point_count(a);

  OracleOutcome det_count;
  det_count.name = "fixed_point_count_by_determinant";
  det_count.expected = pk.str();
  det_count.actual = oracle_fixed_point_count(a).str();
  det_count.agree = det_count.expected == det_count.actual;
  out.push_back(std::move(det_count));

  try {
    OracleOutcome enumerated;
    enumerated.name = "fixed_point_enumeration";
    enumerated.expected = pk.str();
    enumerated.actual = Int(torus_fixed_points(a).size()).str();
    enumerated.agree = enumerated.expected == enumerated.actual;
    out.push_back(std::move(enumerated));
  } catch (const ResourceLimitError&) {
  }

  try {
    OracleOutcome orbits;
    orbits.name = "conjugacy_class_orbit_count";
    orbits.expected = pk.str();
    orbits.actual = oracle_conjugacy_by_orbits(a).str();
    orbits.agree = orbits.expected == orbits.actual;
    out.push_back(std::move(orbits));

    OracleOutcome stability;
    stability.name = "conjugacy_class_orbit_count_doubled_modulus";
    stability.expected = pk.str();
    stability.actual = oracle_conjugacy_by_orbits(a, pk * a.p * 2).str();
    stability.agree = stability.expected == stability.actual;
    out.push_back(std::move(stability));
  } catch (const ResourceLimitError&) {
  }

  for (OracleOutcome& o : oracle_closed_form_vs_exterior(a)) {
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace torlens
