#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "torlens/abelian_group.hpp"
#include "torlens/action.hpp"
#include "torlens/base.hpp"
#include "torlens/group_invariants.hpp"

namespace torlens {

// Simple L-groups of the integers, 4-periodic: Z, 0, Z/2, 0.
inline FgAbGroup l_of_z(long long m) {
  switch (mod4(m)) {
    case 0:
      return make_free_group(1);
    case 2:
      return make_cyclic_group(2);
    default:
      return FgAbGroup{};
  }
}

// L_m(Z[Z^n]) = sum over i of binom(n, i) copies of L_{m-i}(Z).
inline FgAbGroup l_of_zn(long long m, long long n) {
  if (n < 0) throw std::domain_error("l_of_zn: n must be >= 0");
  FgAbGroup acc;
  for (long long i = 0; i <= n; ++i) {
    acc = direct_sum(
        acc, direct_sum_power(l_of_z(m - i), to_long_long(binomial(n, i))));
  }
  return acc;
}

enum class LDecoration { s, h, p, minus_i, minus_infinity };

// L-groups of Z[Z/p] with decoration <0>, <-i> or <-infinity>; these all
// coincide because the relevant lower K-groups vanish.  The s and h
// decorations differ and are not provided.
inline FgAbGroup l_of_zp_decorated(const Int& p, long long m,
                                   LDecoration dec) {
  if (!is_prime(p) || p == 2) {
    throw std::domain_error("l_of_zp_decorated: p must be an odd prime");
  }
  if (dec == LDecoration::s || dec == LDecoration::h) {
    throw std::domain_error(
        "l_of_zp_decorated: unsupported decoration (only <0>, <-i>, "
        "<-infinity> are tabulated)");
  }
  if (mod4(m) % 2 != 0) return FgAbGroup{};
  return direct_sum(make_free_group(to_long_long((p - 1) / 2)), l_of_z(m));
}

// Reduced simple L-groups of Z[Z/p]: Z^((p-1)/2) in even degrees, 0 in odd.
inline FgAbGroup reduced_ls_of_zp(const Int& p, long long m) {
  if (!is_prime(p) || p == 2) {
    throw std::domain_error("reduced_ls_of_zp: p must be an odd prime");
  }
  if (mod4(m) % 2 != 0) return FgAbGroup{};
  return make_free_group(to_long_long((p - 1) / 2));
}

// Rank of the summand contributed by each of the p^k conjugacy classes of
// order-p subgroups in even degrees.
inline long long peripheral_free_rank(const ActionData& a) {
  return to_long_long(pow_int(a.p, a.k) * (a.p - 1) / 2, "peripheral rank");
}

// Simple L-groups of the integral group ring of Z^n x| Z/p:
//   even m:  Z^(p^k (p-1)/2)  +  sum_i L_{m-i}(Z)^(r_i)
//   odd  m:  sum_i L_{m-i}(Z)^(r_i)
inline FgAbGroup ls_of_zgamma(const ActionData& a, long long m) {
  const std::vector<long long> r = fixed_exterior_ranks(a);
  FgAbGroup acc;
  if (mod4(m) % 2 == 0) acc.free_rank = peripheral_free_rank(a);
  for (std::size_t i = 0; i <= a.n; ++i) {
    acc = direct_sum(
        acc, direct_sum_power(l_of_z(m - static_cast<long long>(i)), r[i]));
  }
  return acc;
}

// Whitehead groups of Z^n x| Z/p.  Wh_1 is free of rank p^k (p-3)/2; Wh_0
// is p^k copies of the ideal class group of Z[zeta_p], kept symbolic; all
// lower groups vanish.  Higher degrees are not tabulated.
inline FgAbGroup whitehead_group(const ActionData& a, long long m) {
  if (m >= 2) {
    throw std::domain_error("whitehead_group: degrees >= 2 are not tabulated");
  }
  if (m == 1) {
    return make_free_group(
        to_long_long(pow_int(a.p, a.k) * (a.p - 3) / 2, "Wh_1 rank"));
  }
  if (m == 0) {
    FgAbGroup g;
    const std::string name = "C(Z[zeta_" + a.p.str() + "])";
    g.symbolic_summands.assign(to_size(pow_int(a.p, a.k), "class count"), name);
    return g;
  }
  return FgAbGroup{};
}

// Free rank of the (-1)^d eigenspace of the reduced representation ring of
// Z/p: (p-1)/2 for either sign.
inline long long rep_ring_rank(const Int& p, int sign) {
  if (!is_prime(p) || p == 2) {
    throw std::domain_error("rep_ring_rank: p must be an odd prime");
  }
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("rep_ring_rank: sign must be +1 or -1");
  }
  return to_long_long((p - 1) / 2);
}

}  // namespace torlens
