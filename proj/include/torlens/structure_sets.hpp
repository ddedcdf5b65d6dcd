#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "torlens/abelian_group.hpp"
#include "torlens/action.hpp"
#include "torlens/base.hpp"
#include "torlens/group_invariants.hpp"
#include "torlens/l_theory.hpp"

namespace torlens {

// Geometry of the flat bundle M over the lens space S^l / (Z/p) with fiber
// the n-torus.  l is consumed only through the parity of d = (n+l+1)/2,
// which fixes the sign of the rho-invariant eigenspace.
struct ManifoldParams {
  ActionData action;
  long long l = 0;
  long long dim = 0;   // n + l
  long long d = 0;     // (n + l + 1) / 2
  int rho_sign = 0;    // (-1)^d
};

inline ManifoldParams make_manifold_params(const ActionData& a, long long l) {
  if (l < 3 || l % 2 == 0) {
    throw std::domain_error("l must be an odd integer >= 3");
  }
  ManifoldParams mp;
  mp.action = a;
  mp.l = l;
  mp.dim = static_cast<long long>(a.n) + l;
  if (mp.dim < 5) {
    throw InternalConsistencyError("manifold dimension must be >= 5");
  }
  if ((mp.dim + 1) % 2 != 0) {
    throw InternalConsistencyError("n + l must be odd");
  }
  mp.d = (mp.dim + 1) / 2;
  mp.rho_sign = (mp.d % 2 == 0) ? 1 : -1;
  return mp;
}

// Periodic structure set of the classifying space: a free Z[1/p]-module of
// rank p^k (p-1)/2 in odd degrees, trivial in even degrees.
inline LocalizedModule sper_of_bgamma(const ActionData& a, long long m) {
  const long long rank = (mod4(m) % 2 == 1) ? peripheral_free_rank(a) : 0;
  return make_localized_module(a.p, rank);
}

namespace detail {

// Z^(p^k (p-1)/2) + sum_{i=0}^{i_hi} L_{n-i}(Z)^(r_i), the shared shape of
// the periodic and geometric structure sets (with or without the free
// peripheral part).
inline FgAbGroup surgery_term_sum(const ActionData& a, long long i_hi,
                                  bool with_peripheral) {
  const std::vector<long long> r = fixed_exterior_ranks(a);
  FgAbGroup acc;
  if (with_peripheral) acc.free_rank = peripheral_free_rank(a);
  for (long long i = 0; i <= i_hi; ++i) {
    acc = direct_sum(
        acc, direct_sum_power(l_of_z(static_cast<long long>(a.n) - i),
                              r[static_cast<std::size_t>(i)]));
  }
  return acc;
}

}  // namespace detail

// Periodic structure set of M in degree n + l + 1; independent of l.
inline FgAbGroup sper_of_m(const ManifoldParams& mp) {
  return detail::surgery_term_sum(mp.action,
                                  static_cast<long long>(mp.action.n), true);
}

// Geometric simple structure set of M: drops exactly the i = n term, an
// L_0(Z)^(r_n) = Z summand, from the periodic answer.
inline FgAbGroup sgeo_of_m(const ManifoldParams& mp) {
  return detail::surgery_term_sum(
      mp.action, static_cast<long long>(mp.action.n) - 1, true);
}

// Codomain of the total splitting obstruction: the L-term sum without the
// peripheral free part.
inline FgAbGroup sigma_geo_codomain(const ManifoldParams& mp) {
  return detail::surgery_term_sum(
      mp.action, static_cast<long long>(mp.action.n) - 1, false);
}

// One row per nonempty coordinate subset J: the splitting obstruction group
// L_{|J|}(Z) along the subtorus indexed by J.  Odd |J| rows are vacuous
// (zero group) and are retained, flagged.
struct SplittingEntry {
  std::vector<long long> subset;  // 1-based coordinate indices
  FgAbGroup obstruction_group;
  bool vacuous = false;
};

inline std::vector<SplittingEntry> splitting_census(const ManifoldParams& mp) {
  const std::size_t n = mp.action.n;
  if (n > 20) {
    throw ResourceLimitError("splitting_census: 2^n row budget exceeded");
  }
  std::vector<SplittingEntry> rows;
  rows.reserve((std::size_t{1} << n) - 1);
  for (std::size_t sz = 1; sz <= n; ++sz) {
    const FgAbGroup group = l_of_z(static_cast<long long>(sz));
    for (const auto& subset : lex_subsets(n, sz)) {
      SplittingEntry e;
      e.subset.reserve(sz);
      for (std::size_t idx : subset) {
        e.subset.push_back(static_cast<long long>(idx) + 1);
      }
      e.obstruction_group = group;
      e.vacuous = group.is_trivial();
      rows.push_back(std::move(e));
    }
  }
  if (rows.size() != (std::size_t{1} << n) - 1) {
    throw InternalConsistencyError("splitting_census: wrong row count");
  }
  return rows;
}

// One row per conjugacy class of order-p subgroups: the rho-invariant target
// Z[1/p]^((p-1)/2) in the (-1)^d eigenspace.
struct RhoTarget {
  SubgroupClassRep class_rep;
  LocalizedModule target;
};

inline std::vector<RhoTarget> rho_targets(const ManifoldParams& mp) {
  const ActionData& a = mp.action;
  const long long rk = rep_ring_rank(a.p, mp.rho_sign);
  std::vector<RhoTarget> rows;
  for (SubgroupClassRep& rep : conjugacy_classes(a)) {
    rows.push_back(RhoTarget{std::move(rep), make_localized_module(a.p, rk)});
  }
  return rows;
}

// Everything the detection machinery quantifies over, plus a free-rank audit
// that recomputes the geometric structure set rank by direct summation.
struct DetectionReport {
  std::vector<SplittingEntry> splitting_entries;
  std::vector<RhoTarget> rho_entries;
  FgAbGroup sigma_codomain;
  FgAbGroup structure_set;  // geometric simple structure set of M
  long long nontrivial_splitting_count = 0;
  long long audited_free_rank_direct = 0;
  long long audited_free_rank_summed = 0;
};

inline DetectionReport detection_report(const ManifoldParams& mp) {
  const ActionData& a = mp.action;
  DetectionReport rep;
  rep.splitting_entries = splitting_census(mp);
  rep.rho_entries = rho_targets(mp);
  rep.sigma_codomain = sigma_geo_codomain(mp);
  rep.structure_set = sgeo_of_m(mp);
  for (const SplittingEntry& e : rep.splitting_entries) {
    if (!e.vacuous) ++rep.nontrivial_splitting_count;
  }
  rep.audited_free_rank_direct = rep.structure_set.free_rank;
  // Independent summation: the free part is the peripheral Z^(p^k (p-1)/2)
  // plus one Z for every i < n with n - i divisible by 4.
  long long summed = peripheral_free_rank(a);
  const std::vector<long long> r = fixed_exterior_ranks(a);
  for (long long i = 0; i < static_cast<long long>(a.n); ++i) {
    if ((static_cast<long long>(a.n) - i) % 4 == 0) {
      summed += r[static_cast<std::size_t>(i)];
    }
  }
  rep.audited_free_rank_summed = summed;
  if (rep.audited_free_rank_direct != rep.audited_free_rank_summed) {
    throw InternalConsistencyError("detection_report: free-rank audit failed");
  }
  return rep;
}

}  // namespace torlens
