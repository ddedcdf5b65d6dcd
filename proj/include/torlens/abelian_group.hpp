#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "torlens/base.hpp"
#include "torlens/int_matrix.hpp"

namespace torlens {

// Finitely generated abelian group in invariant-factor form:
//   Z^free_rank + Z/d_1 + ... + Z/d_t   (d_i >= 2, d_i | d_{i+1})
// plus an optional multiset of symbolic summands (named groups whose
// structure is deliberately not expanded, e.g. an ideal class group).
struct FgAbGroup {
  long long free_rank = 0;
  std::vector<Int> invariant_factors;
  std::vector<std::string> symbolic_summands;  // kept sorted

  bool is_trivial() const {
    return free_rank == 0 && invariant_factors.empty() &&
           symbolic_summands.empty();
  }

  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;
};

inline std::vector<std::pair<Int, long long>> factorize(Int v) {
  if (v < 1) throw std::invalid_argument("factorize: value must be positive");
  std::vector<std::pair<Int, long long>> out;
  long long budget = 2000000;  // torsion orders here are desk scale
  for (Int d = 2; d * d <= v; d += (d == 2 ? 1 : 2)) {
    if (--budget <= 0) {
      throw ResourceLimitError("factorize: trial-division budget exceeded");
    }
    long long e = 0;
    while (v % d == 0) {
      v /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (v > 1) out.emplace_back(v, 1);
  return out;
}

// Rewrite an arbitrary multiset of cyclic orders as an ascending invariant
// factor chain (unit factors dropped).
inline std::vector<Int> normalize_invariant_factors(
    const std::vector<Int>& torsion) {
  std::map<Int, std::vector<long long>> exps;  // prime -> exponents, one per factor
  std::size_t chain_len = 0;
  for (const Int& t : torsion) {
    if (t < 1) {
      throw std::invalid_argument("invariant factor must be positive");
    }
    if (t == 1) continue;
    for (const auto& [p, e] : factorize(t)) exps[p].push_back(e);
  }
  for (auto& [p, es] : exps) {
    std::sort(es.begin(), es.end(), std::greater<>());
    chain_len = std::max(chain_len, es.size());
  }
  std::vector<Int> chain(chain_len, Int(1));  // chain[0] is the largest factor
  for (const auto& [p, es] : exps) {
    for (std::size_t s = 0; s < es.size(); ++s) {
      chain[s] *= pow_int(p, es[s]);
    }
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

inline FgAbGroup make_free_group(long long rank) {
  if (rank < 0) throw std::invalid_argument("free rank must be >= 0");
  FgAbGroup g;
  g.free_rank = rank;
  return g;
}

inline FgAbGroup make_cyclic_group(const Int& order) {
  if (order < 1) throw std::invalid_argument("cyclic order must be positive");
  FgAbGroup g;
  if (order > 1) g.invariant_factors.push_back(order);
  return g;
}

inline FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
  FgAbGroup out;
  out.free_rank = a.free_rank + b.free_rank;
  std::vector<Int> torsion = a.invariant_factors;
  torsion.insert(torsion.end(), b.invariant_factors.begin(),
                 b.invariant_factors.end());
  out.invariant_factors = normalize_invariant_factors(torsion);
  out.symbolic_summands = a.symbolic_summands;
  out.symbolic_summands.insert(out.symbolic_summands.end(),
                               b.symbolic_summands.begin(),
                               b.symbolic_summands.end());
  std::sort(out.symbolic_summands.begin(), out.symbolic_summands.end());
  return out;
}

inline FgAbGroup direct_sum_power(const FgAbGroup& g, long long e) {
  if (e < 0) throw std::invalid_argument("direct_sum_power: negative exponent");
  FgAbGroup out;
  out.free_rank = g.free_rank * e;
  std::vector<Int> torsion;
  torsion.reserve(g.invariant_factors.size() * static_cast<std::size_t>(e));
  for (long long i = 0; i < e; ++i) {
    torsion.insert(torsion.end(), g.invariant_factors.begin(),
                   g.invariant_factors.end());
  }
  out.invariant_factors = normalize_invariant_factors(torsion);
  for (long long i = 0; i < e; ++i) {
    out.symbolic_summands.insert(out.symbolic_summands.end(),
                                 g.symbolic_summands.begin(),
                                 g.symbolic_summands.end());
  }
  std::sort(out.symbolic_summands.begin(), out.symbolic_summands.end());
  return out;
}

// Cokernel Z^rows / a Z^cols.  The SNF diagonal is already an invariant
// factor chain, so no refactorization happens here.
inline FgAbGroup cokernel(const IntMatrix& a) {
  const SnfDecomposition snf = smith_normal_form(a);
  FgAbGroup g;
  std::size_t nonzero = 0;
  for (const Int& d : snf.diagonal) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) g.invariant_factors.push_back(d);
  }
  g.free_rank =
      static_cast<long long>(a.rows()) - static_cast<long long>(nonzero);
  return g;
}

// "Z^r + Z/d1 + ... + name^s", with "Z" for rank one and "0" when trivial.
inline std::string render_group(const FgAbGroup& g) {
  std::vector<std::string> tokens;
  if (g.free_rank == 1) {
    tokens.push_back("Z");
  } else if (g.free_rank > 1) {
    tokens.push_back("Z^" + std::to_string(g.free_rank));
  }
  for (const Int& d : g.invariant_factors) tokens.push_back("Z/" + d.str());
  for (std::size_t i = 0; i < g.symbolic_summands.size();) {
    std::size_t j = i;
    while (j < g.symbolic_summands.size() &&
           g.symbolic_summands[j] == g.symbolic_summands[i]) {
      ++j;
    }
    const std::size_t count = j - i;
    tokens.push_back(count == 1
                         ? g.symbolic_summands[i]
                         : g.symbolic_summands[i] + "^" + std::to_string(count));
    i = j;
  }
  if (tokens.empty()) return "0";
  std::string out = tokens.front();
  for (std::size_t i = 1; i < tokens.size(); ++i) out += " + " + tokens[i];
  return out;
}

// Finitely generated module over Z with a named set of inverted primes
// ("inverted" is their product; 1 means plain Z coefficients).  Torsion
// orders must be coprime to the inverted primes.
struct LocalizedModule {
  Int inverted = 1;
  long long free_rank = 0;
  std::vector<Int> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

  friend bool operator==(const LocalizedModule&, const LocalizedModule&) =
      default;
};

inline LocalizedModule make_localized_module(const Int& inverted,
                                             long long free_rank,
                                             std::vector<Int> torsion = {}) {
  if (inverted < 1) {
    throw std::invalid_argument("inverted denominator must be positive");
  }
  if (free_rank < 0) throw std::invalid_argument("free rank must be >= 0");
  LocalizedModule m;
  m.inverted = inverted;
  m.free_rank = free_rank;
  m.torsion = normalize_invariant_factors(torsion);
  for (const Int& t : m.torsion) {
    if (gcd(t, inverted) != 1) {
      throw std::invalid_argument(
          "torsion order not coprime to inverted denominators");
    }
  }
  return m;
}

inline std::string render_module(const LocalizedModule& m) {
  const std::string coeff =
      m.inverted == 1 ? "Z" : "Z[1/" + m.inverted.str() + "]";
  std::vector<std::string> tokens;
  if (m.free_rank == 1) {
    tokens.push_back(coeff);
  } else if (m.free_rank > 1) {
    tokens.push_back(coeff + "^" + std::to_string(m.free_rank));
  }
  for (const Int& d : m.torsion) tokens.push_back("Z/" + d.str());
  if (tokens.empty()) return "0";
  std::string out = tokens.front();
  for (std::size_t i = 1; i < tokens.size(); ++i) out += " + " + tokens[i];
  return out;
}

}  // namespace torlens
