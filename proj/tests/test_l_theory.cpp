#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "torlens/action.hpp"
#include "torlens/l_theory.hpp"
#include "torlens/oracles.hpp"

namespace {

using torlens::ActionData;
using torlens::FgAbGroup;
using torlens::Int;
using torlens::IntMatrix;
using torlens::LDecoration;

IntMatrix mat(const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<Int>> conv;
  for (const auto& r : rows) conv.emplace_back(r.begin(), r.end());
  return IntMatrix::from_rows(conv);
}

ActionData golden() {
  return torlens::validate_action(3, mat({{0, -1}, {1, -1}}));
}

ActionData p3k2() {
  const IntMatrix rho = torlens::block_diagonal(
      {mat({{0, -1}, {1, -1}}), mat({{0, -1}, {1, -1}})});
  return torlens::validate_action(3, rho);
}

ActionData companion(long long p) {
  return torlens::validate_action(p,
                                  torlens::regular_representation_action(p));
}

// Recomputes ls_of_zgamma degreewise from the character-theoretic rank
// vector: in degree m the free rank is the peripheral term (even m only)
// plus one per i with m - i divisible by 4, and the torsion is one Z/2 per
// i with m - i congruent to 2 mod 4.
FgAbGroup expand_by_counting(const ActionData& a, long long m) {
  const std::vector<long long> r = torlens::oracle_r_by_characters(a);
  FgAbGroup g;
  if (torlens::mod4(m) % 2 == 0) g.free_rank = torlens::peripheral_free_rank(a);
  long long two_torsion = 0;
  for (std::size_t i = 0; i <= a.n; ++i) {
    const long long deg = torlens::mod4(m - static_cast<long long>(i));
    if (deg == 0) g.free_rank += r[i];
    if (deg == 2) two_torsion += r[i];
  }
  g.invariant_factors.assign(static_cast<std::size_t>(two_torsion), Int(2));
  return g;
}

}  // namespace

TEST_CASE("L-groups of the integers are 4-periodic") {
  for (long long m = -8; m < 8; ++m) {
    const FgAbGroup g = torlens::l_of_z(m);
    switch (torlens::mod4(m)) {
      case 0:
        REQUIRE(g == torlens::make_free_group(1));
        break;
      case 2:
        REQUIRE(g == torlens::make_cyclic_group(2));
        break;
      default:
        REQUIRE(g.is_trivial());
    }
    REQUIRE(g == torlens::l_of_z(m + 4));
  }
}

TEST_CASE("L-groups of Laurent rings over free abelian groups") {
  // n = 0 reduces to the ground ring
  for (long long m = 0; m < 4; ++m) {
    REQUIRE(torlens::l_of_zn(m, 0) == torlens::l_of_z(m));
  }
  REQUIRE(torlens::l_of_zn(1, 1) == torlens::make_free_group(1));
  const FgAbGroup g02 = torlens::l_of_zn(0, 2);
  REQUIRE(g02.free_rank == 1);
  REQUIRE(g02.invariant_factors == std::vector<Int>{2});
  // rank audit: free summands appear for each i with m - i = 0 mod 4
  const FgAbGroup g04 = torlens::l_of_zn(0, 4);
  REQUIRE(g04.free_rank == 1 + 1);          // i = 0 and i = 4
  REQUIRE(g04.invariant_factors.size() == 6);  // binom(4, 2) copies of Z/2
  REQUIRE_THROWS_AS(torlens::l_of_zn(0, -1), std::domain_error);
}

TEST_CASE("decorated L-groups of cyclic group rings") {
  // supported decorations all agree
  for (long long m = -4; m < 4; ++m) {
    const FgAbGroup a = torlens::l_of_zp_decorated(5, m, LDecoration::p);
    REQUIRE(a == torlens::l_of_zp_decorated(5, m, LDecoration::minus_i));
    REQUIRE(a == torlens::l_of_zp_decorated(5, m, LDecoration::minus_infinity));
  }
  const FgAbGroup even0 = torlens::l_of_zp_decorated(5, 0, LDecoration::p);
  REQUIRE(even0 == torlens::make_free_group(3));
  const FgAbGroup even2 = torlens::l_of_zp_decorated(5, 2, LDecoration::p);
  REQUIRE(even2.free_rank == 2);
  REQUIRE(even2.invariant_factors == std::vector<Int>{2});
  REQUIRE(torlens::l_of_zp_decorated(5, 1, LDecoration::p).is_trivial());
  REQUIRE(torlens::l_of_zp_decorated(5, 3, LDecoration::p).is_trivial());

  REQUIRE_THROWS_AS(torlens::l_of_zp_decorated(5, 0, LDecoration::s),
                    std::domain_error);
  REQUIRE_THROWS_AS(torlens::l_of_zp_decorated(5, 0, LDecoration::h),
                    std::domain_error);
  REQUIRE_THROWS_AS(torlens::l_of_zp_decorated(4, 0, LDecoration::p),
                    std::domain_error);
}

TEST_CASE("reduced simple L-groups of cyclic group rings") {
  REQUIRE(torlens::reduced_ls_of_zp(3, 0) == torlens::make_free_group(1));
  REQUIRE(torlens::reduced_ls_of_zp(5, 2) == torlens::make_free_group(2));
  REQUIRE(torlens::reduced_ls_of_zp(7, -4) == torlens::make_free_group(3));
  REQUIRE(torlens::reduced_ls_of_zp(5, 1).is_trivial());
  REQUIRE(torlens::reduced_ls_of_zp(5, 3).is_trivial());
  REQUIRE_THROWS_AS(torlens::reduced_ls_of_zp(9, 0), std::domain_error);
}

TEST_CASE("peripheral free rank scales as p^k (p-1)/2") {
  REQUIRE(torlens::peripheral_free_rank(golden()) == 3);
  REQUIRE(torlens::peripheral_free_rank(p3k2()) == 9);
  REQUIRE(torlens::peripheral_free_rank(companion(5)) == 10);
  REQUIRE(torlens::peripheral_free_rank(companion(7)) == 21);
}

TEST_CASE("L-groups of the total group ring, running example") {
  const ActionData a = golden();

  // all four residues against the independent degreewise count
  for (long long m = 0; m < 4; ++m) {
    REQUIRE(torlens::ls_of_zgamma(a, m) == expand_by_counting(a, m));
  }

  const FgAbGroup m0 = torlens::ls_of_zgamma(a, 0);
  REQUIRE(m0.free_rank == 4);
  REQUIRE(m0.invariant_factors == std::vector<Int>{2});
  REQUIRE(torlens::ls_of_zgamma(a, 1).is_trivial());
  const FgAbGroup m2 = torlens::ls_of_zgamma(a, 2);
  REQUIRE(m2.free_rank == 4);
  REQUIRE(m2.invariant_factors == std::vector<Int>{2});
  REQUIRE(torlens::ls_of_zgamma(a, 3).is_trivial());
}

TEST_CASE("L-groups of the total group ring, other actions") {
  for (const ActionData& a : {p3k2(), companion(5)}) {
    for (long long m = -4; m < 8; ++m) {
      REQUIRE(torlens::ls_of_zgamma(a, m) == expand_by_counting(a, m));
    }
  }
}

TEST_CASE("L-groups of the total group ring are 4-periodic") {
  const ActionData a = golden();
  for (long long m = -8; m < 8; ++m) {
    REQUIRE(torlens::ls_of_zgamma(a, m) == torlens::ls_of_zgamma(a, m + 4));
  }
}

TEST_CASE("Whitehead groups") {
  // (p - 3)/2 kills the rank at p = 3 for every k
  REQUIRE(torlens::whitehead_group(golden(), 1).is_trivial());
  REQUIRE(torlens::whitehead_group(p3k2(), 1).is_trivial());
  REQUIRE(torlens::whitehead_group(companion(5), 1) ==
          torlens::make_free_group(5));
  REQUIRE(torlens::whitehead_group(companion(7), 1) ==
          torlens::make_free_group(14));

  const FgAbGroup wh0 = torlens::whitehead_group(golden(), 0);
  REQUIRE(wh0.free_rank == 0);
  REQUIRE(wh0.invariant_factors.empty());
  REQUIRE(wh0.symbolic_summands ==
          std::vector<std::string>(3, "C(Z[zeta_3])"));
  REQUIRE(torlens::whitehead_group(p3k2(), 0).symbolic_summands.size() == 9);

  for (long long m = -5; m < 0; ++m) {
    REQUIRE(torlens::whitehead_group(golden(), m).is_trivial());
  }
  REQUIRE_THROWS_AS(torlens::whitehead_group(golden(), 2), std::domain_error);
  REQUIRE_THROWS_AS(torlens::whitehead_group(golden(), 7), std::domain_error);
}

TEST_CASE("representation ring eigenspace ranks") {
  REQUIRE(torlens::rep_ring_rank(3, 1) == 1);
  REQUIRE(torlens::rep_ring_rank(3, -1) == 1);
  REQUIRE(torlens::rep_ring_rank(5, 1) == 2);
  REQUIRE(torlens::rep_ring_rank(5, -1) == 2);
  REQUIRE(torlens::rep_ring_rank(7, -1) == 3);
  REQUIRE_THROWS_AS(torlens::rep_ring_rank(5, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(torlens::rep_ring_rank(5, 2), std::invalid_argument);
  REQUIRE_THROWS_AS(torlens::rep_ring_rank(4, 1), std::domain_error);
}
