#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "torlens/action.hpp"
#include "torlens/structure_sets.hpp"

namespace {

using torlens::ActionData;
using torlens::FgAbGroup;
using torlens::Int;
using torlens::IntMatrix;
using torlens::ManifoldParams;

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

}  // namespace

TEST_CASE("manifold parameters") {
  const ManifoldParams mp = torlens::make_manifold_params(golden(), 3);
  REQUIRE(mp.dim == 5);
  REQUIRE(mp.d == 3);
  REQUIRE(mp.rho_sign == -1);

  const ManifoldParams mp5 = torlens::make_manifold_params(companion(5), 3);
  REQUIRE(mp5.dim == 7);
  REQUIRE(mp5.d == 4);
  REQUIRE(mp5.rho_sign == 1);

  const ManifoldParams mpl5 = torlens::make_manifold_params(golden(), 5);
  REQUIRE(mpl5.dim == 7);
  REQUIRE(mpl5.rho_sign == 1);

  REQUIRE_THROWS_AS(torlens::make_manifold_params(golden(), 4),
                    std::domain_error);
  REQUIRE_THROWS_AS(torlens::make_manifold_params(golden(), 1),
                    std::domain_error);
  REQUIRE_THROWS_AS(torlens::make_manifold_params(golden(), -3),
                    std::domain_error);
}

TEST_CASE("periodic structure set of the bundle, running example") {
  const ManifoldParams mp = torlens::make_manifold_params(golden(), 3);
  const FgAbGroup sper = torlens::sper_of_m(mp);
  REQUIRE(sper.free_rank == 4);
  REQUIRE(sper.invariant_factors == std::vector<Int>{2});
  REQUIRE(torlens::render_group(sper) == "Z^4 + Z/2");
}

TEST_CASE("geometric structure set of the bundle, running example") {
  const ManifoldParams mp = torlens::make_manifold_params(golden(), 3);
  const FgAbGroup sgeo = torlens::sgeo_of_m(mp);
  REQUIRE(sgeo.free_rank == 3);
  REQUIRE(sgeo.invariant_factors == std::vector<Int>{2});
  REQUIRE(torlens::render_group(sgeo) == "Z^3 + Z/2");
}

TEST_CASE("structure sets for the rank-4 actions") {
  const ManifoldParams mp5 = torlens::make_manifold_params(companion(5), 3);
  const FgAbGroup sper5 = torlens::sper_of_m(mp5);
  REQUIRE(sper5.free_rank == 12);
  REQUIRE(sper5.invariant_factors == std::vector<Int>({2, 2}));
  const FgAbGroup sgeo5 = torlens::sgeo_of_m(mp5);
  REQUIRE(sgeo5.free_rank == 11);
  REQUIRE(sgeo5.invariant_factors == std::vector<Int>({2, 2}));

  const ManifoldParams mp9 = torlens::make_manifold_params(p3k2(), 3);
  const FgAbGroup sper9 = torlens::sper_of_m(mp9);
  REQUIRE(sper9.free_rank == 11);
  REQUIRE(sper9.invariant_factors == std::vector<Int>({2, 2, 2, 2}));
  const FgAbGroup sgeo9 = torlens::sgeo_of_m(mp9);
  REQUIRE(sgeo9.free_rank == 10);
  REQUIRE(sgeo9.invariant_factors == std::vector<Int>({2, 2, 2, 2}));
}

TEST_CASE("geometric set drops exactly one free summand") {
  for (const ActionData& a : {golden(), p3k2(), companion(5), companion(7)}) {
    const ManifoldParams mp = torlens::make_manifold_params(a, 3);
    const FgAbGroup sper = torlens::sper_of_m(mp);
    const FgAbGroup sgeo = torlens::sgeo_of_m(mp);
    REQUIRE(sper.free_rank == sgeo.free_rank + 1);
    REQUIRE(sper.invariant_factors == sgeo.invariant_factors);
  }
}

TEST_CASE("structure sets do not depend on the fiber-sphere dimension") {
  const ActionData a = golden();
  const FgAbGroup sper3 = torlens::sper_of_m(torlens::make_manifold_params(a, 3));
  const FgAbGroup sgeo3 = torlens::sgeo_of_m(torlens::make_manifold_params(a, 3));
  for (long long l : {5, 7, 9}) {
    const ManifoldParams mp = torlens::make_manifold_params(a, l);
    REQUIRE(torlens::sper_of_m(mp) == sper3);
    REQUIRE(torlens::sgeo_of_m(mp) == sgeo3);
  }
}

TEST_CASE("splitting obstruction codomain") {
  const FgAbGroup c3 =
      torlens::sigma_geo_codomain(torlens::make_manifold_params(golden(), 3));
  REQUIRE(c3.free_rank == 0);
  REQUIRE(c3.invariant_factors == std::vector<Int>{2});
  REQUIRE(torlens::render_group(c3) == "Z/2");

  const FgAbGroup c5 = torlens::sigma_geo_codomain(
      torlens::make_manifold_params(companion(5), 3));
  REQUIRE(c5.free_rank == 1);
  REQUIRE(c5.invariant_factors == std::vector<Int>({2, 2}));
}

TEST_CASE("splitting census, running example") {
  const auto rows =
      torlens::splitting_census(torlens::make_manifold_params(golden(), 3));
  REQUIRE(rows.size() == 3);
  REQUIRE(rows[0].subset == std::vector<long long>{1});
  REQUIRE(rows[1].subset == std::vector<long long>{2});
  REQUIRE(rows[2].subset == std::vector<long long>({1, 2}));
  REQUIRE(rows[0].vacuous);
  REQUIRE(rows[1].vacuous);
  REQUIRE(!rows[2].vacuous);
  REQUIRE(rows[2].obstruction_group == torlens::make_cyclic_group(2));
}

TEST_CASE("splitting census, rank-4 action") {
  const auto rows = torlens::splitting_census(
      torlens::make_manifold_params(companion(5), 3));
  REQUIRE(rows.size() == 15);
  // size-then-lex: singletons, then the six pairs, then triples, then all
  REQUIRE(rows[4].subset == std::vector<long long>({1, 2}));
  REQUIRE(rows[5].subset == std::vector<long long>({1, 3}));
  REQUIRE(rows[9].subset == std::vector<long long>({3, 4}));
  REQUIRE(rows[14].subset == std::vector<long long>({1, 2, 3, 4}));
  REQUIRE(rows[14].obstruction_group == torlens::make_free_group(1));
  long long nontrivial = 0;
  for (const auto& row : rows) {
    REQUIRE(row.vacuous == (row.subset.size() % 2 == 1));
    if (!row.vacuous) ++nontrivial;
  }
  REQUIRE(nontrivial == 7);
}

TEST_CASE("rho-invariant targets, running example") {
  const auto rows =
      torlens::rho_targets(torlens::make_manifold_params(golden(), 3));
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    REQUIRE(rows[i].class_rep.label == static_cast<long long>(i));
    REQUIRE(rows[i].target ==
            torlens::make_localized_module(3, 1));
    REQUIRE(torlens::render_module(rows[i].target) == "Z[1/3]");
  }
}

TEST_CASE("rho-invariant targets, rank-4 actions") {
  const auto rows5 =
      torlens::rho_targets(torlens::make_manifold_params(companion(5), 3));
  REQUIRE(rows5.size() == 5);
  REQUIRE(torlens::render_module(rows5[0].target) == "Z[1/5]^2");

  const auto rows9 =
      torlens::rho_targets(torlens::make_manifold_params(p3k2(), 3));
  REQUIRE(rows9.size() == 9);
  REQUIRE(torlens::render_module(rows9[0].target) == "Z[1/3]");
}

TEST_CASE("detection report, running example") {
  const auto rep =
      torlens::detection_report(torlens::make_manifold_params(golden(), 3));
  REQUIRE(rep.splitting_entries.size() == 3);
  REQUIRE(rep.rho_entries.size() == 3);
  REQUIRE(rep.nontrivial_splitting_count == 1);
  REQUIRE(rep.structure_set ==
          torlens::sgeo_of_m(torlens::make_manifold_params(golden(), 3)));
  REQUIRE(rep.audited_free_rank_direct == 3);
  REQUIRE(rep.audited_free_rank_summed == 3);
}

TEST_CASE("detection report free-rank audits") {
  const auto rep5 = torlens::detection_report(
      torlens::make_manifold_params(companion(5), 3));
  REQUIRE(rep5.audited_free_rank_direct == 11);
  REQUIRE(rep5.nontrivial_splitting_count == 7);

  const auto rep9 =
      torlens::detection_report(torlens::make_manifold_params(p3k2(), 3));
  REQUIRE(rep9.audited_free_rank_direct == 10);
  REQUIRE(rep9.rho_entries.size() == 9);
}

TEST_CASE("periodic structure set of the classifying space") {
  const ActionData a = golden();
  for (long long m = -4; m < 8; ++m) {
    const auto mod = torlens::sper_of_bgamma(a, m);
    REQUIRE(mod.inverted == 3);
    REQUIRE(mod.torsion.empty());
    if (torlens::mod4(m) % 2 == 1) {
      REQUIRE(mod.free_rank == 3);
    } else {
      REQUIRE(mod.free_rank == 0);
    }
    // consecutive degrees split the peripheral rank between them
    REQUIRE(mod.free_rank + torlens::sper_of_bgamma(a, m + 1).free_rank ==
            torlens::peripheral_free_rank(a));
  }
  REQUIRE(torlens::sper_of_bgamma(companion(5), 1).free_rank == 10);
  REQUIRE(torlens::sper_of_bgamma(companion(5), 1).inverted == 5);
  REQUIRE(torlens::sper_of_bgamma(p3k2(), 3).free_rank == 9);
}
