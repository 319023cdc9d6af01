#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "scc/converse.hpp"
#include "scc/d3c.hpp"
#include "scc/tradeoff.hpp"

using scc::ComputationAssignment;
using scc::Placement;
using scc::Rational;

namespace {

Placement single_copy() {
  Placement p;
  p.num_nodes = 3;
  p.num_files = 3;
  p.stored = {{0}, {1}, {2}};
  return p;
}

ComputationAssignment single_copy_assignment() {
  ComputationAssignment a;
  a.num_nodes = 3;
  a.num_files = 3;
  a.targets.resize(3);
  for (int k = 0; k < 3; ++k) a.targets[k][k] = 0b111;
  return a;
}

}  // namespace

TEST_CASE("census of the single-copy system") {
  auto c = scc::census_full(single_copy(), single_copy_assignment());
  CHECK(c.own == std::vector<long long>{1, 1, 1});
  CHECK(c.exclusive == std::vector<long long>{6, 0});
  CHECK(c.own_total() + c.exclusive_total() == 9);
}

TEST_CASE("census of full replication with everything computed") {
  Placement p;
  p.num_nodes = 3;
  p.num_files = 2;
  p.stored = {{0, 1}, {0, 1}, {0, 1}};
  ComputationAssignment a;
  a.num_nodes = 3;
  a.num_files = 2;
  a.targets.resize(3);
  for (int k = 0; k < 3; ++k) {
    for (int n = 0; n < 2; ++n) a.targets[k][n] = 0b111;
  }
  auto c = scc::census_full(p, a);
  CHECK(c.exclusive == std::vector<long long>{0, 0});
  CHECK(c.own_total() == 6);
}

TEST_CASE("census over a strict subset") {
  // S = {0, 1}: node 0 wants v(0,1), computed only by node 1 inside S;
  // v(0,2) is computed by node 2 outside S and falls in no class.
  auto c = scc::census(single_copy(), single_copy_assignment(), {0, 1});
  CHECK(c.own == std::vector<long long>{1, 1});
  CHECK(c.exclusive_fine[0] == std::vector<long long>{1});
  CHECK(c.exclusive_fine[1] == std::vector<long long>{1});
  CHECK(c.exclusive == std::vector<long long>{2});
}

TEST_CASE("infeasible assignments are not censused") {
  auto a = single_copy_assignment();
  a.targets[1][1] = 0b010;  // (target 0, file 1) computed nowhere
  CHECK_THROWS_AS(scc::census_full(single_copy(), a), std::invalid_argument);
}

TEST_CASE("census of the constructed scheme") {
  auto instance = scc::build_scheme({4, 2, 1, 1});
  auto c = scc::census_full(instance.placement, instance.assignment);
  // Every cross value is computed by exactly g = 1 node.
  CHECK(c.exclusive == std::vector<long long>{24, 0, 0});
  CHECK(c.own_total() + c.exclusive_total() == 48);
}

TEST_CASE("counting inequalities are tight for the canonical examples") {
  auto sc = scc::census_full(single_copy(), single_copy_assignment());
  auto check = scc::lemma3_check(sc, Rational(1), Rational(1));
  CHECK(check.pass);
  CHECK(check.coverage_slack == Rational(0));
  CHECK(check.computation_slack == Rational(0));

  auto instance = scc::build_scheme({4, 2, 1, 1});
  auto dc = scc::census_full(instance.placement, instance.assignment);
  auto check2 = scc::lemma3_check(dc, Rational(2), Rational(1));
  CHECK(check2.pass);
  CHECK(check2.coverage_slack == Rational(0));
}

TEST_CASE("counting bound values") {
  CHECK(scc::counting_bound(scc::census_full(single_copy(), single_copy_assignment())) ==
        Rational(2, 3));
  CHECK(scc::counting_bound(scc::census_full(single_copy(), single_copy_assignment())) ==
        scc::optimal_load(Rational(1), Rational(1), 3));

  auto instance = scc::build_scheme({4, 2, 1, 1});
  auto c = scc::census_full(instance.placement, instance.assignment);
  CHECK(scc::counting_bound(c) == Rational(1, 2));

  Placement p;
  p.num_nodes = 3;
  p.num_files = 1;
  p.stored = {{0}, {0}, {0}};
  ComputationAssignment a;
  a.num_nodes = 3;
  a.num_files = 1;
  a.targets.resize(3);
  for (int k = 0; k < 3; ++k) a.targets[k][0] = 0b111;
  CHECK(scc::counting_bound(scc::census_full(p, a)) == Rational(0));
}

TEST_CASE("supporting line of the converse") {
  auto line = scc::bound_line(Rational(2), Rational(7, 5), 10);
  CHECK(line.floor_multiplicity == 1);
  CHECK(line.ceil_multiplicity == 2);
  CHECK(line.lower_computation == Rational(1));
  CHECK(line.upper_computation == Rational(9, 5));
  CHECK(line.slope == Rational(-1, 2));
  CHECK(line.value_at(Rational(7, 5)) == Rational(3, 5));

  // Anchored at the corner when the multiplicity is integral.
  CHECK(scc::bound_line(Rational(2), Rational(1), 10).value_at(Rational(1)) == Rational(4, 5));

  CHECK_THROWS_AS(scc::bound_line(Rational(2), Rational(19, 10), 10), std::domain_error);
}

TEST_CASE("line identities from the two corner anchors") {
  for (int num_nodes : {3, 4, 10}) {
    for (int r = 1; r < num_nodes; ++r) {
      const Rational storage(r);
      const Rational saturation = scc::saturation_computation(storage, num_nodes);
      for (Rational c(1); c <= saturation; c += Rational(1, 7)) {
        auto line = scc::bound_line(storage, c, num_nodes);
        const Rational g1(line.floor_multiplicity);
        const Rational g2(line.ceil_multiplicity);
        CHECK(line.slope == Rational(1) / g2 - Rational(1) / g1);
        CHECK(line.intercept ==
              line.upper_computation / g1 - line.lower_computation / g2);
        CHECK(line.slope < Rational(0));
        CHECK(line.slope + line.intercept > Rational(0));
        CHECK(c >= line.lower_computation);
        CHECK(c <= line.upper_computation);
        // On the envelope segment the line is the optimal load.
        CHECK(line.value_at(c) == scc::optimal_load(storage, c, num_nodes));
      }
    }
  }
}

TEST_CASE("corner censuses meet the supporting line") {
  // The constructed scheme's counting bound equals its measured load.
  for (int num_nodes : {3, 4}) {
    for (int r = 1; r < num_nodes; ++r) {
      for (int g = 1; g <= r; ++g) {
        auto instance = scc::build_scheme({num_nodes, r, g, 1});
        auto c = scc::census_full(instance.placement, instance.assignment);
        CHECK(scc::counting_bound(c) ==
              Rational(num_nodes - r, static_cast<long long>(g) * num_nodes));
      }
    }
  }
}

TEST_CASE("exhaustive verify at the minimal-everything budgets") {
  auto result = scc::exhaustive_verify(3, 3, Rational(1), Rational(1));
  REQUIRE(result.analytic.has_value());
  CHECK(*result.analytic == Rational(2, 3));
  CHECK(result.sweep.min_bound == Rational(2, 3));
  CHECK(result.pass);
  CHECK(result.sweep.lemma3_violations == 0);
  CHECK(result.sweep.partition_violations == 0);
  CHECK(result.sweep.storage_identity_violations == 0);
  CHECK(result.sweep.compute_identity_violations == 0);
  // The argmin is a real feasible assignment within budget.
  CHECK(scc::is_feasible(result.sweep.argmin_assignment));
  CHECK(scc::storage_space(result.sweep.argmin_placement) <= Rational(1));
  CHECK(scc::counting_bound(
            scc::census_full(result.sweep.argmin_placement, result.sweep.argmin_assignment)) ==
        Rational(2, 3));
}

TEST_CASE("exhaustive verify at the g=1 corner budgets of r=2, K=3") {
  auto result = scc::exhaustive_verify(3, 3, Rational(2), Rational(4, 3));
  REQUIRE(result.analytic.has_value());
  CHECK(*result.analytic == Rational(1, 6));
  CHECK(*result.analytic == scc::optimal_load(Rational(2), Rational(4, 3), 3));
  CHECK(result.sweep.min_bound == Rational(1, 6));
  CHECK(result.pass);
  // Tightness: the scheme construction at (r=2, g=2) hits the bound.
  auto instance = scc::build_scheme({3, 2, 2, 1});
  CHECK(scc::counting_bound(scc::census_full(instance.placement, instance.assignment)) ==
        Rational(1, 6));
}

TEST_CASE("two-node system: the only budget point is (1,1)") {
  auto result = scc::exhaustive_verify(2, 2, Rational(1), Rational(1));
  REQUIRE(result.analytic.has_value());
  CHECK(*result.analytic == Rational(1, 2));
  CHECK(result.sweep.min_bound == Rational(1, 2));
  CHECK(result.pass);
}

TEST_CASE("search-space cap") {
  CHECK_THROWS_AS(scc::exhaustive_census_sweep(3, 3, std::nullopt, std::nullopt, 100),
                  std::runtime_error);
}

TEST_CASE("identity inequalities hold for random assignments") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int num_nodes = 3 + int(rng() % 2);
    const int num_files = 2 + int(rng() % 2);
    Placement p;
    p.num_nodes = num_nodes;
    p.num_files = num_files;
    p.stored.resize(num_nodes);
    std::vector<std::uint32_t> storers(num_files, 0);
    for (int n = 0; n < num_files; ++n) {
      while (storers[n] == 0) storers[n] = std::uint32_t(rng()) & ((1u << num_nodes) - 1);
      for (int k = 0; k < num_nodes; ++k) {
        if ((storers[n] >> k) & 1) p.stored[k].push_back(n);
      }
    }
    ComputationAssignment a;
    a.num_nodes = num_nodes;
    a.num_files = num_files;
    a.targets.resize(num_nodes);
    for (int q = 0; q < num_nodes; ++q) {
      for (int n = 0; n < num_files; ++n) {
        std::uint32_t m = 0;
        while (m == 0) m = std::uint32_t(rng()) & storers[n];
        for (int k = 0; k < num_nodes; ++k) {
          if ((m >> k) & 1) a.targets[k][n] |= 1u << q;
        }
      }
    }
    auto c = scc::census_full(p, a);
    // Partition of all values.
    CHECK(c.own_total() + c.exclusive_total() ==
          static_cast<long long>(num_files) * num_nodes);
    // Own values need local storage; all computed values are paid for.
    CHECK(c.own_total() <= p.total_stored());
    CHECK(c.own_total() + c.exclusive_weighted() <= a.total_computed());
    // Counting inequalities at the measured budgets.
    CHECK(scc::lemma3_check(c, scc::storage_space(p), scc::computation_load(a)).pass);
  }
}

TEST_CASE("randomized census sweep finds no violations") {
  auto result = scc::random_census_sweep(4, 2, 2000, 99);
  CHECK(result.samples == 2000);
  CHECK(result.lemma3_violations == 0);
  CHECK(result.partition_violations == 0);
  CHECK(result.min_bound >= Rational(0));
}
