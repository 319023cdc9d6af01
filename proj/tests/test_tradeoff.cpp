#include <doctest.h>

#include <optional>
#include <stdexcept>
#include <vector>

#include "scc/tradeoff.hpp"

using scc::CornerPoint;
using scc::Rational;

namespace {

// Independent envelope oracle: the lower convex envelope of a finite point
// set at abscissa c is the minimum over all two-point convex combinations
// that hit c.
std::optional<Rational> envelope_by_pairs(const std::vector<CornerPoint>& points,
                                          const Rational& c) {
  std::optional<Rational> best;
  for (const auto& a : points) {
    for (const auto& b : points) {
      if (a.computation == b.computation) {
        if (a.computation == c) {
          const Rational v = a.communication < b.communication ? a.communication : b.communication;
          if (!best || v < *best) best = v;
        }
        continue;
      }
      if (c < a.computation || c > b.computation) continue;
      const Rational alpha = (b.computation - c) / (b.computation - a.computation);
      if (alpha < Rational(0) || alpha > Rational(1)) continue;
      const Rational v = alpha * a.communication + (Rational(1) - alpha) * b.communication;
      if (!best || v < *best) best = v;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("effective multiplicity") {
  CHECK(scc::effective_multiplicity(Rational(2), 10) == Rational(2));
  CHECK(scc::effective_multiplicity(Rational(5, 2), 10) == Rational(37, 15));
  CHECK(scc::effective_multiplicity(Rational(1), 4) == Rational(1));
  CHECK_THROWS_AS(scc::effective_multiplicity(Rational(1, 2), 10), std::domain_error);
  CHECK_THROWS_AS(scc::effective_multiplicity(Rational(10), 10), std::domain_error);
}

TEST_CASE("saturation computation load") {
  CHECK(scc::saturation_computation(Rational(2), 10) == Rational(9, 5));
  CHECK(scc::saturation_computation(Rational(5), 10) == Rational(3));
  CHECK(scc::saturation_computation(Rational(1), 10) == Rational(1));
  CHECK(scc::saturation_computation(Rational(5, 2), 10) == Rational(21, 10));
}

TEST_CASE("minimum communication load") {
  CHECK(scc::min_communication_load(Rational(2), 10) == Rational(2, 5));
  CHECK(scc::min_communication_load(Rational(5), 10) == Rational(1, 10));
  for (int num_nodes : {3, 4, 7, 10}) {
    CHECK(scc::min_communication_load(Rational(1), num_nodes) ==
          Rational(1) - Rational(1, num_nodes));
  }
  // Fractional storage: both the closed form and the mixture of the
  // neighboring integer-storage loads give 19/60 at r = 5/2, K = 10.
  CHECK(scc::min_communication_load(Rational(5, 2), 10) == Rational(19, 60));
  CHECK((scc::min_communication_load(Rational(2), 10) +
         scc::min_communication_load(Rational(3), 10)) /
            Rational(2) ==
        Rational(19, 60));
}

TEST_CASE("corner points at integer storage") {
  auto corners = scc::corner_points(Rational(2), 10);
  REQUIRE(corners.size() == 2);
  CHECK(corners[0].multiplicity == 1);
  CHECK(corners[0].computation == Rational(1));
  CHECK(corners[0].communication == Rational(4, 5));
  CHECK_FALSE(corners[0].terminal);
  CHECK(corners[1].multiplicity == 2);
  CHECK(corners[1].computation == Rational(9, 5));
  CHECK(corners[1].communication == Rational(2, 5));
  CHECK(corners[1].terminal);  // terminal merged into the last corner

  auto single = scc::corner_points(Rational(1), 10);
  REQUIRE(single.size() == 1);
  CHECK(single[0].computation == Rational(1));
  CHECK(single[0].communication == Rational(9, 10));
  CHECK(single[0].terminal);
}

TEST_CASE("corner points at fractional storage get a distinct terminal") {
  auto corners = scc::corner_points(Rational(5, 2), 10);
  REQUIRE(corners.size() == 3);
  CHECK(corners[0].multiplicity == 1);
  CHECK(corners[1].multiplicity == 2);
  CHECK(corners[1].computation == Rational(7, 4));
  CHECK(corners[1].communication == Rational(3, 8));
  CHECK(corners[2].terminal);
  CHECK(corners[2].computation == Rational(21, 10));
  CHECK(corners[2].communication == Rational(19, 60));
}

TEST_CASE("corner identity holds for every integer corner") {
  for (int num_nodes : {3, 4, 6, 10}) {
    for (int r = 1; r < num_nodes; ++r) {
      const Rational storage(r);
      const Rational fraction = storage / Rational(num_nodes);
      for (const auto& corner : scc::corner_points(storage, num_nodes)) {
        const Rational lhs = (Rational(1) - fraction) * (Rational(1) - fraction) /
                             (corner.computation - fraction);
        const Rational rhs =
            Rational(num_nodes - r, static_cast<long long>(corner.multiplicity) * num_nodes);
        CHECK(lhs == rhs);
        CHECK(corner.communication == rhs);
      }
    }
  }
}

TEST_CASE("optimal load reproduces the frozen corner and segment values") {
  CHECK(scc::optimal_load(Rational(2), Rational(9, 5), 10) == Rational(2, 5));
  CHECK(scc::optimal_load(Rational(2), Rational(1), 10) == Rational(4, 5));
  // Midpoint of the segment between (1, 4/5) and (9/5, 2/5).
  CHECK(scc::optimal_load(Rational(2), Rational(7, 5), 10) == Rational(3, 5));
  // Flat region: saturation at c*(5) = 3.
  CHECK(scc::optimal_load(Rational(5), Rational(4), 10) == Rational(1, 10));
  CHECK(scc::optimal_load(Rational(5), Rational(3), 10) == Rational(1, 10));
  CHECK(scc::optimal_load(Rational(5), Rational(5), 10) == Rational(1, 10));

  CHECK_THROWS_AS(scc::optimal_load(Rational(2), Rational(1, 2), 10), std::domain_error);
  CHECK_THROWS_AS(scc::optimal_load(Rational(2), Rational(5, 2), 10), std::domain_error);
  CHECK_THROWS_AS(scc::optimal_load(Rational(12), Rational(1), 10), std::domain_error);
}

TEST_CASE("optimal load agrees with the pairwise envelope oracle") {
  for (int num_nodes : {4, 10}) {
    for (long long rnum = 10; rnum < 10 * num_nodes; rnum += 5) {
      const Rational storage(rnum, 10);
      const auto corners = scc::corner_points(storage, num_nodes);
      const Rational saturation = scc::saturation_computation(storage, num_nodes);
      for (Rational c(1); c <= saturation; c += Rational(1, 20)) {
        auto oracle = envelope_by_pairs(corners, c);
        REQUIRE(oracle.has_value());
        CHECK(scc::optimal_load(storage, c, num_nodes) == *oracle);
      }
    }
  }
}

TEST_CASE("monotone in computation and storage on a rational grid") {
  const int num_nodes = 10;
  const Rational step(1, 10);
  for (Rational r(1); r < Rational(num_nodes); r += Rational(1, 2)) {
    std::optional<Rational> prev;
    for (Rational c(1); c <= r; c += step) {
      const Rational load = scc::optimal_load(r, c, num_nodes);
      if (prev) CHECK(load <= *prev);
      prev = load;
    }
  }
  for (Rational c(1); c < Rational(num_nodes); c += Rational(1, 2)) {
    std::optional<Rational> prev;
    for (Rational r = c < Rational(1) ? Rational(1) : c; r < Rational(num_nodes); r += step) {
      const Rational load = scc::optimal_load(r, c, num_nodes);
      if (prev) CHECK(load <= *prev);
      prev = load;
    }
  }
}

TEST_CASE("convex in computation: nonnegative second differences") {
  const int num_nodes = 10;
  const Rational step(1, 10);
  for (Rational r(1); r < Rational(num_nodes); r += Rational(1, 2)) {
    std::vector<Rational> loads;
    for (Rational c(1); c <= r; c += step) loads.push_back(scc::optimal_load(r, c, num_nodes));
    for (std::size_t i = 2; i < loads.size(); ++i) {
      CHECK(loads[i] - loads[i - 1] >= loads[i - 1] - loads[i - 2]);
    }
  }
}

TEST_CASE("envelope meets the flat region continuously") {
  for (int num_nodes : {4, 10}) {
    for (long long rnum = 10; rnum < 10 * num_nodes; ++rnum) {
      const Rational storage(rnum, 10);
      const Rational saturation = scc::saturation_computation(storage, num_nodes);
      CHECK(scc::optimal_load(storage, saturation, num_nodes) ==
            scc::min_communication_load(storage, num_nodes));
    }
  }
}

TEST_CASE("boundary curves") {
  const int num_nodes = 10;
  const auto ocp = scc::ocp_curve(num_nodes, Rational(1, 10));
  REQUIRE(ocp.size() == 90);
  for (const auto& p : ocp) {
    CHECK(p.computation == Rational(1));
    CHECK(p.communication == Rational(1) - p.storage / Rational(num_nodes));
    CHECK(scc::optimal_load(p.storage, Rational(1), num_nodes) == p.communication);
  }
  CHECK(ocp.front().communication == Rational(9, 10));  // minimal storage endpoint
  CHECK(ocp[10].storage == Rational(2));
  CHECK(ocp[10].communication == Rational(4, 5));

  const auto ocm = scc::ocm_curve(num_nodes, Rational(1, 10));
  for (const auto& p : ocm) {
    CHECK(p.computation == scc::saturation_computation(p.storage, num_nodes));
    CHECK(p.communication == scc::min_communication_load(p.storage, num_nodes));
    CHECK(scc::optimal_load(p.storage, p.computation, num_nodes) == p.communication);
  }
  CHECK(ocm[40].storage == Rational(5));
  CHECK(ocm[40].computation == Rational(3));
  CHECK(ocm[40].communication == Rational(1, 10));
}
