#pragma once

#include <vector>

#include "scc/rational.hpp"

namespace scc {

/// One vertex of the optimal communication-vs-computation curve at fixed
/// storage. Integer corners carry their multicast multiplicity g; for
/// non-integer storage the curve ends in a terminal vertex that is not an
/// integer corner (multiplicity 0, terminal true).
struct CornerPoint {
  int multiplicity = 0;
  Rational computation;
  Rational communication;
  bool terminal = false;
};

/// A point of the tradeoff surface.
struct SurfacePoint {
  Rational storage;
  Rational computation;
  Rational communication;
};

/// Largest useful multicast multiplicity for storage space r:
/// floor(r) + (r - floor(r)) (K - ceil(r)) / (K - r). Equals r when r is
/// an integer. Domain: 1 <= r < K.
Rational effective_multiplicity(const Rational& storage, int num_nodes);

/// Computation load at which communication stops improving:
/// r/K + (1 - r/K) g_r. Beyond it the surface is flat.
Rational saturation_computation(const Rational& storage, int num_nodes);

/// The least communication load reachable at storage r with unlimited
/// computation: (floor(r) + ceil(r) - r) / (floor(r) ceil(r)) - 1/K.
Rational min_communication_load(const Rational& storage, int num_nodes);

/// Corner points for storage r: one per multiplicity g = 1..floor(r),
/// with communication (1 - r/K)^2 / (c - r/K), plus the terminal point
/// (saturation_computation, min_communication_load). For integer r the
/// terminal coincides with the g = floor(r) corner and is merged into it.
std::vector<CornerPoint> corner_points(const Rational& storage, int num_nodes);

/// The optimal communication load at (r, c): the lower convex envelope of
/// the corner points for c below saturation, the flat min_communication_load
/// above it. Domain: 1 <= c <= r < K. Exact at corner abscissas.
Rational optimal_load(const Rational& storage, const Rational& computation, int num_nodes);

/// Minimal-computation boundary (c = 1): points (r, 1, 1 - r/K) on a grid
/// of the given step over [1, K).
std::vector<SurfacePoint> ocp_curve(int num_nodes, const Rational& step);

/// Minimal-communication boundary: points (r, saturation_computation(r),
/// min_communication_load(r)) on a grid of the given step over [1, K).
std::vector<SurfacePoint> ocm_curve(int num_nodes, const Rational& step);

}  // namespace scc
