#include "scc/tradeoff.hpp"

#include <stdexcept>

namespace scc {

namespace {

void check_storage_domain(const Rational& storage, int num_nodes) {
  if (num_nodes < 2) throw std::domain_error("tradeoff: need at least 2 nodes");
  if (storage < Rational(1) || storage >= Rational(num_nodes)) {
    throw std::domain_error("tradeoff: storage space must lie in [1, K)");
  }
}

}  // namespace

Rational effective_multiplicity(const Rational& storage, int num_nodes) {
  check_storage_domain(storage, num_nodes);
  const long long fl = storage.floor();
  if (storage.is_integer()) return Rational(fl);
  const long long cl = storage.ceil();
  return Rational(fl) +
         (storage - Rational(fl)) * Rational(num_nodes - cl) / (Rational(num_nodes) - storage);
}

Rational saturation_computation(const Rational& storage, int num_nodes) {
  const Rational fraction = storage / Rational(num_nodes);
  return fraction + (Rational(1) - fraction) * effective_multiplicity(storage, num_nodes);
}

Rational min_communication_load(const Rational& storage, int num_nodes) {
  check_storage_domain(storage, num_nodes);
  const Rational fl(storage.floor());
  const Rational cl(storage.ceil());
  return (fl + cl - storage) / (fl * cl) - Rational(1, num_nodes);
}

std::vector<CornerPoint> corner_points(const Rational& storage, int num_nodes) {
  check_storage_domain(storage, num_nodes);
  const Rational fraction = storage / Rational(num_nodes);
  const Rational remainder = Rational(1) - fraction;
  std::vector<CornerPoint> corners;
  for (long long g = 1; g <= storage.floor(); ++g) {
    CornerPoint p;
    p.multiplicity = static_cast<int>(g);
    p.computation = fraction + remainder * Rational(g);
    p.communication = remainder * remainder / (p.computation - fraction);
    corners.push_back(p);
  }
  if (storage.is_integer()) {
    corners.back().terminal = true;
  } else {
    CornerPoint terminal;
    terminal.computation = saturation_computation(storage, num_nodes);
    terminal.communication = min_communication_load(storage, num_nodes);
    terminal.terminal = true;
    corners.push_back(terminal);
  }
  return corners;
}

Rational optimal_load(const Rational& storage, const Rational& computation, int num_nodes) {
  check_storage_domain(storage, num_nodes);
  if (computation < Rational(1) || computation > storage) {
    throw std::domain_error("tradeoff: computation load must lie in [1, r]");
  }
  const Rational saturation = saturation_computation(storage, num_nodes);
  if (computation >= saturation) return min_communication_load(storage, num_nodes);

  // Piecewise-linear interpolation through consecutive corners. The first
  // corner sits at c = 1 and the terminal at the saturation point, so any
  // admissible c below saturation is bracketed.
  const auto corners = corner_points(storage, num_nodes);
  for (std::size_t i = 0; i + 1 < corners.size(); ++i) {
    const auto& a = corners[i];
    const auto& b = corners[i + 1];
    if (computation >= a.computation && computation <= b.computation) {
      const Rational slope =
          (b.communication - a.communication) / (b.computation - a.computation);
      return a.communication + slope * (computation - a.computation);
    }
  }
  throw std::logic_error("tradeoff: envelope lookup fell through");
}

namespace {

std::vector<SurfacePoint> boundary_curve(int num_nodes, const Rational& step, bool saturated) {
  if (step <= Rational(0)) throw std::domain_error("tradeoff: grid step must be positive");
  std::vector<SurfacePoint> points;
  for (Rational r(1); r < Rational(num_nodes); r += step) {
    SurfacePoint p;
    p.storage = r;
    if (saturated) {
      p.computation = saturation_computation(r, num_nodes);
      p.communication = min_communication_load(r, num_nodes);
    } else {
      p.computation = Rational(1);
      p.communication = Rational(1) - r / Rational(num_nodes);
    }
    points.push_back(p);
  }
  return points;
}

}  // namespace

std::vector<SurfacePoint> ocp_curve(int num_nodes, const Rational& step) {
  return boundary_curve(num_nodes, step, false);
}

std::vector<SurfacePoint> ocm_curve(int num_nodes, const Rational& step) {
  return boundary_curve(num_nodes, step, true);
}

}  // namespace scc
