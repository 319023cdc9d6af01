#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "scc/d3c.hpp"
#include "scc/rational.hpp"

namespace scc {

/// Serializes a scheme instance, including its derived shuffle plan, to
/// the documented JSON layout. Node and file indices are 1-based in the
/// serialized form. iva_bits sizes the per-signal payload lengths; pass 0
/// to leave them unspecified.
std::string scheme_to_json(const SchemeInstance& instance, int iva_bits = 0, int indent = 2);

/// Parses the JSON layout back into an instance. The embedded shuffle
/// plan is derived data and is not read back.
SchemeInstance scheme_from_json(std::string_view text);

/// One row of the surface CSV. kind is one of surface, ocp, ocm, corner,
/// measured.
struct SurfaceRow {
  int num_nodes = 0;
  Rational storage;
  Rational computation;
  Rational communication;
  std::string kind;
  bool operator==(const SurfaceRow&) const = default;
};

/// CSV with header K,r,c,L,kind; every rational reduced and written as
/// "p/q" (plain p for integers). with_float appends decimal convenience
/// columns that parsers ignore.
std::string surface_to_csv(const std::vector<SurfaceRow>& rows, bool with_float = false);
std::vector<SurfaceRow> surface_from_csv(std::string_view text);

}  // namespace scc
