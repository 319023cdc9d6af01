#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "scc/rational.hpp"

namespace scc {

/// Identity of one intermediate value: the pair (target node, file).
struct IvaId {
  int target = 0;
  int file = 0;
  auto operator<=>(const IvaId&) const = default;
};

/// Which files each node stores (the per-node sets M_k). File lists are
/// kept sorted and duplicate-free.
struct Placement {
  int num_nodes = 0;
  int num_files = 0;
  std::vector<std::vector<int>> stored;

  void validate() const;  // throws std::invalid_argument
  bool stores(int node, int file) const;
  long long total_stored() const;
};

/// Which intermediate values each node computes. targets[k][n] is the set
/// of output indices, as a bitmask over nodes, that node k maps file n
/// for; it may only be present when node k stores file n. Building by
/// OR-ing masks gives the set-union semantics: an intermediate value a
/// node could obtain twice still counts once.
struct ComputationAssignment {
  int num_nodes = 0;
  int num_files = 0;
  std::vector<std::map<int, std::uint32_t>> targets;

  void validate(const Placement& placement) const;
  long long total_computed() const;  // sum over nodes of |C_k|
};

/// computed_by[target * num_files + file] = bitmask of nodes that compute
/// that intermediate value. Requires num_nodes <= 32.
std::vector<std::uint32_t> computed_by_masks(const ComputationAssignment& assignment);

/// True when every intermediate value is computed by at least one node.
bool is_feasible(const ComputationAssignment& assignment);

/// Storage space r = (sum of stored files) / N, exact.
Rational storage_space(const Placement& placement);

/// Computation load c = (sum of computed intermediate values) / (N K), exact.
Rational computation_load(const ComputationAssignment& assignment);

/// Communication load L = total shuffle bits / (N K T), exact.
Rational communication_load(long long total_bits, int num_files, int num_nodes, int iva_bits);

/// One measured or analytic (r, c, L) triple.
struct LoadTriple {
  Rational storage;
  Rational computation;
  Rational communication;
  bool operator==(const LoadTriple&) const = default;
};

/// Relabels nodes: node k becomes perm[k]. Used by the symmetry tests;
/// all three loads are invariant under this map.
Placement permute_nodes(const Placement& placement, std::span<const int> perm);
ComputationAssignment permute_nodes(const ComputationAssignment& assignment,
                                    std::span<const int> perm);

}  // namespace scc
