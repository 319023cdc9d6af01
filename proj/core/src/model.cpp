#include "scc/model.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace scc {

void Placement::validate() const {
  if (num_nodes < 1 || num_files < 1) throw std::invalid_argument("placement: empty system");
  if (stored.size() != std::size_t(num_nodes)) {
    throw std::invalid_argument("placement: wrong node count");
  }
  for (const auto& files : stored) {
    int prev = -1;
    for (int n : files) {
      if (n < 0 || n >= num_files) throw std::invalid_argument("placement: file index out of range");
      if (n <= prev) throw std::invalid_argument("placement: file list not sorted and unique");
      prev = n;
    }
  }
}

bool Placement::stores(int node, int file) const {
  const auto& files = stored[node];
  return std::binary_search(files.begin(), files.end(), file);
}

long long Placement::total_stored() const {
  long long total = 0;
  for (const auto& files : stored) total += static_cast<long long>(files.size());
  return total;
}

void ComputationAssignment::validate(const Placement& placement) const {
  if (num_nodes != placement.num_nodes || num_files != placement.num_files) {
    throw std::invalid_argument("assignment: dimensions disagree with placement");
  }
  if (num_nodes > 32) throw std::invalid_argument("assignment: more than 32 nodes unsupported");
  if (targets.size() != std::size_t(num_nodes)) {
    throw std::invalid_argument("assignment: wrong node count");
  }
  const std::uint32_t all = num_nodes == 32 ? ~0u : (1u << num_nodes) - 1;
  for (int k = 0; k < num_nodes; ++k) {
    for (const auto& [file, mask] : targets[k]) {
      if (file < 0 || file >= num_files) {
        throw std::invalid_argument("assignment: file index out of range");
      }
      if (!placement.stores(k, file)) {
        throw std::invalid_argument("assignment: node maps a file it does not store");
      }
      if (mask & ~all) throw std::invalid_argument("assignment: target outside node range");
    }
  }
}

long long ComputationAssignment::total_computed() const {
  long long total = 0;
  for (const auto& per_node : targets) {
    for (const auto& [file, mask] : per_node) total += std::popcount(mask);
  }
  return total;
}

std::vector<std::uint32_t> computed_by_masks(const ComputationAssignment& assignment) {
  if (assignment.num_nodes > 32) {
    throw std::invalid_argument("computed_by_masks: more than 32 nodes unsupported");
  }
  std::vector<std::uint32_t> masks(
      std::size_t(assignment.num_nodes) * std::size_t(assignment.num_files), 0);
  for (int k = 0; k < assignment.num_nodes; ++k) {
    for (const auto& [file, target_mask] : assignment.targets[k]) {
      for (int q = 0; q < assignment.num_nodes; ++q) {
        if ((target_mask >> q) & 1) {
          masks[std::size_t(q) * assignment.num_files + file] |= 1u << k;
        }
      }
    }
  }
  return masks;
}

bool is_feasible(const ComputationAssignment& assignment) {
  auto masks = computed_by_masks(assignment);
  return std::all_of(masks.begin(), masks.end(), [](std::uint32_t m) { return m != 0; });
}

Rational storage_space(const Placement& placement) {
  return Rational(placement.total_stored(), placement.num_files);
}

Rational computation_load(const ComputationAssignment& assignment) {
  return Rational(assignment.total_computed(),
                  static_cast<long long>(assignment.num_files) * assignment.num_nodes);
}

Rational communication_load(long long total_bits, int num_files, int num_nodes, int iva_bits) {
  if (total_bits < 0) throw std::invalid_argument("communication load: negative bit count");
  return Rational(total_bits,
                  static_cast<long long>(num_files) * num_nodes * iva_bits);
}

Placement permute_nodes(const Placement& placement, std::span<const int> perm) {
  Placement out;
  out.num_nodes = placement.num_nodes;
  out.num_files = placement.num_files;
  out.stored.resize(placement.stored.size());
  for (int k = 0; k < placement.num_nodes; ++k) out.stored[perm[k]] = placement.stored[k];
  return out;
}

ComputationAssignment permute_nodes(const ComputationAssignment& assignment,
                                    std::span<const int> perm) {
  ComputationAssignment out;
  out.num_nodes = assignment.num_nodes;
  out.num_files = assignment.num_files;
  out.targets.resize(assignment.targets.size());
  for (int k = 0; k < assignment.num_nodes; ++k) {
    for (const auto& [file, mask] : assignment.targets[k]) {
      std::uint32_t permuted = 0;
      for (int q = 0; q < assignment.num_nodes; ++q) {
        if ((mask >> q) & 1) permuted |= 1u << perm[q];
      }
      out.targets[perm[k]][file] = permuted;
    }
  }
  return out;
}

}  // namespace scc
