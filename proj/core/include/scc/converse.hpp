#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "scc/model.hpp"
#include "scc/rational.hpp"

namespace scc {

/// Counting census of an assignment over a node subset S: own[i] counts
/// the values node subset[i] wants and computes itself (over all files);
/// exclusive_fine[i][j-1] counts the values subset[i] wants that it does
/// not compute, that exactly j nodes of S minus subset[i] compute, and
/// that nobody outside S computes. exclusive[j-1] sums the fine counts
/// over the subset.
struct AssignmentCensus {
  int num_nodes = 0;
  int num_files = 0;
  std::vector<int> subset;
  std::vector<long long> own;
  std::vector<std::vector<long long>> exclusive_fine;
  std::vector<long long> exclusive;

  long long own_total() const;
  long long exclusive_total() const;
  /// Sum over j of j * exclusive[j-1].
  long long exclusive_weighted() const;
};

/// Census over an explicit subset (sorted, 0-based). Throws
/// std::invalid_argument when some value is computed nowhere (the census
/// classes only partition feasible assignments).
AssignmentCensus census(const Placement& placement, const ComputationAssignment& assignment,
                        std::vector<int> subset);

/// Census over all K nodes; exclusive[] are then the global counts b_j.
AssignmentCensus census_full(const Placement& placement,
                             const ComputationAssignment& assignment);

/// Same census computed straight from computed-by bitmasks
/// (masks[target * num_files + file]); the enumeration engines feed this
/// path directly.
AssignmentCensus census_from_masks(std::span<const std::uint32_t> masks, int num_nodes,
                                   int num_files, std::vector<int> subset);

/// The two counting inequalities every feasible assignment inside the
/// budgets must satisfy: sum of exclusive counts at least N (K - r), and
/// their (j-1)-weighted sum at most (c - 1) N K. Slacks are exact; a
/// negative slack is a violation.
struct CountingCheck {
  Rational coverage_slack;
  Rational computation_slack;
  bool pass = false;
};
CountingCheck lemma3_check(const AssignmentCensus& full_census, const Rational& storage_budget,
                           const Rational& computation_budget);

/// Lower bound on the communication load implied by a full census:
/// sum over j of exclusive[j-1] / (N K j), exact.
Rational counting_bound(const AssignmentCensus& full_census);

/// The supporting line of the converse at (r, c): multiplicities
/// floor/ceil of (c - r/K)/(1 - r/K), their corner computation loads, and
/// the line through the two corner communication loads. value_at(c) equals
/// the optimal load on the envelope segment containing c.
struct BoundLine {
  long long floor_multiplicity = 0;
  long long ceil_multiplicity = 0;
  Rational lower_computation;
  Rational upper_computation;
  Rational slope;
  Rational intercept;
  Rational value_at(const Rational& computation) const;
};
BoundLine bound_line(const Rational& storage, const Rational& computation, int num_nodes);

/// Exhaustive sweep over every feasible (placement, assignment) pair,
/// optionally capped by storage/computation budgets. Placements are
/// enumerated up to node relabeling; every censused quantity is
/// permutation-invariant so minima and violation counts are unaffected.
struct SweepResult {
  long long placements_examined = 0;
  long long placements_feasible = 0;
  long long assignments_examined = 0;
  long long lemma3_violations = 0;
  long long partition_violations = 0;
  long long storage_identity_violations = 0;
  long long compute_identity_violations = 0;
  Rational min_bound;
  Placement argmin_placement;
  ComputationAssignment argmin_assignment;
};
SweepResult exhaustive_census_sweep(int num_nodes, int num_files,
                                    std::optional<Rational> storage_budget,
                                    std::optional<Rational> computation_budget,
                                    long long max_assignments = 2'000'000'000);

/// Converse verification at desk scale: sweep within the budgets and
/// compare the minimum counting bound against the analytic line. The
/// comparison only applies below the saturation computation load.
struct VerificationResult {
  Rational storage_budget;
  Rational computation_budget;
  SweepResult sweep;
  std::optional<Rational> analytic;
  bool pass = false;
};
VerificationResult exhaustive_verify(int num_nodes, int num_files, const Rational& storage_budget,
                                     const Rational& computation_budget,
                                     long long max_assignments = 2'000'000'000);

/// Randomized property sweep: samples feasible placements and assignments
/// uniformly-ish, checks the partition identity and the counting
/// inequalities against the measured (tight) budgets.
struct RandomSweepResult {
  long long samples = 0;
  long long lemma3_violations = 0;
  long long partition_violations = 0;
  Rational min_bound;
};
RandomSweepResult random_census_sweep(int num_nodes, int num_files, long long samples,
                                      std::uint64_t seed);

}  // namespace scc
