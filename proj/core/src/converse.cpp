#include "scc/converse.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>

#include "scc/tradeoff.hpp"

namespace scc {

long long AssignmentCensus::own_total() const {
  return std::accumulate(own.begin(), own.end(), 0LL);
}

long long AssignmentCensus::exclusive_total() const {
  return std::accumulate(exclusive.begin(), exclusive.end(), 0LL);
}

long long AssignmentCensus::exclusive_weighted() const {
  long long total = 0;
  for (std::size_t j = 1; j <= exclusive.size(); ++j) total += static_cast<long long>(j) * exclusive[j - 1];
  return total;
}

AssignmentCensus census_from_masks(std::span<const std::uint32_t> masks, int num_nodes,
                                   int num_files, std::vector<int> subset) {
  if (subset.empty()) throw std::invalid_argument("census: empty subset");
  std::sort(subset.begin(), subset.end());
  for (int k : subset) {
    if (k < 0 || k >= num_nodes) throw std::invalid_argument("census: subset node out of range");
  }
  std::uint32_t subset_mask = 0;
  for (int k : subset) subset_mask |= 1u << k;

  AssignmentCensus out;
  out.num_nodes = num_nodes;
  out.num_files = num_files;
  out.subset = subset;
  out.own.assign(subset.size(), 0);
  out.exclusive_fine.assign(subset.size(), std::vector<long long>(subset.size() - 1, 0));
  out.exclusive.assign(subset.size() - 1, 0);

  for (std::size_t i = 0; i < subset.size(); ++i) {
    const int k = subset[i];
    for (int n = 0; n < num_files; ++n) {
      const std::uint32_t m = masks[std::size_t(k) * num_files + n];
      if (m == 0) {
        throw std::invalid_argument("census: assignment infeasible, a value is computed nowhere");
      }
      if ((m >> k) & 1) {
        ++out.own[i];
      } else if ((m & ~subset_mask) == 0) {
        const int j = std::popcount(m);
        ++out.exclusive_fine[i][j - 1];
        ++out.exclusive[j - 1];
      }
    }
  }
  return out;
}

AssignmentCensus census(const Placement& placement, const ComputationAssignment& assignment,
                        std::vector<int> subset) {
  placement.validate();
  assignment.validate(placement);
  const auto masks = computed_by_masks(assignment);
  return census_from_masks(masks, assignment.num_nodes, assignment.num_files, std::move(subset));
}

AssignmentCensus census_full(const Placement& placement,
                             const ComputationAssignment& assignment) {
  std::vector<int> all(assignment.num_nodes);
  std::iota(all.begin(), all.end(), 0);
  return census(placement, assignment, std::move(all));
}

CountingCheck lemma3_check(const AssignmentCensus& full_census, const Rational& storage_budget,
                           const Rational& computation_budget) {
  if (full_census.subset.size() != std::size_t(full_census.num_nodes)) {
    throw std::invalid_argument("lemma3: census must cover all nodes");
  }
  const Rational n_files(full_census.num_files);
  const Rational n_nodes(full_census.num_nodes);
  long long weighted_minus_one = 0;
  for (std::size_t j = 1; j <= full_census.exclusive.size(); ++j) {
    weighted_minus_one += static_cast<long long>(j - 1) * full_census.exclusive[j - 1];
  }
  CountingCheck check;
  check.coverage_slack =
      Rational(full_census.exclusive_total()) - n_files * (n_nodes - storage_budget);
  check.computation_slack =
      (computation_budget - Rational(1)) * n_files * n_nodes - Rational(weighted_minus_one);
  check.pass = check.coverage_slack >= Rational(0) && check.computation_slack >= Rational(0);
  return check;
}

Rational counting_bound(const AssignmentCensus& full_census) {
  if (full_census.subset.size() != std::size_t(full_census.num_nodes)) {
    throw std::invalid_argument("counting bound: census must cover all nodes");
  }
  const long long nk =
      static_cast<long long>(full_census.num_files) * full_census.num_nodes;
  Rational bound;
  for (std::size_t j = 1; j <= full_census.exclusive.size(); ++j) {
    bound += Rational(full_census.exclusive[j - 1], nk * static_cast<long long>(j));
  }
  return bound;
}

Rational BoundLine::value_at(const Rational& computation) const {
  return slope * computation + intercept;
}

BoundLine bound_line(const Rational& storage, const Rational& computation, int num_nodes) {
  if (computation < Rational(1) ||
      computation > saturation_computation(storage, num_nodes)) {
    throw std::domain_error("bound line: computation load outside [1, c*(r)]");
  }
  const Rational fraction = storage / Rational(num_nodes);
  const Rational remainder = Rational(1) - fraction;
  const Rational g = (computation - fraction) / remainder;

  BoundLine line;
  line.floor_multiplicity = g.floor();
  line.ceil_multiplicity = line.floor_multiplicity + 1;
  line.lower_computation = fraction + remainder * Rational(line.floor_multiplicity);
  line.upper_computation = fraction + remainder * Rational(line.ceil_multiplicity);
  const Rational load_lower = remainder * remainder / (line.lower_computation - fraction);
  const Rational load_upper = remainder * remainder / (line.upper_computation - fraction);
  line.slope = (load_upper - load_lower) / (line.upper_computation - line.lower_computation);
  line.intercept = load_lower - line.slope * line.lower_computation;
  return line;
}

namespace {

// Shared state of one exhaustive sweep. Placements run over multisets of
// per-node file masks (canonical: non-decreasing), assignments over
// per-value computed-by masks drawn from the storers of each file.
class Sweep {
 public:
  Sweep(int num_nodes, int num_files, std::optional<Rational> storage_budget,
        std::optional<Rational> computation_budget, long long max_assignments)
      : k_(num_nodes),
        n_(num_files),
        max_assignments_(max_assignments),
        bound_scale_(1) {
    if (num_nodes < 2 || num_nodes > 16) {
      throw std::invalid_argument("sweep: node count must be in [2, 16]");
    }
    if (num_files < 1 || num_files > 20) {
      throw std::invalid_argument("sweep: file count must be in [1, 20]");
    }
    storage_cap_ = static_cast<long long>(k_) * n_;
    if (storage_budget) {
      storage_cap_ = std::min(storage_cap_, (*storage_budget * Rational(n_)).floor());
    }
    compute_cap_ = static_cast<long long>(k_) * n_ * k_;
    if (computation_budget) {
      compute_cap_ = std::min(
          compute_cap_, (*computation_budget * Rational(static_cast<long long>(n_) * k_)).floor());
    }
    for (int j = 1; j <= k_ - 1; ++j) bound_scale_ = std::lcm(bound_scale_, (long long)j);
    node_masks_.assign(k_, 0);
    chosen_.assign(std::size_t(k_) * n_, 0);
    b_.assign(k_, 0);  // index j, 1..k-1 used
    result_.min_bound = Rational(0);
  }

  SweepResult run() {
    place_node(0, 0, 0);
    if (have_min_) {
      result_.min_bound = Rational(min_score_, bound_scale_ * n_ * k_);
      materialize_argmin();
    }
    return result_;
  }

 private:
  void place_node(int node, std::uint32_t min_mask, long long stored_so_far) {
    if (node == k_) {
      examine_placement(stored_so_far);
      return;
    }
    for (std::uint32_t mask = min_mask; mask < (1u << n_); ++mask) {
      const long long stored = stored_so_far + std::popcount(mask);
      if (stored > storage_cap_) continue;
      node_masks_[node] = mask;
      place_node(node + 1, mask, stored);
    }
  }

  void examine_placement(long long total_stored) {
    ++result_.placements_examined;
    storers_.assign(n_, 0);
    for (int k = 0; k < k_; ++k) {
      for (int n = 0; n < n_; ++n) {
        if ((node_masks_[k] >> n) & 1) storers_[n] |= 1u << k;
      }
    }
    for (int n = 0; n < n_; ++n) {
      if (storers_[n] == 0) return;  // some file unstored: no feasible assignment
    }
    // Each value needs one computer, so the computation budget must leave
    // room for at least one unit per value.
    if (compute_cap_ < static_cast<long long>(n_) * k_) return;
    ++result_.placements_feasible;
    total_stored_ = total_stored;
    own_total_ = 0;
    std::fill(b_.begin(), b_.end(), 0);
    assign_value(0, 0);
  }

  void assign_value(int index, long long computed_so_far) {
    const long long total_values = static_cast<long long>(n_) * k_;
    if (index == total_values) {
      finish_assignment(computed_so_far);
      return;
    }
    const int target = index / n_;
    const int file = index % n_;
    const long long remaining = total_values - index;
    const std::uint32_t storer_mask = storers_[file];
    for (std::uint32_t m = storer_mask; m != 0; m = (m - 1) & storer_mask) {
      const long long computed = computed_so_far + std::popcount(m);
      if (computed + (remaining - 1) > compute_cap_) continue;
      chosen_[std::size_t(target) * n_ + file] = m;
      const bool is_own = (m >> target) & 1;
      const int j = std::popcount(m);
      if (is_own) {
        ++own_total_;
      } else {
        ++b_[j];
      }
      assign_value(index + 1, computed);
      if (is_own) {
        --own_total_;
      } else {
        --b_[j];
      }
    }
  }

  void finish_assignment(long long total_computed) {
    if (++result_.assignments_examined > max_assignments_) {
      throw std::runtime_error("sweep: search-space size cap exceeded");
    }
    long long exclusive_total = 0;
    long long weighted = 0;
    long long weighted_minus_one = 0;
    long long score = 0;
    for (int j = 1; j <= k_ - 1; ++j) {
      exclusive_total += b_[j];
      weighted += j * b_[j];
      weighted_minus_one += (j - 1) * b_[j];
      score += b_[j] * (bound_scale_ / j);
    }
    // Partition identity over all values.
    if (own_total_ + exclusive_total != static_cast<long long>(n_) * k_) {
      ++result_.partition_violations;
    }
    // Storage side: values computed at their own node need the file there.
    if (own_total_ > total_stored_) ++result_.storage_identity_violations;
    // Computation side: own values plus j-fold exclusive values are all paid for.
    if (own_total_ + weighted > total_computed) ++result_.compute_identity_violations;
    // Counting inequalities at the measured (tight) budgets.
    const long long nk = static_cast<long long>(n_) * k_;
    if (!(exclusive_total >= nk - total_stored_)) ++result_.lemma3_violations;
    if (!(weighted_minus_one <= total_computed - nk)) ++result_.lemma3_violations;

    if (!have_min_ || score < min_score_) {
      have_min_ = true;
      min_score_ = score;
      argmin_masks_ = node_masks_;
      argmin_chosen_ = chosen_;
    }
  }

  void materialize_argmin() {
    Placement p;
    p.num_nodes = k_;
    p.num_files = n_;
    p.stored.resize(k_);
    for (int k = 0; k < k_; ++k) {
      for (int n = 0; n < n_; ++n) {
        if ((argmin_masks_[k] >> n) & 1) p.stored[k].push_back(n);
      }
    }
    ComputationAssignment a;
    a.num_nodes = k_;
    a.num_files = n_;
    a.targets.resize(k_);
    for (int target = 0; target < k_; ++target) {
      for (int n = 0; n < n_; ++n) {
        const std::uint32_t m = argmin_chosen_[std::size_t(target) * n_ + n];
        for (int k = 0; k < k_; ++k) {
          if ((m >> k) & 1) a.targets[k][n] |= 1u << target;
        }
      }
    }
    result_.argmin_placement = std::move(p);
    result_.argmin_assignment = std::move(a);
  }

  const int k_;
  const int n_;
  const long long max_assignments_;
  long long storage_cap_ = 0;
  long long compute_cap_ = 0;
  long long bound_scale_;

  std::vector<std::uint32_t> node_masks_;
  std::vector<std::uint32_t> storers_;
  std::vector<std::uint32_t> chosen_;
  long long total_stored_ = 0;
  long long own_total_ = 0;
  std::vector<long long> b_;

  bool have_min_ = false;
  long long min_score_ = 0;
  std::vector<std::uint32_t> argmin_masks_;
  std::vector<std::uint32_t> argmin_chosen_;
  SweepResult result_;
};

}  // namespace

SweepResult exhaustive_census_sweep(int num_nodes, int num_files,
                                    std::optional<Rational> storage_budget,
                                    std::optional<Rational> computation_budget,
                                    long long max_assignments) {
  Sweep sweep(num_nodes, num_files, std::move(storage_budget), std::move(computation_budget),
              max_assignments);
  return sweep.run();
}

VerificationResult exhaustive_verify(int num_nodes, int num_files, const Rational& storage_budget,
                                     const Rational& computation_budget,
                                     long long max_assignments) {
  VerificationResult result;
  result.storage_budget = storage_budget;
  result.computation_budget = computation_budget;
  result.sweep = exhaustive_census_sweep(num_nodes, num_files, storage_budget, computation_budget,
                                         max_assignments);
  const bool clean = result.sweep.lemma3_violations == 0 &&
                     result.sweep.partition_violations == 0 &&
                     result.sweep.storage_identity_violations == 0 &&
                     result.sweep.compute_identity_violations == 0;
  if (storage_budget >= Rational(1) && storage_budget < Rational(num_nodes) &&
      computation_budget >= Rational(1) &&
      computation_budget <= saturation_computation(storage_budget, num_nodes)) {
    result.analytic =
        bound_line(storage_budget, computation_budget, num_nodes).value_at(computation_budget);
  }
  result.pass = clean && result.sweep.assignments_examined > 0 &&
                (!result.analytic || result.sweep.min_bound >= *result.analytic);
  return result;
}

RandomSweepResult random_census_sweep(int num_nodes, int num_files, long long samples,
                                      std::uint64_t seed) {
  if (num_nodes < 2 || num_nodes > 30) {
    throw std::invalid_argument("random sweep: node count must be in [2, 30]");
  }
  std::mt19937_64 rng(seed);
  RandomSweepResult result;
  bool have_min = false;

  std::vector<std::uint32_t> storers(num_files);
  std::vector<std::uint32_t> masks(std::size_t(num_nodes) * num_files);
  std::vector<int> all(num_nodes);
  std::iota(all.begin(), all.end(), 0);

  for (long long s = 0; s < samples; ++s) {
    // Placement: independent coin per (node, file), redrawn until every
    // file is stored somewhere.
    long long total_stored = 0;
    while (true) {
      total_stored = 0;
      std::fill(storers.begin(), storers.end(), 0);
      for (int k = 0; k < num_nodes; ++k) {
        for (int n = 0; n < num_files; ++n) {
          if (rng() & 1) {
            storers[n] |= 1u << k;
            ++total_stored;
          }
        }
      }
      if (std::all_of(storers.begin(), storers.end(),
                      [](std::uint32_t m) { return m != 0; })) {
        break;
      }
    }
    // Assignment: uniform nonempty subset of the storers per value.
    long long total_computed = 0;
    for (int q = 0; q < num_nodes; ++q) {
      for (int n = 0; n < num_files; ++n) {
        const int s_count = std::popcount(storers[n]);
        std::uint64_t pick =
            1 + rng() % ((std::uint64_t(1) << s_count) - 1);  // nonempty submask index
        std::uint32_t m = 0;
        int bit = 0;
        for (int k = 0; k < num_nodes; ++k) {
          if ((storers[n] >> k) & 1) {
            if ((pick >> bit) & 1) m |= 1u << k;
            ++bit;
          }
        }
        masks[std::size_t(q) * num_files + n] = m;
        total_computed += std::popcount(m);
      }
    }

    auto c = census_from_masks(masks, num_nodes, num_files, all);
    if (c.own_total() + c.exclusive_total() !=
        static_cast<long long>(num_files) * num_nodes) {
      ++result.partition_violations;
    }
    const Rational storage_measured(total_stored, num_files);
    const Rational computation_measured(total_computed,
                                        static_cast<long long>(num_files) * num_nodes);
    if (!lemma3_check(c, storage_measured, computation_measured).pass) {
      ++result.lemma3_violations;
    }
    const Rational bound = counting_bound(c);
    if (!have_min || bound < result.min_bound) {
      have_min = true;
      result.min_bound = bound;
    }
    ++result.samples;
  }
  return result;
}

}  // namespace scc
