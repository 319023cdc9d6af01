#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "scc/job.hpp"
#include "scc/model.hpp"
#include "scc/rational.hpp"

namespace scc {

/// Construction parameters of one scheme part: K nodes, every file stored
/// at `replication` nodes (r), cross intermediate values computed by
/// `multiplicity` of them (g), `files_per_batch` files in each batch (eta).
/// The multiplicity = replication case is the degenerate variant that only
/// computes subsequently used values.
struct SchemeParams {
  int num_nodes = 0;
  int replication = 0;
  int multiplicity = 0;
  int files_per_batch = 1;
};

/// One batch: its files, the nodes that store it (S, |S| = r) and the
/// subset of them that additionally computes the values wanted outside S
/// (T, |T| = g, T inside S).
struct Batch {
  std::vector<int> storage_nodes;
  std::vector<int> compute_nodes;
  std::vector<int> files;
};

/// One multicast group: nodes I with |I| = r + 1 and the coded subset J
/// inside I with |J| = g + 1. Every member of J sends one coded signal to
/// the rest of J.
struct MulticastGroup {
  std::vector<int> nodes;
  std::vector<int> coded;
};

/// One XOR term of a signal: segment `segment` of the block of values
/// that `target` wants from batch `batch` (index local to the part).
struct Constituent {
  int target = 0;
  int batch = 0;
  int segment = 0;
  bool operator==(const Constituent&) const = default;
};

/// A coded multicast signal. The payload is the XOR of the listed
/// segments, each (eta * T / g) bits; empty until executed against a job.
struct ShuffleSignal {
  int part = 0;
  int group = 0;
  int sender = 0;
  int payload_bits = 0;
  std::vector<Constituent> constituents;
  BitString payload;
};

/// One homogeneous sub-scheme covering a contiguous file range. A plain
/// scheme has one part; time/memory sharing concatenates several.
struct SchemePart {
  SchemeParams params;
  int file_offset = 0;
  int num_files = 0;
  std::vector<Batch> batches;
  std::vector<MulticastGroup> groups;
};

/// A complete map-shuffle-reduce scheme instance: parts plus the merged
/// placement and computation assignment over all files.
struct SchemeInstance {
  int num_nodes = 0;
  int num_files = 0;
  std::vector<SchemePart> parts;
  Placement placement;
  ComputationAssignment assignment;
};

/// Thrown when a node cannot reconstruct one of its intermediate values;
/// carries the first offending value.
class DecodeError : public std::runtime_error {
 public:
  DecodeError(IvaId missing, const std::string& what) : std::runtime_error(what), missing_(missing) {}
  IvaId missing() const { return missing_; }

 private:
  IvaId missing_;
};

long long binomial(int n, int k);

/// Builds the single-part scheme: files are partitioned into
/// C(K,r) C(r,g) batches of eta files, batch (S,T) is stored on S, every
/// node of S computes its own values from it and the nodes of T also
/// compute the values wanted outside S. Batches are enumerated in
/// lexicographic order of (S, T) so instances serialize reproducibly.
/// Requires 1 <= g <= r < K.
SchemeInstance build_scheme(const SchemeParams& params);

/// Exact number of files build_scheme(params) uses.
long long scheme_num_files(const SchemeParams& params);

/// Static shuffle plan: for every group (I, J) and every receiver k in J,
/// the block of values k wants from batch (I \ {k}, J \ {k}) is split into
/// g equal segments handed to the nodes of J \ {k} in ascending order;
/// each node of J sends the XOR of its segments. iva_bits > 0 fills in
/// payload lengths (eta * iva_bits / g per signal) and must be divisible
/// by g; pass 0 for a structure-only plan.
std::vector<ShuffleSignal> build_shuffle_plan(const SchemeInstance& instance, int iva_bits = 0);

/// The corner loads the construction is designed to hit, weighted over
/// parts for shared instances.
LoadTriple analytic_loads(const SchemeInstance& instance);

/// Map phase plus shuffle phase against a concrete job: generates the
/// corpus, computes exactly the assigned intermediate values per node, and
/// fills every signal payload. Checks that each sender actually holds the
/// segments it codes.
struct ExecutionTrace {
  std::vector<BitString> files;
  std::vector<std::map<IvaId, BitString>> computed;  // per node
  std::vector<ShuffleSignal> signals;
};
ExecutionTrace execute_map_and_shuffle(const SchemeInstance& instance, const JobSpec& job);

/// Reconstructs all N intermediate values for `node` from its local map
/// results and the received signals. Throws DecodeError when a value
/// cannot be recovered.
std::vector<BitString> decode_node(const SchemeInstance& instance, const JobSpec& job,
                                   const ExecutionTrace& trace, int node);

/// Decode + reduce for every node.
std::vector<BitString> reduce_all(const SchemeInstance& instance, const JobSpec& job,
                                  const ExecutionTrace& trace);

/// End-to-end run: execute, decode, reduce, compare against the
/// centralized oracle, and measure the loads exactly.
struct SimulationResult {
  LoadTriple measured;
  LoadTriple analytic;
  bool outputs_match = false;
  long long total_signal_bits = 0;
  long long num_signals = 0;
  std::vector<BitString> outputs;
};
SimulationResult simulate(const SchemeInstance& instance, const JobSpec& job);

/// Smallest per-part batch multipliers realizing an exact alpha :
/// (1 - alpha) file split between two corner schemes. Returns the two
/// parameter records with files_per_batch filled in; alpha must lie in
/// (0, 1).
std::pair<SchemeParams, SchemeParams> plan_sharing(int num_nodes, std::pair<int, int> first_rg,
                                                   std::pair<int, int> second_rg,
                                                   const Rational& alpha);

/// Concatenates two corner schemes over disjoint file ranges. The merged
/// instance realizes the weighted mixture of the two corner points. A
/// part with files_per_batch = 0 is dropped, so an all-or-nothing split
/// degenerates to the single remaining scheme.
SchemeInstance build_shared_scheme(int num_nodes, const SchemeParams& first,
                                   const SchemeParams& second);

}  // namespace scc
