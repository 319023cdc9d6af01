#pragma once

#include <cstdint>
#include <vector>

#include "scc/bits.hpp"

namespace scc {

/// Problem dimensions plus the seed that drives every deterministic toy
/// function. Two equal JobSpec values reproduce the whole pipeline
/// (files, intermediate values, outputs) bit for bit.
struct JobSpec {
  int num_nodes = 0;    // K
  int num_files = 0;    // N
  int file_bits = 0;    // F
  int iva_bits = 0;     // T
  int output_bits = 0;  // B
  std::uint64_t seed = 0;

  void validate() const;  // throws std::invalid_argument
};

/// Deterministic input corpus: num_files strings of file_bits bits each.
std::vector<BitString> generate_files(const JobSpec& job);

/// Toy map function: the intermediate value for output `target` on file
/// `file` (both 0-based). A keyed pseudorandom function of
/// (seed, target, file, content) truncated to iva_bits, so any corruption
/// anywhere in the pipeline shows up in the reduced outputs.
BitString map_iva(const JobSpec& job, int target, int file, const BitString& content);

/// Toy reduce function: keyed digest of the ordered intermediate value
/// list, output_bits long. Sensitive to a single bit flip in any input.
BitString reduce_output(const JobSpec& job, int node, const std::vector<BitString>& ivas);

/// Centralized oracle: ivas[k][n] for all targets and files, computed
/// directly from the corpus with no distribution involved.
std::vector<std::vector<BitString>> all_ivas(const JobSpec& job,
                                             const std::vector<BitString>& files);

/// Centralized oracle outputs, one per node.
std::vector<BitString> oracle_outputs(const JobSpec& job, const std::vector<BitString>& files);

}  // namespace scc
