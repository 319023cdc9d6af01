#include "scc/d3c.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace scc {

namespace {

std::uint32_t mask_of(const std::vector<int>& nodes) {
  std::uint32_t m = 0;
  for (int k : nodes) m |= 1u << k;
  return m;
}

// All k-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<int>> subsets_lex(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  if (k > n) return out;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

// k-subsets of an ascending element list, lexicographic on positions.
std::vector<std::vector<int>> subsets_of(const std::vector<int>& elements, int k) {
  std::vector<std::vector<int>> out;
  for (const auto& idx : subsets_lex(static_cast<int>(elements.size()), k)) {
    std::vector<int> s;
    s.reserve(k);
    for (int i : idx) s.push_back(elements[i]);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<int> without(const std::vector<int>& sorted, int element) {
  std::vector<int> out;
  out.reserve(sorted.size() - 1);
  for (int v : sorted) {
    if (v != element) out.push_back(v);
  }
  return out;
}

void validate_params(const SchemeParams& p) {
  if (p.num_nodes < 2 || p.num_nodes > 30) {
    throw std::invalid_argument("scheme: node count must be in [2, 30]");
  }
  if (p.replication < 1 || p.replication >= p.num_nodes) {
    throw std::invalid_argument("scheme: replication must satisfy 1 <= r < K");
  }
  if (p.multiplicity < 1 || p.multiplicity > p.replication) {
    throw std::invalid_argument("scheme: multiplicity must satisfy 1 <= g <= r");
  }
  if (p.files_per_batch < 1) throw std::invalid_argument("scheme: files per batch must be >= 1");
}

// Concatenation, in file order, of the values `target` wants from a batch.
BitString wanted_block(const Batch& batch, int target,
                       const std::map<IvaId, BitString>& store, IvaId* first_missing) {
  BitString block;
  for (int n : batch.files) {
    auto it = store.find(IvaId{target, n});
    if (it == store.end()) {
      if (first_missing) *first_missing = IvaId{target, n};
      return BitString{};
    }
    block.append(it->second);
  }
  return block;
}

}  // namespace

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

long long scheme_num_files(const SchemeParams& params) {
  return binomial(params.num_nodes, params.replication) *
         binomial(params.replication, params.multiplicity) * params.files_per_batch;
}

SchemeInstance build_scheme(const SchemeParams& params) {
  validate_params(params);
  const int num_nodes = params.num_nodes;
  const int eta = params.files_per_batch;
  const std::uint32_t all_nodes = (1u << num_nodes) - 1;

  SchemeInstance instance;
  instance.num_nodes = num_nodes;
  instance.num_files = static_cast<int>(scheme_num_files(params));
  instance.placement.num_nodes = num_nodes;
  instance.placement.num_files = instance.num_files;
  instance.placement.stored.resize(num_nodes);
  instance.assignment.num_nodes = num_nodes;
  instance.assignment.num_files = instance.num_files;
  instance.assignment.targets.resize(num_nodes);

  SchemePart part;
  part.params = params;
  part.file_offset = 0;
  part.num_files = instance.num_files;

  int next_file = 0;
  for (const auto& storage_nodes : subsets_lex(num_nodes, params.replication)) {
    const std::uint32_t outside = all_nodes & ~mask_of(storage_nodes);
    for (const auto& compute_nodes : subsets_of(storage_nodes, params.multiplicity)) {
      Batch batch;
      batch.storage_nodes = storage_nodes;
      batch.compute_nodes = compute_nodes;
      for (int i = 0; i < eta; ++i) batch.files.push_back(next_file++);

      for (int k : storage_nodes) {
        for (int n : batch.files) {
          instance.placement.stored[k].push_back(n);
          instance.assignment.targets[k][n] |= 1u << k;
        }
      }
      for (int t : compute_nodes) {
        for (int n : batch.files) instance.assignment.targets[t][n] |= outside;
      }
      part.batches.push_back(std::move(batch));
    }
  }

  for (const auto& group_nodes : subsets_lex(num_nodes, params.replication + 1)) {
    for (const auto& coded : subsets_of(group_nodes, params.multiplicity + 1)) {
      part.groups.push_back(MulticastGroup{group_nodes, coded});
    }
  }

  instance.parts.push_back(std::move(part));
  return instance;
}

std::vector<ShuffleSignal> build_shuffle_plan(const SchemeInstance& instance, int iva_bits) {
  std::vector<ShuffleSignal> signals;
  for (std::size_t part_index = 0; part_index < instance.parts.size(); ++part_index) {
    const SchemePart& part = instance.parts[part_index];
    const int g = part.params.multiplicity;
    const int eta = part.params.files_per_batch;
    if (iva_bits > 0 && iva_bits % g != 0) {
      throw std::invalid_argument("shuffle: iva length must be divisible by the multiplicity");
    }
    const int segment_bits = iva_bits > 0 ? eta * (iva_bits / g) : 0;

    std::map<std::pair<std::uint32_t, std::uint32_t>, int> batch_index;
    for (std::size_t b = 0; b < part.batches.size(); ++b) {
      batch_index[{mask_of(part.batches[b].storage_nodes),
                   mask_of(part.batches[b].compute_nodes)}] = static_cast<int>(b);
    }

    for (std::size_t group_index = 0; group_index < part.groups.size(); ++group_index) {
      const MulticastGroup& group = part.groups[group_index];
      std::map<int, std::vector<Constituent>> per_sender;
      for (int receiver : group.coded) {
        const auto batch_it = batch_index.find(
            {mask_of(group.nodes) & ~(1u << receiver), mask_of(group.coded) & ~(1u << receiver)});
        if (batch_it == batch_index.end()) {
          throw std::logic_error("shuffle: group does not match any batch");
        }
        const std::vector<int> others = without(group.coded, receiver);
        for (int s = 0; s < g; ++s) {
          per_sender[others[s]].push_back(Constituent{receiver, batch_it->second, s});
        }
      }
      for (int sender : group.coded) {
        ShuffleSignal signal;
        signal.part = static_cast<int>(part_index);
        signal.group = static_cast<int>(group_index);
        signal.sender = sender;
        signal.payload_bits = segment_bits;
        signal.constituents = std::move(per_sender[sender]);
        signals.push_back(std::move(signal));
      }
    }
  }
  return signals;
}

LoadTriple analytic_loads(const SchemeInstance& instance) {
  const Rational total(instance.num_files);
  LoadTriple loads;
  for (const SchemePart& part : instance.parts) {
    const Rational weight = Rational(part.num_files) / total;
    const int k = part.params.num_nodes;
    const Rational r(part.params.replication);
    const Rational g(part.params.multiplicity);
    const Rational fraction = r / Rational(k);
    loads.storage += weight * r;
    loads.computation += weight * (fraction + (Rational(1) - fraction) * g);
    loads.communication += weight * (Rational(k) - r) / (g * Rational(k));
  }
  return loads;
}

ExecutionTrace execute_map_and_shuffle(const SchemeInstance& instance, const JobSpec& job) {
  job.validate();
  if (job.num_nodes != instance.num_nodes || job.num_files != instance.num_files) {
    throw std::invalid_argument("execute: job dimensions disagree with the scheme");
  }
  ExecutionTrace trace;
  trace.files = generate_files(job);

  // Map phase. Values are independent of who computes them, so compute
  // each wanted (target, file) pair once and hand copies to the nodes.
  std::map<IvaId, BitString> cache;
  trace.computed.resize(instance.num_nodes);
  for (int k = 0; k < instance.num_nodes; ++k) {
    for (const auto& [file, target_mask] : instance.assignment.targets[k]) {
      for (int q = 0; q < instance.num_nodes; ++q) {
        if (!((target_mask >> q) & 1)) continue;
        const IvaId id{q, file};
        auto it = cache.find(id);
        if (it == cache.end()) {
          it = cache.emplace(id, map_iva(job, q, file, trace.files[file])).first;
        }
        trace.computed[k].emplace(id, it->second);
      }
    }
  }

  // Shuffle phase.
  trace.signals = build_shuffle_plan(instance, job.iva_bits);
  for (ShuffleSignal& signal : trace.signals) {
    const SchemePart& part = instance.parts[signal.part];
    BitString payload(signal.payload_bits);
    for (const Constituent& c : signal.constituents) {
      IvaId missing;
      const BitString block =
          wanted_block(part.batches[c.batch], c.target, trace.computed[signal.sender], &missing);
      if (block.empty()) {
        throw std::logic_error("shuffle: sender does not hold a segment it must code");
      }
      payload ^= block.slice(std::size_t(c.segment) * signal.payload_bits, signal.payload_bits);
    }
    signal.payload = std::move(payload);
  }
  return trace;
}

std::vector<BitString> decode_node(const SchemeInstance& instance, const JobSpec& job,
                                   const ExecutionTrace& trace, int node) {
  std::vector<std::optional<BitString>> values(instance.num_files);
  for (const auto& [id, value] : trace.computed[node]) {
    if (id.target == node) values[id.file] = value;
  }

  // Recovered segments per (part, batch) wanted by this node.
  std::map<std::pair<int, int>, std::vector<std::optional<BitString>>> segments;
  for (const ShuffleSignal& signal : trace.signals) {
    if (signal.sender == node) continue;
    const SchemePart& part = instance.parts[signal.part];
    const MulticastGroup& group = part.groups[signal.group];
    if (!std::binary_search(group.coded.begin(), group.coded.end(), node)) continue;

    const Constituent* mine = nullptr;
    for (const Constituent& c : signal.constituents) {
      if (c.target == node) mine = &c;
    }
    if (mine == nullptr) continue;

    BitString acc = signal.payload;
    for (const Constituent& c : signal.constituents) {
      if (c.target == node) continue;
      IvaId missing;
      const BitString block =
          wanted_block(part.batches[c.batch], c.target, trace.computed[node], &missing);
      if (block.empty()) {
        throw DecodeError(missing, "decode: receiver cannot cancel a coded segment");
      }
      acc ^= block.slice(std::size_t(c.segment) * signal.payload_bits, signal.payload_bits);
    }
    auto& slots = segments[{signal.part, mine->batch}];
    slots.resize(part.params.multiplicity);
    slots[mine->segment] = std::move(acc);
  }

  for (auto& [key, slots] : segments) {
    const SchemePart& part = instance.parts[key.first];
    const Batch& batch = part.batches[key.second];
    BitString block;
    for (const auto& slot : slots) {
      if (!slot.has_value()) {
        throw DecodeError(IvaId{node, batch.files.front()}, "decode: missing coded segment");
      }
      block.append(*slot);
    }
    for (std::size_t i = 0; i < batch.files.size(); ++i) {
      values[batch.files[i]] = block.slice(i * job.iva_bits, job.iva_bits);
    }
  }

  std::vector<BitString> out;
  out.reserve(instance.num_files);
  for (int n = 0; n < instance.num_files; ++n) {
    if (!values[n].has_value()) {
      throw DecodeError(IvaId{node, n}, "decode: intermediate value never recovered");
    }
    out.push_back(std::move(*values[n]));
  }
  return out;
}

std::vector<BitString> reduce_all(const SchemeInstance& instance, const JobSpec& job,
                                  const ExecutionTrace& trace) {
  std::vector<BitString> outputs;
  outputs.reserve(instance.num_nodes);
  for (int k = 0; k < instance.num_nodes; ++k) {
    outputs.push_back(reduce_output(job, k, decode_node(instance, job, trace, k)));
  }
  return outputs;
}

SimulationResult simulate(const SchemeInstance& instance, const JobSpec& job) {
  SimulationResult result;
  const ExecutionTrace trace = execute_map_and_shuffle(instance, job);
  result.outputs = reduce_all(instance, job, trace);
  result.outputs_match = result.outputs == oracle_outputs(job, trace.files);

  for (const ShuffleSignal& signal : trace.signals) {
    result.total_signal_bits += signal.payload.size();
  }
  result.num_signals = static_cast<long long>(trace.signals.size());
  result.measured.storage = storage_space(instance.placement);
  result.measured.computation = computation_load(instance.assignment);
  result.measured.communication = communication_load(result.total_signal_bits, job.num_files,
                                                     job.num_nodes, job.iva_bits);
  result.analytic = analytic_loads(instance);
  return result;
}

std::pair<SchemeParams, SchemeParams> plan_sharing(int num_nodes, std::pair<int, int> first_rg,
                                                   std::pair<int, int> second_rg,
                                                   const Rational& alpha) {
  if (alpha <= Rational(0) || alpha >= Rational(1)) {
    throw std::invalid_argument("sharing: weight must lie strictly between 0 and 1");
  }
  SchemeParams first{num_nodes, first_rg.first, first_rg.second, 1};
  SchemeParams second{num_nodes, second_rg.first, second_rg.second, 1};
  validate_params(first);
  validate_params(second);

  const long long batches_first = scheme_num_files(first);
  const long long batches_second = scheme_num_files(second);
  const long long p = alpha.numerator();
  const long long q = alpha.denominator();
  const long long m = std::lcm(batches_first / std::gcd(batches_first, p),
                               batches_second / std::gcd(batches_second, q - p));
  first.files_per_batch = static_cast<int>(p * m / batches_first);
  second.files_per_batch = static_cast<int>((q - p) * m / batches_second);
  return {first, second};
}

SchemeInstance build_shared_scheme(int num_nodes, const SchemeParams& first,
                                   const SchemeParams& second) {
  if (first.num_nodes != num_nodes || second.num_nodes != num_nodes) {
    throw std::invalid_argument("sharing: parts must agree on the node count");
  }
  if (first.files_per_batch == 0) return build_scheme(second);
  if (second.files_per_batch == 0) return build_scheme(first);

  SchemeInstance a = build_scheme(first);
  SchemeInstance b = build_scheme(second);

  SchemeInstance merged;
  merged.num_nodes = num_nodes;
  merged.num_files = a.num_files + b.num_files;
  merged.placement.num_nodes = num_nodes;
  merged.placement.num_files = merged.num_files;
  merged.placement.stored.resize(num_nodes);
  merged.assignment.num_nodes = num_nodes;
  merged.assignment.num_files = merged.num_files;
  merged.assignment.targets.resize(num_nodes);

  const int offset = a.num_files;
  SchemePart second_part = std::move(b.parts.front());
  second_part.file_offset = offset;
  for (Batch& batch : second_part.batches) {
    for (int& n : batch.files) n += offset;
  }
  merged.parts.push_back(std::move(a.parts.front()));
  merged.parts.push_back(std::move(second_part));

  for (int k = 0; k < num_nodes; ++k) {
    merged.placement.stored[k] = a.placement.stored[k];
    for (int n : b.placement.stored[k]) merged.placement.stored[k].push_back(n + offset);
    merged.assignment.targets[k] = a.assignment.targets[k];
    for (const auto& [file, mask] : b.assignment.targets[k]) {
      merged.assignment.targets[k][file + offset] = mask;
    }
  }
  return merged;
}

}  // namespace scc
