#include "scc/job.hpp"

#include <stdexcept>

namespace scc {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kFileDomain = 0xF17E5EED00000001ULL;
constexpr std::uint64_t kMapDomain = 0x3A9D00000000002ULL;
constexpr std::uint64_t kReduceDomain = 0x4ED00E0000000003ULL;

// splitmix64 finalizer
std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

// Keyed absorb/squeeze stream over a 64-bit state. Not cryptographic;
// collision-free with overwhelming probability at test-corpus scale,
// which is all the toy map/reduce functions need.
class KeyedStream {
 public:
  KeyedStream(std::uint64_t seed, std::uint64_t domain) : state_(mix64(seed ^ mix64(domain))) {}

  void absorb(std::uint64_t value) { state_ = mix64(state_ ^ (mix64(value) + kGolden)); }

  void absorb_bits(const BitString& s) {
    absorb(s.size());
    const auto& bytes = s.bytes();
    for (std::size_t i = 0; i < bytes.size(); i += 8) {
      std::uint64_t word = 0;
      for (std::size_t j = 0; j < 8 && i + j < bytes.size(); ++j) {
        word |= std::uint64_t(bytes[i + j]) << (8 * j);
      }
      absorb(word);
    }
  }

  BitString squeeze(std::size_t bit_count) const {
    BitString out;
    std::uint64_t counter = 0;
    std::size_t remaining = bit_count;
    while (remaining > 0) {
      std::uint64_t block = mix64(state_ + (++counter) * kGolden);
      std::size_t take = remaining < 64 ? remaining : 64;
      out.append_word(block, take);
      remaining -= take;
    }
    return out;
  }

 private:
  std::uint64_t state_;
};

}  // namespace

void JobSpec::validate() const {
  if (num_nodes < 2) throw std::invalid_argument("job: need at least 2 nodes");
  if (num_files < 1) throw std::invalid_argument("job: need at least 1 file");
  if (file_bits < 1 || iva_bits < 1 || output_bits < 1) {
    throw std::invalid_argument("job: file, iva and output lengths must be positive");
  }
}

std::vector<BitString> generate_files(const JobSpec& job) {
  job.validate();
  std::vector<BitString> files;
  files.reserve(job.num_files);
  for (int n = 0; n < job.num_files; ++n) {
    KeyedStream stream(job.seed, kFileDomain);
    stream.absorb(std::uint64_t(n + 1));
    files.push_back(stream.squeeze(job.file_bits));
  }
  return files;
}

BitString map_iva(const JobSpec& job, int target, int file, const BitString& content) {
  if (target < 0 || target >= job.num_nodes) throw std::invalid_argument("map: bad target node");
  if (file < 0 || file >= job.num_files) throw std::invalid_argument("map: bad file index");
  if (content.size() != std::size_t(job.file_bits)) {
    throw std::invalid_argument("map: file content has wrong length");
  }
  KeyedStream stream(job.seed, kMapDomain);
  stream.absorb(std::uint64_t(target + 1));
  stream.absorb(std::uint64_t(file + 1));
  stream.absorb_bits(content);
  return stream.squeeze(job.iva_bits);
}

BitString reduce_output(const JobSpec& job, int node, const std::vector<BitString>& ivas) {
  if (node < 0 || node >= job.num_nodes) throw std::invalid_argument("reduce: bad node index");
  if (ivas.size() != std::size_t(job.num_files)) {
    throw std::invalid_argument("reduce: need exactly one intermediate value per file");
  }
  KeyedStream stream(job.seed, kReduceDomain);
  stream.absorb(std::uint64_t(node + 1));
  for (const BitString& v : ivas) {
    if (v.size() != std::size_t(job.iva_bits)) {
      throw std::invalid_argument("reduce: intermediate value has wrong length");
    }
    stream.absorb_bits(v);
  }
  return stream.squeeze(job.output_bits);
}

std::vector<std::vector<BitString>> all_ivas(const JobSpec& job,
                                             const std::vector<BitString>& files) {
  std::vector<std::vector<BitString>> out(job.num_nodes);
  for (int k = 0; k < job.num_nodes; ++k) {
    out[k].reserve(job.num_files);
    for (int n = 0; n < job.num_files; ++n) out[k].push_back(map_iva(job, k, n, files[n]));
  }
  return out;
}

std::vector<BitString> oracle_outputs(const JobSpec& job, const std::vector<BitString>& files) {
  auto ivas = all_ivas(job, files);
  std::vector<BitString> outputs;
  outputs.reserve(job.num_nodes);
  for (int k = 0; k < job.num_nodes; ++k) outputs.push_back(reduce_output(job, k, ivas[k]));
  return outputs;
}

}  // namespace scc
