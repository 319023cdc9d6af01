#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scc/rational.hpp"

namespace scc::harness {

// Exit codes: 0 pass, 1 invariant or acceptance failure, 2 configuration error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitConfigError = 2;

struct SurfaceConfig {
  int num_nodes = 10;
  std::string r_step = "1/10";
  std::string c_step = "1/10";
  std::string out = "surface.csv";
  bool with_float = false;
};

struct SimulateConfig {
  int num_nodes = 4;
  int replication = 2;
  int multiplicity = 1;
  int files_per_batch = 1;
  int iva_bits = 0;  // 0: pick lcm(1..r) * 8
  int file_bits = 32;
  int output_bits = 32;
  std::uint64_t seed = 1;
  std::string json_out;
  std::string scheme_out;
  std::string csv_out;
};

struct ShareConfig {
  int num_nodes = 10;
  std::vector<int> first = {2, 1};   // replication, multiplicity
  std::vector<int> second = {2, 2};  // replication, multiplicity
  std::string alpha = "1/2";
  int iva_bits = 0;
  int file_bits = 32;
  int output_bits = 32;
  std::uint64_t seed = 1;
  std::string json_out;
  std::string scheme_out;
};

struct VerifyConfig {
  int num_nodes = 3;
  int num_files = 3;
  std::string storage = "1";
  std::string compute = "1";
  std::string mode = "exhaustive";
  long long samples = 10000;
  std::uint64_t seed = 1;
  std::string json_out;
};

int run_surface(const SurfaceConfig& config);
int run_simulate(const SimulateConfig& config);
int run_share(const ShareConfig& config);
int run_verify(const VerifyConfig& config);
int run_report(const std::vector<std::string>& report_files);

/// Relative output paths land in $SCCLAB_OUT_DIR when it is set; "-"
/// means stdout and absolute paths are used as given.
std::string resolve_output_path(const std::string& path);

}  // namespace scc::harness
