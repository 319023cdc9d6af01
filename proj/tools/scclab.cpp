#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "harness.hpp"

namespace {

using json = nlohmann::json;
namespace harness = scc::harness;

std::string find_config_path(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string_view arg = argv[i];
    if (arg == "--config" && i + 1 < argc) return argv[i + 1];
    if (arg.rfind("--config=", 0) == 0) return std::string(arg.substr(9));
  }
  return {};
}

json load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) throw std::invalid_argument("config: cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return json::parse(buf.str());
}

template <typename T>
void maybe(const json& doc, const char* key, T& out) {
  if (doc.contains(key)) doc.at(key).get_to(out);
}

void apply_config(const json& doc, harness::SurfaceConfig& c) {
  maybe(doc, "nodes", c.num_nodes);
  maybe(doc, "r_step", c.r_step);
  maybe(doc, "c_step", c.c_step);
  maybe(doc, "out", c.out);
  maybe(doc, "float", c.with_float);
}

void apply_config(const json& doc, harness::SimulateConfig& c) {
  maybe(doc, "nodes", c.num_nodes);
  maybe(doc, "replication", c.replication);
  maybe(doc, "multiplicity", c.multiplicity);
  maybe(doc, "eta", c.files_per_batch);
  maybe(doc, "iva_bits", c.iva_bits);
  maybe(doc, "file_bits", c.file_bits);
  maybe(doc, "output_bits", c.output_bits);
  maybe(doc, "seed", c.seed);
  maybe(doc, "json", c.json_out);
  maybe(doc, "dump_scheme", c.scheme_out);
  maybe(doc, "csv", c.csv_out);
}

void apply_config(const json& doc, harness::ShareConfig& c) {
  maybe(doc, "nodes", c.num_nodes);
  maybe(doc, "first", c.first);
  maybe(doc, "second", c.second);
  maybe(doc, "alpha", c.alpha);
  maybe(doc, "iva_bits", c.iva_bits);
  maybe(doc, "file_bits", c.file_bits);
  maybe(doc, "output_bits", c.output_bits);
  maybe(doc, "seed", c.seed);
  maybe(doc, "json", c.json_out);
  maybe(doc, "dump_scheme", c.scheme_out);
}

void apply_config(const json& doc, harness::VerifyConfig& c) {
  maybe(doc, "nodes", c.num_nodes);
  maybe(doc, "files", c.num_files);
  maybe(doc, "storage", c.storage);
  maybe(doc, "compute", c.compute);
  maybe(doc, "mode", c.mode);
  maybe(doc, "samples", c.samples);
  maybe(doc, "seed", c.seed);
  maybe(doc, "json", c.json_out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scclab: exact-arithmetic lab for the storage-computation-communication "
               "tradeoff of coded map-shuffle-reduce systems"};
  app.require_subcommand(1);
  std::string config_path;

  harness::SurfaceConfig surface_cfg;
  harness::SimulateConfig simulate_cfg;
  harness::ShareConfig share_cfg;
  harness::VerifyConfig verify_cfg;
  std::vector<std::string> report_files;

  // Values from --config act as defaults; explicit flags win.
  try {
    const std::string path = find_config_path(argc, argv);
    if (!path.empty()) {
      const json doc = load_config(path);
      apply_config(doc, surface_cfg);
      apply_config(doc, simulate_cfg);
      apply_config(doc, share_cfg);
      apply_config(doc, verify_cfg);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return harness::kExitConfigError;
  }

  auto* surface = app.add_subcommand("surface", "Export the optimal tradeoff surface as CSV");
  surface->add_option("--nodes", surface_cfg.num_nodes, "Cluster size K");
  surface->add_option("--r-step", surface_cfg.r_step, "Storage grid step, rational p/q");
  surface->add_option("--c-step", surface_cfg.c_step, "Computation grid step, rational p/q");
  surface->add_option("--out", surface_cfg.out, "Output CSV path, - for stdout");
  surface->add_flag("--float", surface_cfg.with_float, "Append decimal convenience columns");
  surface->add_option("--config", config_path, "JSON config with defaults");

  auto* simulate = app.add_subcommand("simulate", "Build and run one corner scheme end to end");
  simulate->add_option("--nodes", simulate_cfg.num_nodes, "Cluster size K");
  simulate->add_option("--replication", simulate_cfg.replication, "Storage replication r");
  simulate->add_option("--multiplicity", simulate_cfg.multiplicity, "Compute multiplicity g");
  simulate->add_option("--eta", simulate_cfg.files_per_batch, "Files per batch");
  simulate->add_option("--iva-bits", simulate_cfg.iva_bits,
                       "Intermediate value length T; 0 picks lcm(1..r)*8");
  simulate->add_option("--file-bits", simulate_cfg.file_bits, "File length F");
  simulate->add_option("--output-bits", simulate_cfg.output_bits, "Output length B");
  simulate->add_option("--seed", simulate_cfg.seed, "Corpus and function seed");
  simulate->add_option("--json", simulate_cfg.json_out, "Write the JSON report here");
  simulate->add_option("--dump-scheme", simulate_cfg.scheme_out, "Write the scheme JSON here");
  simulate->add_option("--csv", simulate_cfg.csv_out, "Write the measured row as CSV here");
  simulate->add_option("--config", config_path, "JSON config with defaults");

  auto* share = app.add_subcommand("share", "Run a file split between two corner schemes");
  share->add_option("--nodes", share_cfg.num_nodes, "Cluster size K");
  share->add_option("--first", share_cfg.first, "First corner as replication,multiplicity")
      ->delimiter(',');
  share->add_option("--second", share_cfg.second, "Second corner as replication,multiplicity")
      ->delimiter(',');
  share->add_option("--alpha", share_cfg.alpha, "File fraction of the first corner, p/q");
  share->add_option("--iva-bits", share_cfg.iva_bits,
                    "Intermediate value length T; 0 picks a compatible default");
  share->add_option("--file-bits", share_cfg.file_bits, "File length F");
  share->add_option("--output-bits", share_cfg.output_bits, "Output length B");
  share->add_option("--seed", share_cfg.seed, "Corpus and function seed");
  share->add_option("--json", share_cfg.json_out, "Write the JSON report here");
  share->add_option("--dump-scheme", share_cfg.scheme_out, "Write the scheme JSON here");
  share->add_option("--config", config_path, "JSON config with defaults");

  auto* verify = app.add_subcommand("verify", "Check the counting bounds on a small instance");
  verify->add_option("--nodes", verify_cfg.num_nodes, "Cluster size K");
  verify->add_option("--files", verify_cfg.num_files, "File count N");
  verify->add_option("--storage", verify_cfg.storage, "Storage budget r, rational p/q");
  verify->add_option("--compute", verify_cfg.compute, "Computation budget c, rational p/q");
  verify->add_option("--mode", verify_cfg.mode, "exhaustive or random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  verify->add_option("--samples", verify_cfg.samples, "Sample count for random mode");
  verify->add_option("--seed", verify_cfg.seed, "RNG seed for random mode");
  verify->add_option("--json", verify_cfg.json_out, "Write the JSON report here");
  verify->add_option("--config", config_path, "JSON config with defaults");

  auto* report = app.add_subcommand("report", "Summarize saved JSON reports");
  report->add_option("files", report_files, "Report files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? harness::kExitPass : harness::kExitConfigError;
  }

  try {
    if (surface->parsed()) return harness::run_surface(surface_cfg);
    if (simulate->parsed()) return harness::run_simulate(simulate_cfg);
    if (share->parsed()) return harness::run_share(share_cfg);
    if (verify->parsed()) return harness::run_verify(verify_cfg);
    if (report->parsed()) return harness::run_report(report_files);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return harness::kExitConfigError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return harness::kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return harness::kExitFail;
  }
  return harness::kExitConfigError;
}
