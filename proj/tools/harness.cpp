#include "harness.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "scc/converse.hpp"
#include "scc/d3c.hpp"
#include "scc/serialize.hpp"
#include "scc/tradeoff.hpp"

namespace scc::harness {

namespace {

using json = nlohmann::ordered_json;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  const std::string resolved = resolve_output_path(path);
  std::ofstream out(resolved, std::ios::binary);
  if (!out.good()) throw std::runtime_error("cannot open output file: " + resolved);
  out << text;
}

int default_iva_bits(int max_replication) {
  long long l = 8;
  for (int i = 2; i <= max_replication; ++i) l = std::lcm(l, static_cast<long long>(i) * 8);
  return static_cast<int>(l);
}

json loads_json(const LoadTriple& loads) {
  return {{"r", loads.storage.str()},
          {"c", loads.computation.str()},
          {"L", loads.communication.str()}};
}

json slack_json(const LoadTriple& measured, const LoadTriple& analytic) {
  return {{"r", (measured.storage - analytic.storage).str()},
          {"c", (measured.computation - analytic.computation).str()},
          {"L", (measured.communication - analytic.communication).str()}};
}

json placement_json(const Placement& placement) {
  json stored = json::array();
  for (const auto& files : placement.stored) {
    json list = json::array();
    for (int n : files) list.push_back(n + 1);
    stored.push_back(std::move(list));
  }
  return stored;
}

json assignment_json(const ComputationAssignment& assignment) {
  json computed = json::array();
  for (const auto& per_node : assignment.targets) {
    json list = json::array();
    for (const auto& [file, mask] : per_node) {
      for (int q = 0; q < assignment.num_nodes; ++q) {
        if ((mask >> q) & 1) list.push_back({{"target", q + 1}, {"file", file + 1}});
      }
    }
    computed.push_back(std::move(list));
  }
  return computed;
}

// Runs one built instance end to end and emits the common report body.
int report_simulation(const SchemeInstance& instance, const JobSpec& job, json config_echo,
                      const std::string& kind, const std::string& json_out,
                      const std::string& scheme_out, const std::string& csv_out) {
  const Stopwatch clock;
  const SimulationResult result = simulate(instance, job);
  const bool zero_slack = result.measured == result.analytic;
  const bool pass = result.outputs_match && zero_slack;

  json doc;
  doc["kind"] = kind;
  doc["config"] = std::move(config_echo);
  doc["measured"] = loads_json(result.measured);
  doc["analytic"] = loads_json(result.analytic);
  doc["slack"] = slack_json(result.measured, result.analytic);
  doc["outputs_match_oracle"] = result.outputs_match;
  doc["signals"] = result.num_signals;
  doc["signal_bits"] = result.total_signal_bits;
  doc["pass"] = pass;
  doc["wall_clock_seconds"] = clock.seconds();
  if (!json_out.empty()) write_text(json_out, doc.dump(2) + "\n");
  if (!scheme_out.empty()) write_text(scheme_out, scheme_to_json(instance, job.iva_bits));
  if (!csv_out.empty()) {
    std::vector<SurfaceRow> rows{{job.num_nodes, result.measured.storage,
                                  result.measured.computation, result.measured.communication,
                                  "measured"}};
    write_text(csv_out, surface_to_csv(rows));
  }

  std::cout << kind << ": measured (r, c, L) = (" << result.measured.storage.str() << ", "
            << result.measured.computation.str() << ", " << result.measured.communication.str()
            << "), analytic L = " << result.analytic.communication.str()
            << ", oracle match: " << (result.outputs_match ? "yes" : "no")
            << ", slack: " << (zero_slack ? "0" : "nonzero") << "\n"
            << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kExitPass : kExitFail;
}

}  // namespace

std::string resolve_output_path(const std::string& path) {
  if (path == "-" || path.empty()) return path;
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  const char* dir = std::getenv("SCCLAB_OUT_DIR");
  if (dir == nullptr || *dir == '\0') return path;
  return (std::filesystem::path(dir) / p).string();
}

int run_surface(const SurfaceConfig& config) {
  const int num_nodes = config.num_nodes;
  const Rational r_step = Rational::parse(config.r_step);
  const Rational c_step = Rational::parse(config.c_step);
  if (num_nodes < 2) throw std::invalid_argument("surface: need at least 2 nodes");
  if (r_step <= Rational(0) || c_step <= Rational(0)) {
    throw std::invalid_argument("surface: grid steps must be positive");
  }

  std::vector<SurfaceRow> rows;
  for (Rational r(1); r < Rational(num_nodes); r += r_step) {
    for (Rational c(1); c <= r; c += c_step) {
      rows.push_back({num_nodes, r, c, optimal_load(r, c, num_nodes), "surface"});
    }
  }
  for (const SurfacePoint& p : ocp_curve(num_nodes, r_step)) {
    rows.push_back({num_nodes, p.storage, p.computation, p.communication, "ocp"});
  }
  for (const SurfacePoint& p : ocm_curve(num_nodes, r_step)) {
    rows.push_back({num_nodes, p.storage, p.computation, p.communication, "ocm"});
  }
  for (int r = 1; r < num_nodes; ++r) {
    for (const CornerPoint& corner : corner_points(Rational(r), num_nodes)) {
      rows.push_back({num_nodes, Rational(r), corner.computation, corner.communication, "corner"});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const SurfaceRow& a, const SurfaceRow& b) {
    if (a.storage != b.storage) return a.storage < b.storage;
    if (a.computation != b.computation) return a.computation < b.computation;
    return a.kind < b.kind;
  });
  write_text(config.out, surface_to_csv(rows, config.with_float));
  if (config.out != "-") {
    std::cout << "surface: wrote " << rows.size() << " rows to "
              << resolve_output_path(config.out) << "\n";
  }
  return kExitPass;
}

int run_simulate(const SimulateConfig& config) {
  SchemeParams params{config.num_nodes, config.replication, config.multiplicity,
                      config.files_per_batch};
  SchemeInstance instance = build_scheme(params);
  JobSpec job;
  job.num_nodes = config.num_nodes;
  job.num_files = instance.num_files;
  job.file_bits = config.file_bits;
  job.iva_bits = config.iva_bits > 0 ? config.iva_bits : default_iva_bits(config.replication);
  job.output_bits = config.output_bits;
  job.seed = config.seed;

  json echo{{"command", "simulate"},
            {"nodes", config.num_nodes},
            {"replication", config.replication},
            {"multiplicity", config.multiplicity},
            {"eta", config.files_per_batch},
            {"files", instance.num_files},
            {"iva_bits", job.iva_bits},
            {"file_bits", job.file_bits},
            {"output_bits", job.output_bits},
            {"seed", job.seed}};
  return report_simulation(instance, job, std::move(echo), "simulate", config.json_out,
                           config.scheme_out, config.csv_out);
}

int run_share(const ShareConfig& config) {
  if (config.first.size() != 2 || config.second.size() != 2) {
    throw std::invalid_argument("share: corner specs are pairs replication,multiplicity");
  }
  const Rational alpha = Rational::parse(config.alpha);
  SchemeInstance instance;
  int max_replication = std::max(config.first[0], config.second[0]);
  if (alpha == Rational(1)) {
    instance = build_scheme({config.num_nodes, config.first[0], config.first[1], 1});
    max_replication = config.first[0];
  } else if (alpha == Rational(0)) {
    instance = build_scheme({config.num_nodes, config.second[0], config.second[1], 1});
    max_replication = config.second[0];
  } else {
    auto [first, second] =
        plan_sharing(config.num_nodes, {config.first[0], config.first[1]},
                     {config.second[0], config.second[1]}, alpha);
    instance = build_shared_scheme(config.num_nodes, first, second);
  }

  JobSpec job;
  job.num_nodes = config.num_nodes;
  job.num_files = instance.num_files;
  job.file_bits = config.file_bits;
  job.iva_bits = config.iva_bits > 0 ? config.iva_bits : default_iva_bits(max_replication);
  job.output_bits = config.output_bits;
  job.seed = config.seed;

  json echo{{"command", "share"},
            {"nodes", config.num_nodes},
            {"first", config.first},
            {"second", config.second},
            {"alpha", alpha.str()},
            {"files", instance.num_files},
            {"iva_bits", job.iva_bits},
            {"file_bits", job.file_bits},
            {"output_bits", job.output_bits},
            {"seed", job.seed}};
  return report_simulation(instance, job, std::move(echo), "share", config.json_out,
                           config.scheme_out, "");
}

int run_verify(const VerifyConfig& config) {
  const Stopwatch clock;
  const Rational storage = Rational::parse(config.storage);
  const Rational compute = Rational::parse(config.compute);

  json doc;
  doc["kind"] = "verify";
  doc["config"] = {{"command", "verify"},
                   {"nodes", config.num_nodes},
                   {"files", config.num_files},
                   {"storage", storage.str()},
                   {"compute", compute.str()},
                   {"mode", config.mode},
                   {"samples", config.samples},
                   {"seed", config.seed}};

  bool pass = false;
  if (config.mode == "exhaustive") {
    const VerificationResult result =
        exhaustive_verify(config.num_nodes, config.num_files, storage, compute);
    pass = result.pass;
    doc["minimum_bound"] = result.sweep.min_bound.str();
    doc["analytic_bound"] = result.analytic ? json(result.analytic->str()) : json(nullptr);
    doc["slack"] =
        result.analytic ? json((result.sweep.min_bound - *result.analytic).str()) : json(nullptr);
    doc["argmin"] = {{"stored", placement_json(result.sweep.argmin_placement)},
                     {"computed", assignment_json(result.sweep.argmin_assignment)}};
    doc["placements_examined"] = result.sweep.placements_examined;
    doc["placements_feasible"] = result.sweep.placements_feasible;
    doc["assignments_examined"] = result.sweep.assignments_examined;
    doc["violations"] = {{"lemma3", result.sweep.lemma3_violations},
                         {"partition", result.sweep.partition_violations},
                         {"storage_identity", result.sweep.storage_identity_violations},
                         {"compute_identity", result.sweep.compute_identity_violations}};
    std::cout << "verify (exhaustive): min bound " << result.sweep.min_bound.str()
              << ", analytic " << (result.analytic ? result.analytic->str() : "n/a") << ", "
              << result.sweep.assignments_examined << " assignments\n";
  } else if (config.mode == "random") {
    const RandomSweepResult result =
        random_census_sweep(config.num_nodes, config.num_files, config.samples, config.seed);
    pass = result.lemma3_violations == 0 && result.partition_violations == 0;
    doc["samples"] = result.samples;
    doc["minimum_bound"] = result.min_bound.str();
    doc["violations"] = {{"lemma3", result.lemma3_violations},
                         {"partition", result.partition_violations}};
    std::cout << "verify (random): " << result.samples << " samples, "
              << result.lemma3_violations + result.partition_violations << " violations\n";
  } else {
    throw std::invalid_argument("verify: mode must be exhaustive or random");
  }

  doc["pass"] = pass;
  doc["wall_clock_seconds"] = clock.seconds();
  if (!config.json_out.empty()) write_text(config.json_out, doc.dump(2) + "\n");
  std::cout << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kExitPass : kExitFail;
}

int run_report(const std::vector<std::string>& report_files) {
  if (report_files.empty()) throw std::invalid_argument("report: no files given");
  bool all_pass = true;
  for (const std::string& path : report_files) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) throw std::invalid_argument("report: cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const json doc = json::parse(buf.str());
    const bool pass = doc.value("pass", false);
    all_pass = all_pass && pass;
    std::cout << (pass ? "PASS" : "FAIL") << "  " << doc.value("kind", "?") << "  " << path;
    if (doc.contains("measured")) {
      std::cout << "  (r, c, L) = (" << doc["measured"].value("r", "?") << ", "
                << doc["measured"].value("c", "?") << ", " << doc["measured"].value("L", "?")
                << ")";
    }
    if (doc.contains("minimum_bound")) {
      std::cout << "  min bound = " << doc["minimum_bound"].get<std::string>();
    }
    std::cout << "\n";
  }
  std::cout << (all_pass ? "PASS" : "FAIL") << "\n";
  return all_pass ? kExitPass : kExitFail;
}

}  // namespace scc::harness
