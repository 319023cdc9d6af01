#include "scc/serialize.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace scc {

namespace {

using json = nlohmann::ordered_json;

json nodes_1based(const std::vector<int>& nodes) {
  json out = json::array();
  for (int k : nodes) out.push_back(k + 1);
  return out;
}

std::vector<int> nodes_0based(const json& arr) {
  std::vector<int> out;
  for (const auto& v : arr) out.push_back(v.get<int>() - 1);
  return out;
}

}  // namespace

std::string scheme_to_json(const SchemeInstance& instance, int iva_bits, int indent) {
  json doc;
  doc["format"] = "scclab-scheme";
  doc["version"] = 1;
  doc["nodes"] = instance.num_nodes;
  doc["files"] = instance.num_files;

  doc["parts"] = json::array();
  for (const SchemePart& part : instance.parts) {
    json p;
    p["replication"] = part.params.replication;
    p["multiplicity"] = part.params.multiplicity;
    p["files_per_batch"] = part.params.files_per_batch;
    p["file_offset"] = part.file_offset + 1;
    p["num_files"] = part.num_files;
    p["batches"] = json::array();
    for (const Batch& batch : part.batches) {
      p["batches"].push_back({{"storage_nodes", nodes_1based(batch.storage_nodes)},
                              {"compute_nodes", nodes_1based(batch.compute_nodes)},
                              {"files", nodes_1based(batch.files)}});
    }
    p["groups"] = json::array();
    for (const MulticastGroup& group : part.groups) {
      p["groups"].push_back(
          {{"nodes", nodes_1based(group.nodes)}, {"coded", nodes_1based(group.coded)}});
    }
    doc["parts"].push_back(std::move(p));
  }

  doc["stored"] = json::array();
  for (const auto& files : instance.placement.stored) doc["stored"].push_back(nodes_1based(files));

  doc["computed"] = json::array();
  for (const auto& per_node : instance.assignment.targets) {
    json list = json::array();
    for (const auto& [file, mask] : per_node) {
      for (int q = 0; q < instance.num_nodes; ++q) {
        if ((mask >> q) & 1) list.push_back({{"target", q + 1}, {"file", file + 1}});
      }
    }
    doc["computed"].push_back(std::move(list));
  }

  doc["signals"] = json::array();
  for (const ShuffleSignal& signal : build_shuffle_plan(instance, iva_bits)) {
    json constituents = json::array();
    for (const Constituent& c : signal.constituents) {
      constituents.push_back(
          {{"target", c.target + 1}, {"batch", c.batch + 1}, {"segment", c.segment + 1}});
    }
    doc["signals"].push_back({{"part", signal.part + 1},
                              {"group", signal.group + 1},
                              {"sender", signal.sender + 1},
                              {"payload_bits", signal.payload_bits},
                              {"constituents", std::move(constituents)}});
  }
  return doc.dump(indent) + "\n";
}

SchemeInstance scheme_from_json(std::string_view text) {
  json doc = json::parse(text);
  if (doc.value("format", "") != std::string("scclab-scheme")) {
    throw std::invalid_argument("scheme json: unrecognized format tag");
  }
  SchemeInstance instance;
  instance.num_nodes = doc.at("nodes").get<int>();
  instance.num_files = doc.at("files").get<int>();

  for (const auto& p : doc.at("parts")) {
    SchemePart part;
    part.params.num_nodes = instance.num_nodes;
    part.params.replication = p.at("replication").get<int>();
    part.params.multiplicity = p.at("multiplicity").get<int>();
    part.params.files_per_batch = p.at("files_per_batch").get<int>();
    part.file_offset = p.at("file_offset").get<int>() - 1;
    part.num_files = p.at("num_files").get<int>();
    for (const auto& b : p.at("batches")) {
      Batch batch;
      batch.storage_nodes = nodes_0based(b.at("storage_nodes"));
      batch.compute_nodes = nodes_0based(b.at("compute_nodes"));
      batch.files = nodes_0based(b.at("files"));
      part.batches.push_back(std::move(batch));
    }
    for (const auto& g : p.at("groups")) {
      part.groups.push_back(MulticastGroup{nodes_0based(g.at("nodes")), nodes_0based(g.at("coded"))});
    }
    instance.parts.push_back(std::move(part));
  }

  instance.placement.num_nodes = instance.num_nodes;
  instance.placement.num_files = instance.num_files;
  for (const auto& files : doc.at("stored")) instance.placement.stored.push_back(nodes_0based(files));

  instance.assignment.num_nodes = instance.num_nodes;
  instance.assignment.num_files = instance.num_files;
  instance.assignment.targets.resize(instance.num_nodes);
  const auto& computed = doc.at("computed");
  for (int k = 0; k < instance.num_nodes; ++k) {
    for (const auto& iva : computed.at(k)) {
      const int target = iva.at("target").get<int>() - 1;
      const int file = iva.at("file").get<int>() - 1;
      instance.assignment.targets[k][file] |= 1u << target;
    }
  }

  instance.placement.validate();
  instance.assignment.validate(instance.placement);
  return instance;
}

std::string surface_to_csv(const std::vector<SurfaceRow>& rows, bool with_float) {
  std::ostringstream out;
  out << "K,r,c,L,kind";
  if (with_float) out << ",r_float,c_float,L_float";
  out << "\n";
  for (const SurfaceRow& row : rows) {
    out << row.num_nodes << ',' << row.storage.str() << ',' << row.computation.str() << ','
        << row.communication.str() << ',' << row.kind;
    if (with_float) {
      out << ',' << row.storage.to_double() << ',' << row.computation.to_double() << ','
          << row.communication.to_double();
    }
    out << "\n";
  }
  return out.str();
}

std::vector<SurfaceRow> surface_from_csv(std::string_view text) {
  std::vector<SurfaceRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("surface csv: empty input");
  if (line.rfind("K,r,c,L,kind", 0) != 0) {
    throw std::invalid_argument("surface csv: unrecognized header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (fields.size() < 5) throw std::invalid_argument("surface csv: short row");
    SurfaceRow row;
    row.num_nodes = static_cast<int>(Rational::parse(fields[0]).numerator());
    row.storage = Rational::parse(fields[1]);
    row.computation = Rational::parse(fields[2]);
    row.communication = Rational::parse(fields[3]);
    row.kind = fields[4];
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace scc
