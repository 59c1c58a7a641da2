#include "compgraph/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace compgraph {

namespace {

using Json = nlohmann::ordered_json;

std::size_t positive(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long long>() < 1) {
    throw Error(ErrorKind::kMalformedInput, std::string("\"") + key + "\" must be a positive integer");
  }
  return doc[key].get<std::size_t>();
}

Json edges_json(const ComputationalGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.from, e.to});
  return edges;
}

Json colors_json(const ComputationalGraph& g) {
  Json colors = Json::array();
  for (Color c : g.colors()) colors.push_back(c);
  return colors;
}

}  // namespace

ComputationalGraph parse_graph(std::string_view text, bool normalize) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::kMalformedInput, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::kMalformedInput, "expected a JSON object");
  const std::size_t n = positive(doc, "n");

  if (!doc.contains("colors") || !doc["colors"].is_array()) {
    throw Error(ErrorKind::kMalformedInput, "\"colors\" must be an array");
  }
  std::vector<Color> colors;
  for (const Json& c : doc["colors"]) {
    if (!c.is_number_integer() || c.get<long long>() < 0) {
      throw Error(ErrorKind::kMalformedInput, "colors must be non-negative integers");
    }
    colors.push_back(c.get<Color>());
  }
  std::size_t k = 0;
  if (doc.contains("k")) {
    k = positive(doc, "k");
  } else {
    for (Color c : colors) k = std::max<std::size_t>(k, c);
    k = std::max<std::size_t>(k, 1);
  }

  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw Error(ErrorKind::kMalformedInput, "\"edges\" must be an array");
  }
  std::vector<Edge> edges;
  for (const Json& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
        e[0].get<long long>() < 1 || e[1].get<long long>() < 1) {
      throw Error(ErrorKind::kMalformedInput, "each edge must be a pair of positive integers");
    }
    edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
  }
  return normalize ? normalize_dag(n, k, edges, colors) : validate(n, k, edges, colors);
}

ComputationalGraph read_graph_file(const std::string& path, bool normalize) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kMalformedInput, "cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_graph(text.str(), normalize);
}

std::string graph_to_json(const ComputationalGraph& g) {
  Json doc;
  doc["n"] = g.vertex_count();
  doc["k"] = g.color_count();
  doc["colors"] = colors_json(g);
  doc["edges"] = edges_json(g);
  return doc.dump();
}

void write_graph_file(const std::string& path, const ComputationalGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kMalformedInput, "cannot write " + path);
  out << graph_to_json(g) << '\n';
}

std::string record_to_json(const CanonicalRecord& record) {
  Json doc;
  doc["hash"] = record.invariant.hex();
  doc["n"] = record.graph.vertex_count();
  doc["colors"] = colors_json(record.graph);
  doc["edges"] = edges_json(record.graph);
  return doc.dump();
}

std::string summary_to_json(const EnumerationSummary& summary) {
  Json per_n = Json::object();
  for (auto [n, count] : summary.per_vertex_count) per_n[std::to_string(n)] = count;
  Json doc;
  doc["summary"] = {{"per_n", per_n}, {"total", summary.total}};
  return doc.dump();
}

}  // namespace compgraph
