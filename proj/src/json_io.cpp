#include "hgpoly/json_io.hpp"

namespace hgpoly {

using nlohmann::json;

Hypergraph hypergraph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw InputError("expected an object with \"n\" and \"edges\"");
  }
  if (!j["n"].is_number_integer()) {
    throw InputError("\"n\" must be an integer");
  }
  if (!j["edges"].is_array()) {
    throw InputError("\"edges\" must be an array of vertex lists");
  }
  std::vector<std::vector<int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array()) {
      throw InputError("each edge must be an array of vertices");
    }
    std::vector<int> edge;
    for (const auto& v : e) {
      if (!v.is_number_integer()) {
        throw InputError("vertices must be integers");
      }
      edge.push_back(v.get<int>());
    }
    edges.push_back(std::move(edge));
  }
  return make_hypergraph(j["n"].get<int>(), edges);
}

Hypergraph hypergraph_from_string(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw InputError("input is not valid JSON");
  }
  return hypergraph_from_json(j);
}

json to_json(const Hypergraph& g) {
  json edges = json::array();
  for (Mask e : g.edges) edges.push_back(to_vertices(e));
  return json{{"n", g.n}, {"edges", edges}};
}

json to_json(const FaceKey& key) {
  json heads = json::object();
  for (const auto& [idx, h] : key.heads) {
    heads[std::to_string(idx)] = to_vertices(h);
  }
  json blocks = json::array();
  for (Mask b : key.blocks.blocks) blocks.push_back(to_vertices(b));
  return json{{"flat", key.flat.edge_indices},
              {"heads", heads},
              {"blocks", blocks},
              {"dim", key.dim}};
}

json to_json(const AntipodeResult& r) {
  json out = json::array();
  for (const auto& [flat, c] : r.coefficients) {
    out.push_back(json{{"flat", flat.edge_indices}, {"coefficient", c}});
  }
  return out;
}

json to_json(const FVector& f) { return json(f.counts); }

json to_json(const Hypergraph& g, const Skeleton& s) {
  json vertices = json::array();
  for (const FaceKey& key : s.vertices) {
    vertices.push_back(json{{"face", to_json(key)},
                            {"coordinates", vertex_coordinates(g, key)}});
  }
  json edges = json::array();
  for (auto [a, b] : s.edges) edges.push_back(json::array({a, b}));
  return json{{"vertices", vertices}, {"edges", edges}};
}

}  // namespace hgpoly
