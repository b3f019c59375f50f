#pragma once

#include <string>

#include <json.hpp>

#include "hgpoly/geometry.hpp"
#include "hgpoly/hopf.hpp"

namespace hgpoly {

/// Parses {"n": int, "edges": [[v, ...], ...]}. Throws InputError on
/// malformed JSON or an invalid hypergraph.
Hypergraph hypergraph_from_json(const nlohmann::json& j);
Hypergraph hypergraph_from_string(const std::string& text);

nlohmann::json to_json(const Hypergraph& g);
nlohmann::json to_json(const FaceKey& key);
nlohmann::json to_json(const AntipodeResult& r);
nlohmann::json to_json(const FVector& f);
nlohmann::json to_json(const Hypergraph& g, const Skeleton& s);

}  // namespace hgpoly
