#pragma once

#include <string>

#include <json.hpp>

#include "pcover/cover.hpp"
#include "pcover/embedding.hpp"
#include "pcover/graph.hpp"

namespace pcover {

using Json = nlohmann::ordered_json;

// Malformed input files and documents.
struct InputError : Error {
  using Error::Error;
};

Json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const Json& j);

// {"graph":..., "rotation":[[edge ids]...], "outer_face":f}; a "faces" array
// is emitted for reading convenience and ignored on input.
Json embedding_to_json(const PlaneEmbedding& e, bool with_faces = true);
PlaneEmbedding embedding_from_json(const Json& j);
Json face_to_json(const PlaneEmbedding& e, int f);

Json voltage_to_json(const VoltageAssignment& v);
VoltageAssignment voltage_from_json(const Json& j);

// {"base":..., "embedding":..., "map":[...]}; a missing map means by label.
Json semicover_to_json(const SemiCover& sc);
SemiCover semicover_from_json(const Json& j);

// Accepts [..] or {"map":[..]}.
std::vector<int> vertex_map_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string dump(const Json& j);

std::string to_dot(const LabeledGraph& g, const std::string& name = "G");

} // namespace pcover
