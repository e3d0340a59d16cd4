// Copyright 2026 The unigraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "unigraph/graph_json.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "unigraph/error.hpp"

namespace unigraph {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::SyntaxError, "graph spec: " + what);
}

void reject_unknown_keys(const json& object, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    if (!allowed.contains(key)) {
      schema_error("unknown key '" + key + "' in " + where);
    }
  }
}

std::size_t positive_size(const json& value, const std::string& name) {
  if (!value.is_number_integer()) schema_error("'" + name + "' must be an integer");
  const auto v = value.get<long long>();
  if (v < 1) {
    throw Error(ErrorCode::InvalidDimension,
                "graph spec: '" + name + "' must be >= 1, got " + std::to_string(v));
  }
  return static_cast<std::size_t>(v);
}

ParticleSystem parse_system(const json& doc) {
  const bool has_dims = doc.contains("dims");
  const bool has_nk = doc.contains("n") || doc.contains("k");
  if (has_dims && has_nk) schema_error("give either 'dims' or 'n'/'k', not both");
  if (has_dims) {
    const auto& dims = doc.at("dims");
    if (!dims.is_array() || dims.empty()) {
      schema_error("'dims' must be a non-empty array");
    }
    std::vector<std::size_t> out;
    for (const auto& d : dims) out.push_back(positive_size(d, "dims[]"));
    return ParticleSystem(std::move(out));
  }
  if (!doc.contains("n") || !doc.contains("k")) {
    schema_error("missing 'dims' (or both 'n' and 'k')");
  }
  return ParticleSystem::uniform(positive_size(doc.at("k"), "k"),
                                 positive_size(doc.at("n"), "n"));
}

Layer parse_layer(const json& item, std::size_t index) {
  const std::string where = "layers[" + std::to_string(index) + "]";
  if (!item.is_object()) schema_error(where + " must be an object");
  reject_unknown_keys(item, {"color", "cliques", "singletons"}, where);
  std::string color = "layer" + std::to_string(index + 1);
  if (item.contains("color")) {
    if (!item.at("color").is_string()) schema_error(where + ".color must be a string");
    color = item.at("color").get<std::string>();
  }
  SingletonMode mode = SingletonMode::Haar;
  if (item.contains("singletons")) {
    const auto& s = item.at("singletons");
    if (s == "haar") {
      mode = SingletonMode::Haar;
    } else if (s == "identity") {
      mode = SingletonMode::Identity;
    } else {
      schema_error(where + ".singletons must be \"haar\" or \"identity\"");
    }
  }
  if (!item.contains("cliques") || !item.at("cliques").is_array()) {
    schema_error(where + ".cliques must be an array");
  }
  std::vector<Clique> cliques;
  for (const auto& c : item.at("cliques")) {
    if (!c.is_array()) schema_error(where + ".cliques entries must be arrays");
    std::vector<long long> labels;
    for (const auto& p : c) {
      if (!p.is_number_integer()) schema_error(where + " has a non-integer particle");
      labels.push_back(p.get<long long>());
    }
    cliques.push_back(Clique::from_labels(labels));
  }
  return Layer(std::move(color), std::move(cliques), mode);
}

}  // namespace

InteractionGraph parse_graph_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError,
                "graph spec: malformed JSON at byte " + std::to_string(e.byte),
                e.byte);
  }
  if (!doc.is_object()) schema_error("top level must be an object");
  reject_unknown_keys(doc, {"dims", "n", "k", "layers"}, "top level");
  ParticleSystem system = parse_system(doc);
  if (!doc.contains("layers") || !doc.at("layers").is_array()) {
    schema_error("'layers' must be an array");
  }
  std::vector<Layer> layers;
  std::size_t index = 0;
  for (const auto& item : doc.at("layers")) layers.push_back(parse_layer(item, index++));
  return InteractionGraph(std::move(system), std::move(layers));
}

InteractionGraph load_graph_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::InvalidArgument, "cannot open graph spec '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_spec(buffer.str());
}

std::string serialize_graph_spec(const InteractionGraph& graph) {
  json doc;
  doc["dims"] = graph.system().dims();
  json layers = json::array();
  for (const auto& layer : graph.layers()) {
    json cliques = json::array();
    for (const auto& clique : layer.cliques()) {
      json c = json::array();
      for (std::size_t p : clique.particles()) c.push_back(p + 1);
      cliques.push_back(std::move(c));
    }
    layers.push_back({{"color", layer.color()},
                      {"cliques", std::move(cliques)},
                      {"singletons", std::string(to_string(layer.singletons()))}});
  }
  doc["layers"] = std::move(layers);
  return doc.dump();
}

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string graph_spec_hash(const InteractionGraph& graph) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(serialize_graph_spec(graph))));
  return buf;
}

}  // namespace unigraph
