#pragma once

// JSON link files and the bundled corpus.
//
//   {"name": "...", "components": k, "free_loops": {"1": 1},
//    "crossings": [[a,b,c,d], ...], "component_of_edge": {"1": 1, ...}}
//
// Component numbers in files are 1-based.

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "skeinlab/diagram.hpp"

namespace skeinlab {

using ordered_json = nlohmann::ordered_json;

inline LinkDiagram diagram_from_json(const nlohmann::json& j) {
  try {
    std::string name = j.value("name", std::string());
    int components = j.at("components").get<int>();
    std::vector<std::array<int, 4>> xs;
    for (const auto& x : j.at("crossings")) {
      if (!x.is_array() || x.size() != 4) throw InvalidDiagram("crossing must list 4 edges");
      xs.push_back({x[0].get<int>(), x[1].get<int>(), x[2].get<int>(), x[3].get<int>()});
    }
    std::map<int, int> edge_comp;
    if (j.contains("component_of_edge"))
      for (const auto& [k, v] : j.at("component_of_edge").items()) edge_comp[std::stoi(k)] = v.get<int>() - 1;
    std::map<int, int> loops;
    if (j.contains("free_loops"))
      for (const auto& [k, v] : j.at("free_loops").items())
        if (v.get<int>() != 0) loops[std::stoi(k) - 1] = v.get<int>();
    return LinkDiagram::from_pd(std::move(name), components, std::move(xs), std::move(edge_comp), std::move(loops));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidDiagram(std::string("bad link JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InvalidDiagram(std::string("bad link JSON: ") + e.what());
  }
}

inline ordered_json diagram_to_json(const LinkDiagram& d) {
  ordered_json j;
  j["name"] = d.name();
  j["components"] = d.num_components();
  ordered_json loops = ordered_json::object();
  for (auto [c, k] : d.free_loops()) loops[std::to_string(c + 1)] = k;
  j["free_loops"] = loops;
  ordered_json xs = ordered_json::array();
  for (const auto& x : d.crossings()) xs.push_back(x.edges);
  j["crossings"] = xs;
  ordered_json ec = ordered_json::object();
  for (auto [e, c] : d.component_of_edge()) ec[std::to_string(e)] = c + 1;
  j["component_of_edge"] = ec;
  return j;
}

inline std::string diagram_to_json_text(const LinkDiagram& d) { return diagram_to_json(d).dump(2) + "\n"; }

inline LinkDiagram diagram_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidDiagram(std::string("bad link JSON: ") + e.what());
  }
  return diagram_from_json(j);
}

namespace corpus {

inline LinkDiagram pd(std::string name, int comps, std::vector<std::array<int, 4>> xs,
                      std::vector<int> edges_per_comp) {
  std::map<int, int> ec;
  int e = 1;
  for (std::size_t c = 0; c < edges_per_comp.size(); ++c)
    for (int i = 0; i < edges_per_comp[c]; ++i) ec[e++] = static_cast<int>(c);
  return LinkDiagram::from_pd(std::move(name), comps, std::move(xs), std::move(ec), {});
}

inline LinkDiagram empty() { return LinkDiagram::unlink(0, "empty"); }
inline LinkDiagram unknot() { return LinkDiagram::unlink(1, "unknot"); }
inline LinkDiagram unlink2() { return LinkDiagram::unlink(2, "unlink2"); }
inline LinkDiagram hopf_plus() { return pd("hopf_plus", 2, {{1, 3, 2, 4}, {3, 1, 4, 2}}, {2, 2}); }
inline LinkDiagram hopf_minus() { return pd("hopf_minus", 2, {{4, 1, 3, 2}, {2, 3, 1, 4}}, {2, 2}); }
inline LinkDiagram trefoil() { return pd("trefoil", 1, {{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 2}}, {6}); }
inline LinkDiagram figure_eight() {
  return pd("figure_eight", 1, {{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}}, {8});
}

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"empty",      "unknot",  "unlink2",     "hopf_plus",
                                          "hopf_minus", "trefoil", "figure_eight"};
  return n;
}

inline LinkDiagram get(const std::string& name) {
  if (name == "empty") return empty();
  if (name == "unknot") return unknot();
  if (name == "unlink2") return unlink2();
  if (name == "hopf_plus") return hopf_plus();
  if (name == "hopf_minus") return hopf_minus();
  if (name == "trefoil") return trefoil();
  if (name == "figure_eight") return figure_eight();
  throw std::invalid_argument("unknown corpus entry '" + name + "'");
}

inline std::vector<LinkDiagram> all() {
  std::vector<LinkDiagram> out;
  for (const auto& n : names()) out.push_back(get(n));
  return out;
}

}  // namespace corpus

// Reads "corpus:<name>" or a JSON file path.
inline LinkDiagram load_link(const std::string& source) {
  const std::string prefix = "corpus:";
  if (source.rfind(prefix, 0) == 0) return corpus::get(source.substr(prefix.size()));
  std::ifstream in(source);
  if (!in) throw std::invalid_argument("cannot open '" + source + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return diagram_from_json_text(buf.str());
}

}  // namespace skeinlab
