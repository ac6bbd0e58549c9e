#pragma once

#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "mediangle/cayley.hpp"
#include "mediangle/graph.hpp"
#include "mediangle/hyperplane.hpp"
#include "mediangle/presentation.hpp"
#include "mediangle/recognize.hpp"
#include "mediangle/rotation.hpp"

namespace mediangle {

// Ordered JSON keeps key order stable so reports are byte-identical across
// runs.
using json = nlohmann::ordered_json;

inline json graph_to_json(const Graph& g) {
  json out;
  out["vertices"] = g.vertex_count();
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  out["edges"] = std::move(edges);
  if (g.ball()) out["ball"] = {{"center", g.ball()->center}, {"radius", g.ball()->radius}};
  return out;
}

inline Graph graph_from_json(const json& j) {
  if (!j.contains("vertices") || !j.contains("edges"))
    throw input_error("graph JSON needs \"vertices\" and \"edges\"");
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw input_error("edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::optional<BallInfo> ball;
  if (j.contains("ball"))
    ball = BallInfo{j.at("ball").at("center").get<int>(), j.at("ball").at("radius").get<int>()};
  return Graph(j.at("vertices").get<int>(), edges, ball);
}

// Plain edge list: one "u v" pair per line; vertex count is one past the
// largest id.
inline Graph graph_from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::vector<Edge> edges;
  int max_id = -1;
  long long u, v;
  while (in >> u >> v) {
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_id = std::max({max_id, static_cast<int>(u), static_cast<int>(v)});
  }
  return Graph(max_id + 1, edges);
}

inline std::string graph_to_edge_list(const Graph& g) {
  std::ostringstream out;
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

// DOT export; when an arrangement is given, edges are coloured by
// hyperplane id.
inline std::string graph_to_dot(const Graph& g, const HyperplaneArrangement* arr = nullptr) {
  static const char* palette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                                  "#ff7f00", "#a65628", "#f781bf", "#999999",
                                  "#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3"};
  std::ostringstream out;
  out << "graph mediangle {\n  node [shape=circle];\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    if (arr) {
      int id = arr->class_of(e);
      out << " [color=\"" << palette[id % 12] << "\", label=\"h" << id << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

inline json group_spec_to_json(const GroupSpec& g) {
  switch (g.kind) {
    case GroupSpec::Kind::cyclic: return json("Z/" + std::to_string(g.cyclic_order));
    case GroupSpec::Kind::infinite_cyclic: return json("Z");
    case GroupSpec::Kind::table: return json{{"table", g.mult_table}};
  }
  throw input_error("unknown group kind");
}

inline GroupSpec group_spec_from_json(const json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "Z") return GroupSpec::infinite_cyclic();
    if (s.rfind("Z/", 0) == 0) {
      int n = std::stoi(s.substr(2));
      return GroupSpec::cyclic(n);
    }
    throw input_error("unknown group name: " + s);
  }
  if (j.is_object() && j.contains("table"))
    return GroupSpec::from_table(j.at("table").get<std::vector<std::vector<int>>>());
  throw input_error("group must be \"Z\", \"Z/n\" or {\"table\": ...}");
}

inline json presentation_to_json(const Presentation& p) {
  json out;
  json vs = json::array();
  for (int u = 0; u < p.vertex_count(); ++u)
    vs.push_back({{"id", u}, {"group", group_spec_to_json(p.group(u))}});
  out["vertices"] = std::move(vs);
  json es = json::array();
  for (const auto& e : p.edges) es.push_back({{"u", e.u}, {"v", e.v}, {"lambda", e.lambda}});
  out["edges"] = std::move(es);
  return out;
}

inline Presentation presentation_from_json(const json& j) {
  if (!j.contains("vertices")) throw input_error("presentation JSON needs \"vertices\"");
  std::vector<GroupSpec> groups;
  int next_id = 0;
  for (const auto& v : j.at("vertices")) {
    if (v.at("id").get<int>() != next_id++)
      throw input_error("presentation vertices must be listed as 0,1,2,...");
    groups.push_back(group_spec_from_json(v.at("group")));
  }
  std::vector<Presentation::LabelledEdge> edges;
  if (j.contains("edges"))
    for (const auto& e : j.at("edges"))
      edges.push_back({e.at("u").get<int>(), e.at("v").get<int>(), e.at("lambda").get<int>()});
  return Presentation(std::move(groups), std::move(edges));
}

inline json word_to_json(const Word& w) {
  json out = json::array();
  for (const Syllable& s : w) out.push_back({{"vertex", s.vertex}, {"element", s.element}});
  return out;
}

inline Word word_from_json(const json& j) {
  Word out;
  for (const auto& s : j)
    out.push_back({s.at("vertex").get<int>(), s.at("element").get<long long>()});
  return out;
}

inline json cycle_to_json(const Cycle& c) { return json(c.vertices); }

inline json verdict_to_json(const Verdict& v) {
  json out;
  out["holds"] = v.holds;
  out["cap_used"] = v.cap_used;
  out["interior_only"] = v.interior_only;
  if (v.witness) {
    json w;
    w["condition"] = v.witness->condition;
    w["vertices"] = v.witness->vertices;
    json cycles = json::array();
    for (const Cycle& c : v.witness->cycles) cycles.push_back(cycle_to_json(c));
    w["cycles"] = std::move(cycles);
    w["detail"] = v.witness->detail;
    out["witness"] = std::move(w);
  }
  return out;
}

inline json labels_to_json(const LabelSet& l) {
  json out = json::array();
  if (l.median) out.push_back("median");
  if (l.quasi_median) out.push_back("quasi-median");
  if (l.mediangle) out.push_back("mediangle");
  if (l.bipartite_mediangle) out.push_back("bipartite-mediangle");
  return out;
}

inline json angle_to_json(const Angle& a) {
  return json{{"numerator", a.num}, {"denominator", a.den},
              {"text", std::to_string(a.num) + "/" + std::to_string(a.den) + " pi"}};
}

inline json hyperplanes_to_json(const HyperplaneArrangement& arr) {
  json out;
  out["max_len_used"] = arr.max_len_used();
  json hs = json::array();
  for (const Hyperplane& h : arr.hyperplanes()) {
    json hj;
    hj["id"] = h.id;
    json es = json::array();
    for (const Edge& e : h.edges) es.push_back({e.u, e.v});
    hj["edges"] = std::move(es);
    json sectors = json::array();
    for (const VertexSet& s : arr.sectors(h.id).sectors) sectors.push_back(s);
    hj["sectors"] = std::move(sectors);
    auto car = arr.carrier(h.id);
    hj["carrier"] = car.carrier;
    json fibres = json::array();
    for (const VertexSet& f : car.fibres) fibres.push_back(f);
    hj["fibres"] = std::move(fibres);
    hj["degenerate"] = car.degenerate;
    hs.push_back(std::move(hj));
  }
  out["hyperplanes"] = std::move(hs);
  return out;
}

inline json angles_to_json(const HyperplaneArrangement& arr) {
  json out = json::array();
  for (int a = 0; a < arr.count(); ++a)
    for (int b = a + 1; b < arr.count(); ++b) {
      if (!arr.transverse(a, b)) continue;
      Angle ang = arr.angle(a, b);  // raises property_error on disagreement
      json e;
      e["j1"] = a;
      e["j2"] = b;
      e["angle"] = angle_to_json(ang);
      if (auto lab = dihedral_label_from_angle(ang)) e["lambda"] = *lab;
      out.push_back(std::move(e));
    }
  return out;
}

inline json bighyp_to_json(const BigHypReport& rep) {
  json out;
  out["pass"] = rep.pass();
  out["hyperplane_count"] = rep.hyperplane_count;
  out["max_len_used"] = rep.max_len_used;
  const char* items[] = {"separation", "sector-convexity", "geodesic-crossings",
                         "distance-count"};
  json per_item;
  for (const char* item : items) {
    json vi = json::array();
    for (const auto& v : rep.violations)
      if (v.item == item) {
        json w;
        w["detail"] = v.detail;
        w["vertices"] = v.vertices;
        w["hyperplane"] = v.hyperplane;
        vi.push_back(std::move(w));
      }
    per_item[item] = {{"pass", vi.empty()}, {"violations", std::move(vi)}};
  }
  out["items"] = std::move(per_item);
  return out;
}

inline json embedding_to_json(const EmbeddingReport& rep) {
  return json{{"pass", rep.pass}, {"factors", rep.factor_count}, {"witness", rep.witness}};
}

inline json cayley_ball_to_json(const CayleyBall& ball) {
  json out;
  out["graph"] = graph_to_json(ball.graph);
  out["complete"] = ball.complete;
  out["radius"] = ball.radius;
  json reps = json::array();
  for (const Word& w : ball.reps) reps.push_back(word_to_json(w));
  out["reps"] = std::move(reps);
  json labels = json::array();
  for (const Edge& e : ball.graph.edges()) {
    const Syllable& s = ball.label(e.u, e.v);
    labels.push_back({{"from", e.u}, {"to", e.v}, {"vertex", s.vertex}, {"element", s.element}});
  }
  out["labels"] = std::move(labels);
  return out;
}

inline std::string cayley_ball_to_dot(const CayleyBall& ball) {
  std::ostringstream out;
  out << "graph cayley {\n  node [shape=circle];\n";
  for (int v = 0; v < ball.graph.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : ball.graph.edges()) {
    const Syllable& s = ball.label(e.u, e.v);
    out << "  " << e.u << " -- " << e.v << " [label=\"" << s.vertex << ":" << s.element
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

inline json semidirect_to_json(const SemidirectReport& rep) {
  return json{{"pass", rep.pass},
              {"group_order", rep.group_order},
              {"coxeter_order", rep.coxeter_order},
              {"kernel_size", rep.kernel_size},
              {"failures", rep.failures}};
}

inline json rotation_report_to_json(const RotationReport& rep) {
  json out;
  out["presystem"] = rep.presystem;
  out["system"] = rep.system;
  out["free_transitive"] = rep.free_transitive;
  out["group_order"] = rep.group_order;
  json vs = json::array();
  for (const auto& v : rep.violations)
    vs.push_back({{"axiom", v.axiom},
                  {"detail", v.detail},
                  {"clique", v.clique},
                  {"subgroup", v.subgroup}});
  out["violations"] = std::move(vs);
  return out;
}

inline json decomposition_to_json(const RotationDecomposition& dec) {
  json out;
  out["group_order"] = dec.group_order;
  out["saturated_hyperplanes"] = dec.saturated_hyperplanes;
  out["tangent_hyperplanes"] = dec.tangent_hyperplanes;
  out["rot_order"] = dec.rot.size();
  out["stab_y_order"] = dec.stab_y.size();
  out["y"] = dec.y;
  out["product_ok"] = dec.product_ok;
  out["intersection_trivial"] = dec.intersection_trivial;
  out["rot_presentation_valid"] = dec.rot_presentation_valid;
  out["rot_presentation"] = presentation_to_json(dec.rot_presentation);
  return out;
}

inline GroupAction action_from_json(const json& j, std::vector<std::vector<Perm>>* subgroups) {
  GroupAction action;
  action.graph = graph_from_json(j.at("graph"));
  for (const auto& g : j.at("generators")) action.generators.push_back(g.get<Perm>());
  if (j.contains("element_cap")) action.element_cap = j.at("element_cap").get<long long>();
  if (subgroups && j.contains("subgroups")) {
    for (const auto& s : j.at("subgroups")) {
      std::vector<Perm> gens;
      for (const auto& item : s) {
        if (item.is_number()) {
          int idx = item.get<int>();
          if (idx < 0 || idx >= static_cast<int>(action.generators.size()))
            throw input_error("subgroup generator index out of range");
          gens.push_back(action.generators[idx]);
        } else {
          gens.push_back(item.get<Perm>());
        }
      }
      subgroups->push_back(std::move(gens));
    }
  }
  return action;
}

inline json action_to_json(const GroupAction& a, const std::vector<std::vector<Perm>>& subgroups) {
  json out;
  out["graph"] = graph_to_json(a.graph);
  out["generators"] = a.generators;
  json subs = json::array();
  for (const auto& s : subgroups) subs.push_back(s);
  out["subgroups"] = std::move(subs);
  out["element_cap"] = a.element_cap;
  return out;
}

}  // namespace mediangle
