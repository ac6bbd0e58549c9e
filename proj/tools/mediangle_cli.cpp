// Command-line interface for the mediangle toolkit.
//
// Exit codes: 0 = success / property holds, 1 = property fails (witness on
// stdout), 2 = usage or input error, 3 = search budget or cap exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mediangle/families.hpp"
#include "mediangle/io.hpp"
#include "mediangle/rotation.hpp"

using namespace mediangle;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error("invalid JSON in " + path + ": " + e.what());
  }
}

// Graph input: JSON when the content starts with '{', else edge-list text.
Graph read_graph(const std::string& path) {
  std::string text = read_file(path);
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{')
    return graph_from_json(json::parse(text));
  return graph_from_edge_list(text);
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

RewriteBudget make_budget(long long flag_value) {
  RewriteBudget b;
  if (const char* env = std::getenv("MEDIANGLE_BUDGET")) b.max_closure = std::stoull(env);
  if (flag_value > 0) b.max_closure = static_cast<std::size_t>(flag_value);
  return b;
}

Graph generate_basic(const std::string& family, const std::vector<std::string>& params) {
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw input_error("family " + family + " takes " + std::to_string(n) + " parameter(s)");
  };
  if (family == "hypercube") {
    need(1);
    return hypercube(std::stoi(params[0]));
  }
  if (family == "hamming") {
    if (params.empty()) throw input_error("hamming needs factor sizes");
    std::vector<int> sizes;
    for (const auto& s : params) sizes.push_back(std::stoi(s));
    return hamming(sizes);
  }
  if (family == "even_cycle") {
    need(1);
    return even_cycle(std::stoi(params[0]));
  }
  if (family == "complete") {
    need(1);
    return complete_graph(std::stoi(params[0]));
  }
  if (family == "path") {
    need(1);
    return path_graph(std::stoi(params[0]));
  }
  if (family == "tree") {
    need(2);
    TreeShape shape;
    if (params[0] == "path")
      shape = TreeShape::path;
    else if (params[0] == "star")
      shape = TreeShape::star;
    else if (params[0] == "heap")
      shape = TreeShape::heap;
    else
      throw input_error("tree shape must be path, star or heap");
    return tree(shape, std::stoi(params[1]));
  }
  if (family == "coxeter_dihedral") {
    need(1);
    return coxeter_dihedral(std::stoi(params[0]));
  }
  if (family == "coxeter_cayley") {
    need(2);
    if (params[0] != "A") throw input_error("coxeter_cayley supports type A (see cayley-ball for others)");
    return coxeter_cayley_a(std::stoi(params[1]));
  }
  if (family == "cube_minus_vertex") {
    need(0);
    return cube_minus_vertex();
  }
  if (family == "hexagonal_tiling_ball") {
    need(1);
    return hexagonal_tiling_ball(std::stoi(params[0]));
  }
  if (family == "cartesian_product") {
    need(2);
    auto parse_spec = [&](const std::string& spec) {
      std::vector<std::string> parts;
      std::stringstream ss(spec);
      std::string item;
      while (std::getline(ss, item, ':')) parts.push_back(item);
      if (parts.empty()) throw input_error("empty factor spec");
      std::string fam = parts.front();
      parts.erase(parts.begin());
      return generate_basic(fam, parts);
    };
    return cartesian_product(parse_spec(params[0]), parse_spec(params[1]));
  }
  throw input_error("unknown family: " + family);
}

struct Options {
  std::string in;
  std::string presentation;
  std::string word, word2;
  std::string cls = "all";
  std::string format = "json";
  std::string vertices_csv, xi1_csv, xi2_csv, seeds_csv;
  std::string family;
  std::vector<std::string> params;
  int radius = -1;
  int max_cycle_len = 0;
  int margin = -1;
  int basepoint = 0;
  int cap = 20000;
  long long budget = 0;
  bool presystem_only = false;
};

CheckOptions check_options(const Options& o) {
  CheckOptions c;
  c.max_len = o.max_cycle_len;
  if (o.margin >= 0) c.margin = o.margin;
  return c;
}

int cmd_recognize(const Options& o) {
  Graph g = read_graph(o.in);
  CheckOptions copts = check_options(o);
  if (o.cls == "all") {
    json out;
    out["labels"] = labels_to_json(classify(g, copts));
    out["mediangle"] = verdict_to_json(is_mediangle(g, copts));
    emit(out);
    return 0;
  }
  Verdict v;
  if (o.cls == "median")
    v = is_median(g, copts);
  else if (o.cls == "quasi-median")
    v = is_quasi_median(g, copts);
  else if (o.cls == "mediangle")
    v = is_mediangle(g, copts);
  else if (o.cls == "bipartite-mediangle") {
    v = is_mediangle(g, copts);
    if (v.holds && !g.bipartite())
      v = Verdict::fail({"bipartite", {}, {}, "graph is not bipartite"}, v.cap_used,
                        v.interior_only);
  } else {
    throw input_error("unknown class: " + o.cls);
  }
  emit(verdict_to_json(v));
  return v.holds ? 0 : 1;
}

int cmd_hyperplanes(const Options& o) {
  Graph g = read_graph(o.in);
  HyperplaneArrangement arr(g, o.max_cycle_len);
  if (o.format == "dot") {
    std::cout << graph_to_dot(g, &arr);
    return 0;
  }
  emit(hyperplanes_to_json(arr));
  return 0;
}

int cmd_angles(const Options& o) {
  Graph g = read_graph(o.in);
  HyperplaneArrangement arr(g, o.max_cycle_len);
  emit(angles_to_json(arr));
  return 0;
}

int cmd_verify_bighyp(const Options& o) {
  Graph g = read_graph(o.in);
  HyperplaneArrangement arr(g, o.max_cycle_len);
  auto rep = arr.verify_bighyp();
  json out = bighyp_to_json(rep);
  out["embedding"] = embedding_to_json(check_complete_graph_embedding(arr));
  emit(out);
  return rep.pass() && out["embedding"]["pass"].get<bool>() ? 0 : 1;
}

Word read_word(const Presentation& p, const std::string& path) {
  Word w = word_from_json(read_json(path));
  int stripped = 0;
  Word out = strip_identities(p, w, &stripped);
  if (stripped > 0)
    std::cerr << "warning: stripped " << stripped << " identity syllable(s) from " << path
              << "\n";
  return out;
}

int cmd_normal_form(const Options& o) {
  Presentation p = presentation_from_json(read_json(o.presentation));
  Word w = read_word(p, o.word);
  Word c = canonical_form(p, w, make_budget(o.budget));
  json out;
  out["canonical"] = word_to_json(c);
  out["length"] = c.size();
  emit(out);
  return 0;
}

int cmd_word_equal(const Options& o) {
  Presentation p = presentation_from_json(read_json(o.presentation));
  Word a = read_word(p, o.word);
  Word b = read_word(p, o.word2);
  bool eq = words_equal(p, a, b, make_budget(o.budget));
  emit(json{{"equal", eq}});
  return eq ? 0 : 1;
}

int cmd_cayley_ball(const Options& o) {
  Presentation p = presentation_from_json(read_json(o.presentation));
  CayleyBall ball = cayley_ball(p, o.radius, o.cap, make_budget(o.budget));
  if (o.format == "dot") {
    std::cout << cayley_ball_to_dot(ball);
    return 0;
  }
  if (o.format == "edgelist") {
    std::cout << graph_to_edge_list(ball.graph);
    return 0;
  }
  emit(cayley_ball_to_json(ball));
  return 0;
}

int cmd_coset_rep(const Options& o) {
  Presentation p = presentation_from_json(read_json(o.presentation));
  Word w = read_word(p, o.word);
  Word m = coset_min_rep(p, w, parse_int_list(o.vertices_csv), make_budget(o.budget));
  json out;
  out["representative"] = word_to_json(m);
  out["length"] = m.size();
  emit(out);
  return 0;
}

int cmd_semidirect(const Options& o) {
  Presentation p = presentation_from_json(read_json(o.presentation));
  CayleyBall ball = cayley_ball(p, -1, o.cap, make_budget(o.budget));
  BallGroup G(ball);
  auto rep = verify_semidirect(G, make_budget(o.budget));
  emit(semidirect_to_json(rep));
  return rep.pass ? 0 : 1;
}

int cmd_parabolic_intersect(const Options& o) {
  Presentation p = presentation_from_json(read_json(o.presentation));
  CayleyBall ball = cayley_ball(p, -1, o.cap, make_budget(o.budget));
  BallGroup G(ball);
  int g = o.word.empty() ? 0 : G.element_of(read_word(p, o.word));
  int h = o.word2.empty() ? 0 : G.element_of(read_word(p, o.word2));
  auto res = parabolic_intersection(G, g, parse_int_list(o.xi1_csv), h, parse_int_list(o.xi2_csv));
  json out;
  out["k"] = word_to_json(ball.reps[res.k]);
  out["xi"] = res.xi;
  out["intersection_order"] = res.elements.size();
  emit(out);
  return 0;
}

int cmd_rotation_verify(const Options& o) {
  std::vector<std::vector<Perm>> subgroups;
  GroupAction action = action_from_json(read_json(o.in), &subgroups);
  RotationReport rep = o.presystem_only ? verify_presystem(action, subgroups)
                                        : verify_rotation_system(action, subgroups);
  emit(rotation_report_to_json(rep));
  return (o.presystem_only ? rep.presystem : rep.system) ? 0 : 1;
}

int cmd_rotation_extract(const Options& o) {
  std::vector<std::vector<Perm>> subgroups;
  GroupAction action = action_from_json(read_json(o.in), &subgroups);
  auto ex = extract_periagroup(action, subgroups, o.basepoint, true, o.max_cycle_len);
  json out;
  out["presentation"] = presentation_to_json(ex.presentation);
  json cliques = json::array();
  for (const auto& c : ex.basepoint_cliques) cliques.push_back(c);
  out["basepoint_cliques"] = std::move(cliques);
  out["verified"] = ex.verified;
  emit(out);
  return ex.verified ? 0 : 1;
}

int cmd_rotation_subgroup(const Options& o) {
  GroupAction action;
  if (o.presentation.empty() && o.in.empty())
    throw input_error("rotation-subgroup needs --in (action) or --presentation (Cayley graph)");
  if (!o.presentation.empty()) {
    Presentation p = presentation_from_json(read_json(o.presentation));
    CayleyBall ball = cayley_ball(p, -1, o.cap, make_budget(o.budget));
    BallGroup G(ball);
    action = canonical_rotation_structure(G).action;
  } else {
    action = action_from_json(read_json(o.in), nullptr);
  }
  auto dec = rotation_subgroup(action, parse_int_list(o.seeds_csv), o.basepoint, o.max_cycle_len);
  emit(decomposition_to_json(dec));
  return dec.product_ok && dec.intersection_trivial && dec.rot_presentation_valid ? 0 : 1;
}

int cmd_generate(const Options& o) {
  Graph g = [&] {
    if (o.family == "graph_product_ball") {
      if (o.presentation.empty())
        throw input_error("graph_product_ball needs --presentation and --radius");
      Presentation p = presentation_from_json(read_json(o.presentation));
      return graph_product_ball(p, o.radius < 0 ? 3 : o.radius);
    }
    return generate_basic(o.family, o.params);
  }();
  if (o.format == "dot")
    std::cout << graph_to_dot(g);
  else if (o.format == "edgelist")
    std::cout << graph_to_edge_list(g);
  else
    emit(graph_to_json(g));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mediangle: combinatorial geometry of mediangle graphs and periagroups"};
  app.require_subcommand(1);
  Options o;
  int (*run)(const Options&) = nullptr;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--max-cycle-len", o.max_cycle_len,
                  "Convex-cycle length cap (default: twice the diameter)");
    c->add_option("--budget", o.budget, "Flip-closure node budget");
    c->add_option("--format", o.format, "Output format: json|dot|edgelist")
        ->check(CLI::IsMember({"json", "dot", "edgelist"}));
    c->add_option("--margin", o.margin, "Ball-mode interior margin");
  };

  auto* rec = app.add_subcommand("recognize", "Recognize median/quasi-median/mediangle graphs");
  rec->add_option("--in", o.in, "Graph file (JSON or edge list)")->required();
  rec->add_option("--class", o.cls, "median|quasi-median|mediangle|bipartite-mediangle|all");
  add_common(rec);
  rec->callback([&] { run = cmd_recognize; });

  auto* hyp = app.add_subcommand("hyperplanes", "Hyperplanes, sectors, carriers and fibres");
  hyp->add_option("--in", o.in)->required();
  add_common(hyp);
  hyp->callback([&] { run = cmd_hyperplanes; });

  auto* ang = app.add_subcommand("angles", "Exact rational angles between transverse hyperplanes");
  ang->add_option("--in", o.in)->required();
  add_common(ang);
  ang->callback([&] { run = cmd_angles; });

  auto* big = app.add_subcommand("verify-bighyp", "Hyperplane theorem verification suite");
  big->add_option("--in", o.in)->required();
  add_common(big);
  big->callback([&] { run = cmd_verify_bighyp; });

  auto* nf = app.add_subcommand("normal-form", "Canonical form of a word");
  nf->add_option("--presentation", o.presentation)->required();
  nf->add_option("--word", o.word)->required();
  add_common(nf);
  nf->callback([&] { run = cmd_normal_form; });

  auto* we = app.add_subcommand("word-equal", "Decide equality of two words");
  we->add_option("--presentation", o.presentation)->required();
  we->add_option("--word", o.word)->required();
  we->add_option("--word2", o.word2)->required();
  add_common(we);
  we->callback([&] { run = cmd_word_equal; });

  auto* cb = app.add_subcommand("cayley-ball", "Generate a Cayley ball of a periagroup");
  cb->add_option("--presentation", o.presentation)->required();
  cb->add_option("--radius", o.radius, "Ball radius (-1: whole group)");
  cb->add_option("--cap", o.cap, "Vertex cap");
  add_common(cb);
  cb->callback([&] { run = cmd_cayley_ball; });

  auto* cr = app.add_subcommand("coset-rep", "Minimal coset representative (Coxeter-only)");
  cr->add_option("--presentation", o.presentation)->required();
  cr->add_option("--word", o.word)->required();
  cr->add_option("--vertices", o.vertices_csv, "Subgroup vertices, comma separated")->required();
  add_common(cr);
  cr->callback([&] { run = cmd_coset_rep; });

  auto* sd = app.add_subcommand("semidirect", "Verify the Coxeter/graph-product decomposition");
  sd->add_option("--presentation", o.presentation)->required();
  sd->add_option("--cap", o.cap);
  add_common(sd);
  sd->callback([&] { run = cmd_semidirect; });

  auto* pi = app.add_subcommand("parabolic-intersect", "Intersect two parabolic subgroups");
  pi->add_option("--presentation", o.presentation)->required();
  pi->add_option("--word", o.word, "Conjugator of the first parabolic (word file)");
  pi->add_option("--xi1", o.xi1_csv, "First subgraph vertices")->required();
  pi->add_option("--word2", o.word2, "Conjugator of the second parabolic");
  pi->add_option("--xi2", o.xi2_csv, "Second subgraph vertices")->required();
  pi->add_option("--cap", o.cap);
  add_common(pi);
  pi->callback([&] { run = cmd_parabolic_intersect; });

  auto* rv = app.add_subcommand("rotation-verify", "Verify rotation presystem/system axioms");
  rv->add_option("--in", o.in, "Action file (JSON)")->required();
  rv->add_flag("--presystem-only", o.presystem_only);
  add_common(rv);
  rv->callback([&] { run = cmd_rotation_verify; });

  auto* re = app.add_subcommand("rotation-extract", "Extract a periagroup presentation");
  re->add_option("--in", o.in)->required();
  re->add_option("--basepoint", o.basepoint);
  add_common(re);
  re->callback([&] { run = cmd_rotation_extract; });

  auto* rs = app.add_subcommand("rotation-subgroup", "Rotation-subgroup decomposition");
  rs->add_option("--in", o.in, "Action file (JSON)");
  rs->add_option("--presentation", o.presentation, "Periagroup presentation (canonical action)");
  rs->add_option("--seeds", o.seeds_csv, "Seed hyperplane ids, comma separated");
  rs->add_option("--basepoint", o.basepoint);
  rs->add_option("--cap", o.cap);
  add_common(rs);
  rs->callback([&] { run = cmd_rotation_subgroup; });

  auto* gen = app.add_subcommand("generate", "Generate example families");
  gen->add_option("family", o.family, "Family name")->required();
  gen->add_option("params", o.params, "Family parameters");
  gen->add_option("--presentation", o.presentation, "For graph_product_ball");
  gen->add_option("--radius", o.radius, "For ball families");
  add_common(gen);
  gen->callback([&] { run = cmd_generate; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return run(o);
  } catch (const budget_error& e) {
    std::cout << json{{"error", "budget"}, {"message", e.what()}}.dump(2) << "\n";
    return 3;
  } catch (const property_error& e) {
    std::cout << json{{"error", "property"}, {"message", e.what()}}.dump(2) << "\n";
    return 1;
  } catch (const input_error& e) {
    std::cout << json{{"error", "input"}, {"message", e.what()}}.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << json{{"error", "internal"}, {"message", e.what()}}.dump(2) << "\n";
    return 2;
  }
}
