// Command-line front end. Exit status: 0 success, 1 invalid input, 2 domain
// error (unbalanced game where a balanced one is required, budget exceeded).

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "bg/adjacency.hpp"
#include "bg/balance.hpp"
#include "bg/cones.hpp"
#include "bg/core.hpp"
#include "bg/counting.hpp"
#include "bg/game_io.hpp"
#include "bg/hamilton.hpp"
#include "bg/mbc.hpp"
#include "bg/sampler.hpp"
#include "bg/vertices.hpp"

namespace {

using bg::Coalition;
using json = nlohmann::ordered_json;

json rational_list(const std::vector<bg::Rational>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(bg::to_string(x));
  return out;
}

json coalition_list(const std::vector<Coalition>& sets) {
  json out = json::array();
  for (Coalition s : sets) out.push_back(s.to_key());
  return out;
}

json collection_json(const bg::BalancedCollection& b) {
  json out;
  out["sets"] = coalition_list(b.sets);
  out["weights"] = rational_list(b.weights);
  return out;
}

std::string csv_sets(const std::vector<Coalition>& sets) {
  std::string out;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    if (k) out += ' ';
    out += sets[k].to_compact();
  }
  return out;
}

// --- subcommands ---------------------------------------------------------

int run_mbc(int n, const std::string& format, bool allow_large) {
  const auto list = bg::enumerate_mbc(n, allow_large);
  if (format == "csv") {
    std::cout << "index,sets,weights\n";
    for (std::size_t k = 0; k < list.size(); ++k) {
      std::string weights;
      for (std::size_t j = 0; j < list[k].weights.size(); ++j) {
        if (j) weights += ' ';
        weights += bg::to_string(list[k].weights[j]);
      }
      std::cout << k << ',' << csv_sets(list[k].sets) << ',' << weights << '\n';
    }
    return 0;
  }
  json out;
  out["n"] = n;
  out["count"] = list.size();
  out["collections"] = json::array();
  for (const auto& b : list) out["collections"].push_back(collection_json(b));
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_check(const std::string& path, const std::string& route, bool allow_large) {
  const bg::Game v = bg::load_game_file(path);
  const bg::BalancednessVerdict verdict = route == "mbc" ? bg::is_balanced_mbc(v, allow_large) : bg::is_balanced_lp(v);
  if (verdict.balanced) {
    std::cout << "balanced\n";
    std::cout << "witness " << rational_list(verdict.witness->x).dump() << '\n';
    return 0;
  }
  std::cout << "not balanced\n";
  std::cout << "violation " << collection_json(*verdict.violation).dump() << '\n';
  std::cout << "slack " << bg::to_string(verdict.slack) << '\n';
  return 2;
}

int run_core(const std::string& path) {
  const bg::Game v = bg::load_game_file(path);
  const bg::CoreDescription core = bg::core_vertices(v);
  json out;
  out["vertices"] = json::array();
  for (const auto& x : core.vertices) out["vertices"].push_back(rational_list(x.x));
  out["dimension"] = core.dimension;
  out["effective"] = coalition_list(core.effective);
  out["point_core"] = core.dimension == 0;
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_rays(int n, const std::string& ambient_name, const std::string& alpha_text, const std::string& format) {
  const bg::Ambient ambient = ambient_name == "bga" ? bg::Ambient::bga : bg::Ambient::bg;
  const auto rays = ambient == bg::Ambient::bg ? bg::extremal_rays_bg(n) : bg::extremal_rays_bga(n);
  std::vector<Coalition> coords = bg::proper_coalitions(n);
  if (ambient == bg::Ambient::bg) coords.push_back(Coalition::grand(n));
  auto kind_name = [](bg::RayKind k) {
    switch (k) {
      case bg::RayKind::lineality_plus: return "lineality+";
      case bg::RayKind::lineality_minus: return "lineality-";
      case bg::RayKind::r_set: return "r_S";
      case bg::RayKind::r_player: return "r_i";
    }
    return "";
  };
  if (format == "csv") {
    std::cout << "name,kind";
    for (Coalition s : coords) std::cout << ',' << s.to_compact();
    std::cout << '\n';
    for (const auto& r : rays) {
      std::cout << r.name() << ',' << kind_name(r.kind);
      for (const auto& x : bg::coordinates(r.direction, ambient)) std::cout << ',' << bg::to_string(x);
      std::cout << '\n';
    }
    return 0;
  }
  json out;
  out["n"] = n;
  out["ambient"] = ambient_name;
  out["coordinates"] = coalition_list(coords);
  if (ambient == bg::Ambient::bga) {
    // BG_alpha(n) = alpha u_{n} + cone generated by the rays below
    const bg::Rational alpha = bg::parse_rational(alpha_text);
    const bg::Game apex = bg::unanimity(n, Coalition::singleton(n)) * alpha;
    out["alpha"] = bg::to_string(alpha);
    out["apex"] = rational_list(bg::coordinates(apex, ambient));
  }
  out["count"] = rays.size();
  out["rays"] = json::array();
  for (const auto& r : rays) {
    json item;
    item["name"] = r.name();
    item["kind"] = kind_name(r.kind);
    item["direction"] = rational_list(bg::coordinates(r.direction, ambient));
    out["rays"].push_back(item);
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_facets(int n, const std::string& ambient_name) {
  const bg::Ambient ambient = ambient_name == "bga" ? bg::Ambient::bga : bg::Ambient::bg;
  const bg::IncidenceTable table = bg::incidence_table(n, ambient);
  std::cout << "facet";
  for (const auto& r : table.rays) std::cout << ',' << r.name();
  std::cout << '\n';
  for (std::size_t f = 0; f < table.facets.size(); ++f) {
    std::cout << '"' << table.facets[f].label() << '"';
    for (bool cell : table.incident[f]) std::cout << ',' << (cell ? 1 : 0);
    std::cout << '\n';
  }
  return 0;
}

int run_vertices(int n, const std::string& format, bool allow_large) {
  const auto vertices = bg::enumerate_vertices(n, allow_large);
  const auto coords = bg::proper_coalitions(n);
  if (format == "csv") {
    std::cout << "index,name";
    for (Coalition s : coords) std::cout << ',' << s.to_compact();
    std::cout << '\n';
    for (std::size_t k = 0; k < vertices.size(); ++k) {
      std::cout << k << ',' << vertices[k].name();
      for (Coalition s : coords) std::cout << ',' << (vertices[k].contains(s) ? 1 : 0);
      std::cout << '\n';
    }
    return 0;
  }
  json out;
  out["n"] = n;
  out["count"] = vertices.size();
  out["vertices"] = json::array();
  for (const auto& d : vertices) {
    json item;
    item["name"] = d.name();
    item["collection"] = coalition_list(d.sets());
    out["vertices"].push_back(item);
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_sample(int n, int count, std::uint64_t seed) {
  bg::Rng rng(seed);
  for (int k = 0; k < count; ++k) {
    const bg::VertexCollection d = bg::sample_vertex(n, rng);
    std::cout << '[';
    for (std::size_t j = 0; j < d.size(); ++j) std::cout << (j ? " " : "") << '[' << d.sets()[j].to_key() << ']';
    std::cout << "]\n";
  }
  return 0;
}

int run_adjacency(int n, const std::string& format, bool allow_large) {
  const bg::AdjacencyGraph g = bg::adjacency_graph(n, allow_large);
  if (format == "dot") {
    std::cout << "graph adjacency {\n";
    for (std::size_t k = 0; k < g.vertices.size(); ++k) {
      std::cout << "  " << k << " [label=\"" << g.vertices[k].name() << "\"];\n";
    }
    for (auto [a, b] : g.edges) std::cout << "  " << a << " -- " << b << ";\n";
    std::cout << "}\n";
    return 0;
  }
  json out;
  out["n"] = n;
  out["vertices"] = json::array();
  for (const auto& d : g.vertices) {
    json item;
    item["name"] = d.name();
    item["collection"] = coalition_list(d.sets());
    out["vertices"].push_back(item);
  }
  out["edges"] = json::array();
  for (auto [a, b] : g.edges) out["edges"].push_back({a, b});
  std::cout << out.dump(2) << '\n';
  return 0;
}

int resolve_vertex(const bg::AdjacencyGraph& g, const std::string& id) {
  for (std::size_t k = 0; k < g.vertices.size(); ++k) {
    if (g.vertices[k].name() == id) return static_cast<int>(k);
  }
  std::size_t used = 0;
  int index = -1;
  try {
    index = std::stoi(id, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != id.size() || index < 0 || index >= static_cast<int>(g.vertices.size())) {
    throw std::invalid_argument("unknown vertex '" + id + "' (use an index or a name such as u_123 or d_2,23)");
  }
  return index;
}

int run_hamilton(int n, const std::string& from_id, const std::string& to_id, bool allow_large) {
  const bg::AdjacencyGraph g = bg::adjacency_graph(n, allow_large);
  const int from = resolve_vertex(g, from_id), to = resolve_vertex(g, to_id);
  const auto path = bg::hamiltonian_path(g, from, to);
  if (!path) {
    std::cout << "no hamiltonian path\n";
    return 2;
  }
  for (std::size_t k = 0; k < path->size(); ++k) {
    std::cout << (k ? " -> " : "") << g.vertices[(*path)[k]].name();
  }
  std::cout << '\n';
  return 0;
}

int run_counts(int n) {
  const bg::CountTable c = bg::count_table(n);
  for (int k = 1; k <= n; ++k) {
    std::cout << "t_" << k << " = " << bg::to_string(c.t[k]) << '\n';
    std::cout << "s_" << k << " = " << bg::to_string(c.s[k]) << '\n';
    std::cout << "f_" << k << " = " << bg::to_string(c.f[k]) << '\n';
    std::cout << "b_" << k << " = " << bg::to_string(c.b[k]) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Balanced TU-games: collections, cores, cones and the polytope BG_+(n)"};
  app.require_subcommand(1);

  int n = 3;
  std::string format;
  bool allow_large = false;
  std::string path, route = "lp", ambient = "bg", alpha = "1", from, to;
  int count = 1;
  std::uint64_t seed = 0;

  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", n, "number of players")->required()->check(CLI::Range(1, 16)); };
  auto add_large = [&](CLI::App* sub) { sub->add_flag("--allow-large", allow_large, "permit the next larger enumeration"); };

  auto* mbc = app.add_subcommand("mbc", "minimal balanced collections with weights");
  add_n(mbc);
  add_large(mbc);
  mbc->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}))->default_val("json");

  auto* check = app.add_subcommand("check", "balancedness of a game file");
  check->add_option("game", path, "game JSON file")->required();
  check->add_option("--route", route, "lp|mbc")->check(CLI::IsMember({"lp", "mbc"}))->default_val("lp");
  add_large(check);

  auto* core = app.add_subcommand("core", "core vertices, dimension and effective coalitions");
  core->add_option("game", path, "game JSON file")->required();

  auto* rays = app.add_subcommand("rays", "extremal rays of BG(n) or BG_alpha(n)");
  add_n(rays);
  rays->add_option("--ambient", ambient, "bg|bga")->check(CLI::IsMember({"bg", "bga"}))->default_val("bg");
  rays->add_option("--alpha", alpha, "v(N) for BG_alpha (rational)")->default_val("1");
  rays->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}))->default_val("json");

  auto* facets = app.add_subcommand("facets", "facet/ray incidence table as CSV");
  add_n(facets);
  facets->add_option("--ambient", ambient, "bg|bga")->check(CLI::IsMember({"bg", "bga"}))->default_val("bg");

  auto* vertices = app.add_subcommand("vertices", "vertices of BG_+(n)");
  add_n(vertices);
  add_large(vertices);
  vertices->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}))->default_val("json");

  auto* sample = app.add_subcommand("sample", "uniform random vertices of BG_+(n)");
  add_n(sample);
  sample->add_option("--count", count, "number of samples")->default_val(1)->check(CLI::NonNegativeNumber);
  sample->add_option("--seed", seed, "random seed")->required();

  auto* adjacency = app.add_subcommand("adjacency", "adjacency graph of BG_+(n)");
  add_n(adjacency);
  add_large(adjacency);
  adjacency->add_option("--format", format, "dot|json")->check(CLI::IsMember({"dot", "json"}))->default_val("dot");

  auto* hamilton = app.add_subcommand("hamilton", "Hamiltonian path between two vertices");
  add_n(hamilton);
  add_large(hamilton);
  hamilton->add_option("--from", from, "vertex index or name")->required();
  hamilton->add_option("--to", to, "vertex index or name")->required();

  auto* counts = app.add_subcommand("counts", "exact t_k, s_k, f_k, b_k for k <= n");
  counts->add_option("--n", n, "largest k")->required()->check(CLI::Range(1, bg::kCountCap));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*mbc) return run_mbc(n, format, allow_large);
    if (*check) return run_check(path, route, allow_large);
    if (*core) return run_core(path);
    if (*rays) return run_rays(n, ambient, alpha, format);
    if (*facets) return run_facets(n, ambient);
    if (*vertices) return run_vertices(n, format, allow_large);
    if (*sample) return run_sample(n, count, seed);
    if (*adjacency) return run_adjacency(n, format, allow_large);
    if (*hamilton) return run_hamilton(n, from, to, allow_large);
    if (*counts) return run_counts(n);
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
