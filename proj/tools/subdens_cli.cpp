#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "subdens/census.hpp"
#include "subdens/constructions.hpp"
#include "subdens/counting.hpp"
#include "subdens/embedding.hpp"
#include "subdens/errors.hpp"
#include "subdens/flaps.hpp"
#include "subdens/graph.hpp"
#include "subdens/spqrk.hpp"

using namespace subdens;
using nlohmann::json;

namespace {

struct Common {
  bool json = false;
  int threads = 1;
  std::uint64_t work_cap = kDefaultWorkCap;
  int size_cap = kDefaultFlapSizeCap;

  CountOptions count() const { return {work_cap, threads}; }
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_flag("--json", common.json, "Machine-readable output");
  cmd->add_option("--threads", common.threads, "Counting workers")->check(CLI::PositiveNumber);
  cmd->add_option("--work-cap", common.work_cap, "Backtracking node cap for counting");
  cmd->add_option("--size-cap", common.size_cap, "Vertex cap for flap searches");
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Graph load_graph(const std::string& path) { return parse_graph(slurp(path)); }
EmbeddedGraph load_embedding(const std::string& path) { return parse_embedding(slurp(path)); }

std::string str(const BigInt& value) { return value.str(); }

json separation_json(const Separation& sep) { return {{"x", sep.x.items()}, {"s", sep.s.items()}}; }

std::vector<int> parse_list(const std::string& text, std::size_t expected) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("expected a comma-separated integer list, got '" + text + "'");
    }
  }
  if (expected > 0 && out.size() != expected) {
    throw CLI::ValidationError("expected " + std::to_string(expected) + " comma-separated integers, got '" + text + "'");
  }
  return out;
}

json census_json(const SurfaceCensus& c) {
  auto entry = [](const CensusEntry& e) {
    if (e.a == 0) return json{{"constant", str(e.b)}, {"threshold", e.threshold}};
    return json{{"a", e.a}, {"b", str(e.b)}, {"threshold", e.threshold}};
  };
  json entries = json::array();
  for (const CensusEntry& e : c.entries) entries.push_back(entry(e));
  return {{"surface", c.surface}, {"g", c.genus},       {"complete", c.complete}, {"triangulations", c.triangulations},
          {"phi3", c.phi3},       {"phi4", c.phi4},     {"entries", entries},     {"total", entry(c.total)}};
}

void print_census(const SurfaceCensus& c, bool as_json) {
  if (as_json) {
    std::cout << census_json(c).dump(2) << '\n';
    return;
  }
  std::cout << format_census(c);
  std::cout << "list: " << (c.complete ? "complete (asserted)" : "partial (entries are lower bounds)") << '\n';
}

void print_check(const InequalityCheck& check, const std::string& prefix = "") {
  std::cout << prefix << "lhs=" << check.lhs << '\n'
            << prefix << "rhs=" << check.rhs << '\n'
            << prefix << "holds=" << (check.holds ? "true" : "false") << '\n';
}

json check_json(const InequalityCheck& check) {
  return {{"lhs", str(check.lhs)}, {"rhs", str(check.rhs)}, {"holds", check.holds}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subgraph densities in surfaces: flaps, counting, census"};
  app.require_subcommand(1);
  Common common;

  std::string file;
  std::string second;
  std::vector<std::string> files;
  bool flag = false;
  int number = 0;
  int genus = 0;
  int size = 0;
  std::string text;
  std::string surface;
  std::string generator;

  auto* flap = app.add_subcommand("flap-number", "Flap-number f(H)");
  flap->add_option("graph", file, "Edge-list file or -")->required();
  flap->add_flag("--family", flag, "Also print a maximum independent flap family");
  add_common(flap, common);

  auto* snp = app.add_subcommand("snp", "Strongly non-planar test");
  snp->add_option("graph", file)->required();
  add_common(snp, common);

  auto* beta = app.add_subcommand("beta", "Maximum stable set among degree <= 2 vertices of a tree");
  beta->add_option("tree", file)->required();
  add_common(beta, common);

  auto* spqrk = app.add_subcommand("spqrk", "SPQRK tree of a connected graph");
  spqrk->add_option("graph", file)->required();
  add_common(spqrk, common);

  auto* count = app.add_subcommand("count", "Copies of PATTERN in HOST, or cliques of HOST");
  count->add_option("graphs", files, "PATTERN HOST, or HOST with --clique/--all-cliques")->required();
  count->add_option("--clique", number, "Count s-cliques");
  count->add_flag("--all-cliques", flag, "Clique counts for every s and the total");
  add_common(count, common);

  auto* hom = app.add_subcommand("hom", "Homomorphisms from PATTERN to HOST");
  hom->add_option("pattern", file)->required();
  hom->add_option("host", second)->required();
  hom->add_flag("--injective", flag, "Count injective homomorphisms");
  add_common(hom, common);

  auto* census = app.add_subcommand("census", "Clique table from a list of irreducible triangulations");
  census->add_option("embeddings", files, "Embedding files")->required();
  census->add_option("--surface", surface, "Surface name for the report")->default_val("surface");
  census->add_flag("--complete", flag, "Assert that the list is every irreducible triangulation");
  add_common(census, common);

  auto* table = app.add_subcommand("table", "Clique table for a surface with built-in data");
  table->add_option("--surface", surface, "sphere or N1")->required()->check(CLI::IsMember({"sphere", "N1"}));
  table->add_option("--with", files, "Further irreducible triangulations of the surface");
  table->add_flag("--complete", flag, "Assert that the list is every irreducible triangulation");
  add_common(table, common);

  auto* grow = app.add_subcommand("grow", "Split facial triangles until n vertices");
  grow->add_option("embedding", file)->required();
  grow->add_option("--n", number, "Target vertex count")->required();
  add_common(grow, common);

  auto* construct = app.add_subcommand("construct", "Extremal constructions");
  construct->add_option("kind", text, "lower-bound or tree-blowup")->required()->check(CLI::IsMember({"lower-bound", "tree-blowup"}));
  construct->add_option("graph", file)->required();
  construct->add_option("--n", number, "Vertex budget")->required();
  add_common(construct, common);

  double bound_n = 0;
  auto* bounds_cmd = app.add_subcommand("bounds", "Explicit lower and upper bounds on C(K_s, surface, n)");
  bounds_cmd->add_option("--genus", genus, "Euler genus")->required();
  bounds_cmd->add_option("--s", size, "Clique size (>= 3)")->required();
  bounds_cmd->add_option("--n", bound_n, "Vertex count")->required();
  add_common(bounds_cmd, common);

  auto* inequality = app.add_subcommand("inequality", "Goodman, genus-triangle, or facial-triangle inequality");
  inequality->add_option("kind", text, "goodman, genus-triangle, or facial-triangle (takes an embedding)")
      ->required()
      ->check(CLI::IsMember({"goodman", "genus-triangle", "facial-triangle"}));
  inequality->add_option("input", file, "Edge-list file, or embedding file for facial-triangle")->required();
  inequality->add_option("--genus", genus, "Euler genus (genus-triangle)");
  add_common(inequality, common);

  std::string sizes_text;
  auto* scaling = app.add_subcommand("scaling", "Log-log slope of copy counts over generated hosts");
  scaling->add_option("--graph", file)->required();
  scaling->add_option("--generator", generator, "lower-bound, tree-blowup, split-growth, padding")
      ->required()
      ->check(CLI::IsMember({"lower-bound", "tree-blowup", "split-growth", "padding"}));
  scaling->add_option("--sizes", sizes_text, "Comma-separated increasing sizes")->required();
  add_common(scaling, common);

  auto* genus_cmd = app.add_subcommand("genus", "Euler genus of an embedding, or minimum genus of a graph");
  genus_cmd->add_option("input", file)->required();
  genus_cmd->add_flag("--search", flag, "Treat input as an edge list and search all rotation systems");
  add_common(genus_cmd, common);

  auto* faces = app.add_subcommand("faces", "Facial walks of an embedding");
  faces->add_option("embedding", file)->required();
  add_common(faces, common);

  auto* contract = app.add_subcommand("contract", "Contract a reducible edge");
  contract->add_option("embedding", file)->required();
  contract->add_option("--edge", text, "v,w (w is merged into v)")->required();
  add_common(contract, common);

  std::string triangle;
  auto* split = app.add_subcommand("split", "Split a path x,v,y or a triangular face");
  split->add_option("embedding", file)->required();
  auto* path_opt = split->add_option("--path", text, "x,v,y");
  auto* tri_opt = split->add_option("--triangle", triangle, "a,b,c");
  path_opt->excludes(tri_opt);
  add_common(split, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*flap) {
      const Graph h = load_graph(file);
      const FlapFamily result = max_flap_family(h, common.size_cap);
      if (common.json) {
        json out{{"flap_number", result.number}};
        if (flag) {
          out["family"] = json::array();
          for (const Separation& sep : result.family) out["family"].push_back(separation_json(sep));
        }
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << result.number << '\n';
        if (flag) {
          for (const Separation& sep : result.family) std::cout << format_separation(sep) << '\n';
        }
      }
    } else if (*snp) {
      const bool value = is_strongly_non_planar(load_graph(file));
      if (common.json) {
        std::cout << json{{"strongly_non_planar", value}}.dump(2) << '\n';
      } else {
        std::cout << (value ? "true" : "false") << '\n';
      }
    } else if (*beta) {
      const TreeBeta result = tree_beta(load_graph(file));
      if (common.json) {
        std::cout << json{{"beta", result.beta}, {"stable", result.stable.items()}}.dump(2) << '\n';
      } else {
        std::cout << result.beta << '\n';
      }
    } else if (*spqrk) {
      const SpqrkTree tree = spqrk_build(load_graph(file));
      if (common.json) {
        json nodes = json::array();
        for (const SpqrkNode& node : tree.nodes) {
          json edges = json::array();
          for (const SpqrkEdge& e : node.edges) edges.push_back({{"u", Edge(e.u, e.v).u}, {"v", Edge(e.u, e.v).v}, {"real", e.real}});
          nodes.push_back({{"kind", std::string(1, node_kind_letter(node.kind))}, {"vertices", node.vertices.items()}, {"edges", edges}});
        }
        json links = json::array();
        for (const auto& [a, b] : tree.links) links.push_back({a, b});
        std::cout << json{{"nodes", nodes}, {"links", links}}.dump(2) << '\n';
      } else {
        std::cout << format_spqrk(tree);
      }
    } else if (*count) {
      const bool clique_mode = count->count("--clique") > 0;
      if (clique_mode && flag) throw CLI::ValidationError("--clique and --all-cliques are exclusive");
      if ((clique_mode || flag) != (files.size() == 1) || files.size() > 2) {
        throw CLI::ValidationError("count takes PATTERN HOST, or HOST with --clique/--all-cliques");
      }
      if (clique_mode) {
        const BigInt value = count_cliques(load_graph(files[0]), number);
        if (common.json) {
          std::cout << json{{"s", number}, {"cliques", str(value)}}.dump(2) << '\n';
        } else {
          std::cout << value << '\n';
        }
      } else if (flag) {
        const Graph g = load_graph(files[0]);
        const auto profile = clique_profile(g);
        const BigInt total = total_cliques(g);
        if (common.json) {
          json counts = json::array();
          for (const BigInt& c : profile) counts.push_back(str(c));
          std::cout << json{{"cliques", counts}, {"total", str(total)}}.dump(2) << '\n';
        } else {
          for (std::size_t s = 0; s < profile.size(); ++s) std::cout << "s=" << s << ' ' << profile[s] << '\n';
          std::cout << "total " << total << '\n';
        }
      } else {
        const BigInt value = count_copies(load_graph(files[0]), load_graph(files[1]), common.count());
        if (common.json) {
          std::cout << json{{"copies", str(value)}}.dump(2) << '\n';
        } else {
          std::cout << value << '\n';
        }
      }
    } else if (*hom) {
      const Graph h = load_graph(file);
      const Graph g = load_graph(second);
      const BigInt value = flag ? count_injective_hom(h, g, common.count()) : count_hom(h, g, common.count());
      if (common.json) {
        std::cout << json{{flag ? "injective_homomorphisms" : "homomorphisms", str(value)}}.dump(2) << '\n';
      } else {
        std::cout << value << '\n';
      }
    } else if (*census) {
      std::vector<EmbeddedGraph> list;
      for (const std::string& path : files) list.push_back(load_embedding(path));
      print_census(surface_table(surface, list, flag), common.json);
    } else if (*table) {
      std::vector<EmbeddedGraph> list = builtin_irreducible(surface);
      for (const std::string& path : files) list.push_back(load_embedding(path));
      print_census(surface_table(surface, list, surface == "sphere" || flag), common.json);
    } else if (*grow) {
      const EmbeddedGraph grown = split_growth(load_embedding(file), number);
      std::cout << serialize_embedding(grown);
    } else if (*construct) {
      const Graph h = load_graph(file);
      const Graph out = text == "lower-bound" ? lower_bound_graph(h, number) : tree_blowup(h, number);
      std::cout << serialize_graph(out);
    } else if (*bounds_cmd) {
      const Bounds b = bounds(genus, size, bound_n);
      if (common.json) {
        std::cout << json{{"g", genus}, {"s", size}, {"n", bound_n}, {"lower", b.lower}, {"upper", b.upper},
                          {"lower_applies", b.lower_applies}, {"lower_condition", b.lower_condition}}
                         .dump(2)
                  << '\n';
      } else {
        std::cout << std::setprecision(17) << "lower=" << b.lower << '\n'
                  << "upper=" << b.upper << '\n'
                  << "lower_applies=" << (b.lower_applies ? "true" : "false") << '\n'
                  << "lower_condition=" << b.lower_condition << '\n';
      }
    } else if (*inequality) {
      if (text == "facial-triangle") {
        const InequalityCheck check = check_facial_triangle_bound(load_embedding(file));
        if (common.json) {
          std::cout << check_json(check).dump(2) << '\n';
        } else {
          print_check(check);
        }
      } else if (text == "goodman") {
        const InequalityCheck check = check_goodman(load_graph(file));
        if (common.json) {
          std::cout << check_json(check).dump(2) << '\n';
        } else {
          print_check(check);
        }
      } else {
        const GenusTriangleCheck check = check_genus_triangle_bound(load_graph(file), genus);
        if (common.json) {
          json out = check_json(check.triangles);
          out["hom"] = check_json(check.homs);
          std::cout << out.dump(2) << '\n';
        } else {
          print_check(check.triangles);
          print_check(check.homs, "hom_");
        }
      }
    } else if (*scaling) {
      const ScalingReport report =
          scaling_exponent(load_graph(file), parse_list(sizes_text, 0), parse_generator(generator), common.count());
      if (common.json) {
        json points = json::array();
        for (const ScalingPoint& p : report.points) points.push_back({{"n", p.n}, {"host_order", p.host_order}, {"copies", str(p.copies)}});
        std::cout << std::setprecision(17) << json{{"generator", generator}, {"points", points}, {"slope", report.slope}}.dump(2) << '\n';
      } else {
        for (const ScalingPoint& p : report.points) {
          std::cout << "n=" << p.n << " host=" << p.host_order << " copies=" << p.copies << '\n';
        }
        std::cout << std::setprecision(17) << "slope=" << report.slope << '\n';
      }
    } else if (*genus_cmd) {
      if (flag) {
        const GenusSearchResult result = min_genus_search(load_graph(file));
        if (common.json) {
          std::cout << json{{"genus", result.genus}, {"witness", serialize_embedding(result.witness)}}.dump(2) << '\n';
        } else {
          std::cout << result.genus << '\n' << serialize_embedding(result.witness);
        }
      } else {
        const int g = euler_genus(load_embedding(file));
        if (common.json) {
          std::cout << json{{"genus", g}}.dump(2) << '\n';
        } else {
          std::cout << g << '\n';
        }
      }
    } else if (*faces) {
      const auto walks = trace_faces(load_embedding(file));
      if (common.json) {
        json out = json::array();
        for (const FacialWalk& w : walks) out.push_back(w.vertices);
        std::cout << json{{"faces", out}}.dump(2) << '\n';
      } else {
        for (const FacialWalk& w : walks) {
          for (std::size_t i = 0; i < w.vertices.size(); ++i) std::cout << (i ? " " : "") << w.vertices[i];
          std::cout << '\n';
        }
      }
    } else if (*contract) {
      const auto vw = parse_list(text, 2);
      std::cout << serialize_embedding(contract_reducible(load_embedding(file), vw[0], vw[1]));
    } else if (*split) {
      const EmbeddedGraph eg = load_embedding(file);
      if (!triangle.empty()) {
        const auto t = parse_list(triangle, 3);
        std::cout << serialize_embedding(split_triangle(eg, t[0], t[1], t[2]));
      } else if (!text.empty()) {
        const auto p = parse_list(text, 3);
        std::cout << serialize_embedding(split_path(eg, p[0], p[1], p[2]));
      } else {
        throw CLI::ValidationError("split needs --path or --triangle");
      }
    }
  } catch (const CLI::Error& e) {
    std::cerr << "subdens: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "subdens: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "subdens: internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
