// Command-line front end: parse lists, groups and graphs from JSON
// files, dispatch the exact computations, render the results.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "mtutte/io.hpp"
#include "mtutte/roots.hpp"

namespace {

using namespace mtutte;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open input file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw input_error(std::string("malformed JSON: ") + e.what());
  }
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

std::string strata_text(const ZonotopeStratification& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.counts.size(); ++i) {
    if (i) out += ",";
    out += s.counts[i].str();
  }
  return out + "]";
}

int run_mtutte(const std::string& path, const std::string& via,
               const std::string& format) {
  CharacterList x = parse_character_list(load_json(path));
  BivarPoly m;
  if (via == "expansion") {
    m = m_tutte_expansion(x);
  } else if (via == "recursion") {
    m = m_tutte_recursive(x);
  } else if (via == "both") {
    m = m_tutte_expansion(x);
    if (m_tutte_recursive(x) != m) {
      std::cerr << "internal error: expansion and recursion disagree\n";
      return 1;
    }
  } else {
    throw input_error("--via must be expansion, recursion or both");
  }
  if (format == "json")
    emit(bivar_to_json(m));
  else
    std::cout << m.to_string() << "\n";
  return 0;
}

int run_tutte(const std::string& path, const std::string& format) {
  CharacterList x = parse_character_list(load_json(path));
  BivarPoly t = ordinary_tutte(x);
  if (format == "json")
    emit(bivar_to_json(t));
  else
    std::cout << t.to_string() << "\n";
  return 0;
}

int run_zonotope(const std::string& path, bool with_points,
                 const std::string& format) {
  CharacterList x = parse_character_list(load_json(path));
  ZonotopeStratification strat = stratification(x);
  LatticePointCount pts = lattice_points(x, with_points);
  if (format == "json") {
    json doc = stratification_to_json(strat);
    if (with_points) doc["points"] = points_to_json(pts.points);
    emit(doc);
  } else {
    std::cout << "volume " << strat.volume << "\n"
              << "points " << strat.total_in_z << "\n"
              << "strata " << strata_text(strat) << "\n";
    if (with_points)
      for (const auto& p : pts.points) {
        for (std::size_t i = 0; i < p.size(); ++i)
          std::cout << (i ? " " : "") << p[i];
        std::cout << "\n";
      }
  }
  return 0;
}

int run_toric(const std::string& path, const std::string& format) {
  CharacterList x = parse_character_list(load_json(path));
  LayerPoset poset = enumerate_layers(x);
  UniPoly chi = characteristic_polynomial(poset);
  UniPoly p = poincare_polynomial(x);
  UniPoly p_layers = poincare_polynomial_via_layers(x, poset);
  if (p != p_layers) {
    std::cerr << "internal error: Poincare routes disagree\n";
    return 1;
  }
  Int euler = euler_characteristic(x);

  std::vector<std::size_t> by_dim(poset.ambient_rank + 1, 0);
  for (const Layer& l : poset.layers) ++by_dim[l.dim];

  if (format == "json") {
    json doc = poset_to_json(poset);
    doc["chi"] = unipoly_to_json(chi);
    doc["poincare"] = unipoly_to_json(p);
    doc["euler"] = int_to_json(euler);
    if (x.group.is_lattice())
      doc["regions"] = int_to_json(compact_regions(x));
    emit(doc);
  } else {
    std::cout << "layers " << poset.layers.size() << " by_dim [";
    for (std::size_t d = 0; d < by_dim.size(); ++d)
      std::cout << (d ? "," : "") << by_dim[d];
    std::cout << "]\n"
              << "chi(q) = " << chi.to_string("q") << "\n"
              << "poincare(q) = " << p.to_string("q") << "\n"
              << "euler " << euler << "\n";
    if (x.group.is_lattice())
      std::cout << "regions " << compact_regions(x) << "\n";
  }
  return 0;
}

int run_dm(const std::string& path, const std::string& format) {
  CharacterList x = parse_character_list(load_json(path));
  HilbertSeries s = dm_hilbert_series(x);
  if (format == "json")
    emit(series_to_json(s));
  else
    std::cout << s.to_string() << "\n";
  return 0;
}

int run_graph(const std::string& path, const std::string& format) {
  LabeledGraph g = parse_graph(load_json(path));
  BivarPoly m = graph_m_tutte(g);
  if (graph_m_tutte_deletion_contraction(g) != m) {
    std::cerr << "internal error: expansion and deletion-contraction disagree\n";
    return 1;
  }
  if (format == "json") {
    json doc;
    doc["polynomial"] = bivar_to_json(m);
    doc["forests"] = int_to_json(forest_count(g));
    if (is_connected(g))
      doc["spanning_trees"] = int_to_json(spanning_tree_count(g));
    emit(doc);
  } else {
    std::cout << m.to_string() << "\n"
              << "forests " << forest_count(g) << "\n";
    if (is_connected(g))
      std::cout << "spanning_trees " << spanning_tree_count(g) << "\n";
  }
  return 0;
}

int run_roots(const std::string& type, int rank, const std::string& format) {
  RootSystemSpec spec = positive_roots(parse_root_family(type), rank);
  WeylCheck check = weyl_check(spec.family, spec.rank);
  BivarPoly m = m_tutte_expansion(spec.roots);
  if (format == "json") {
    json doc;
    doc["family"] = family_name(spec.family);
    doc["rank"] = spec.rank;
    doc["characters"] = character_list_to_json(spec.roots)["vectors"];
    doc["polynomial"] = bivar_to_json(m);
    doc["m_at_1_0"] = int_to_json(check.m_at_1_0);
    doc["weyl_order"] = int_to_json(check.weyl_order);
    doc["match"] = check.equal;
    emit(doc);
  } else {
    std::cout << "family " << family_name(spec.family) << rank << "\n";
    for (const GroupElement& e : spec.roots.elems) {
      for (std::size_t i = 0; i < e.free.size(); ++i)
        std::cout << (i ? " " : "") << e.free[i];
      std::cout << "\n";
    }
    std::cout << "M(x,y) = " << m.to_string() << "\n"
              << "M(1,0) = " << check.m_at_1_0 << "\n"
              << "weyl_order " << check.weyl_order << "\n"
              << "match " << (check.equal ? "true" : "false") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact multiplicity Tutte polynomials and their invariants"};
  app.require_subcommand(1);

  std::string file, via = "expansion", format = "text", type = "A";
  int rank = 1;
  bool with_points = false;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* c_mtutte =
      app.add_subcommand("mtutte", "multiplicity Tutte polynomial of a list");
  c_mtutte->add_option("file", file, "input JSON")->required();
  c_mtutte->add_option("--via", via, "expansion, recursion or both")
      ->check(CLI::IsMember({"expansion", "recursion", "both"}));
  add_format(c_mtutte);

  CLI::App* c_tutte =
      app.add_subcommand("tutte", "ordinary Tutte polynomial of a list");
  c_tutte->add_option("file", file, "input JSON")->required();
  add_format(c_tutte);

  CLI::App* c_zono = app.add_subcommand(
      "zonotope", "volume, lattice points and strata of the zonotope");
  c_zono->add_option("file", file, "input JSON")->required();
  c_zono->add_flag("--points", with_points, "list the lattice points");
  add_format(c_zono);

  CLI::App* c_toric = app.add_subcommand(
      "toric", "layer poset and invariants of the toric arrangement");
  c_toric->add_option("file", file, "input JSON")->required();
  add_format(c_toric);

  CLI::App* c_dm = app.add_subcommand(
      "dm", "Hilbert series of the discrete Dahmen-Micchelli space");
  c_dm->add_option("file", file, "input JSON")->required();
  add_format(c_dm);

  CLI::App* c_graph =
      app.add_subcommand("graph", "labeled-graph multiplicity Tutte polynomial");
  c_graph->add_option("file", file, "input JSON")->required();
  add_format(c_graph);

  CLI::App* c_roots =
      app.add_subcommand("roots", "positive-root arrangements of A/B/C/D");
  c_roots->add_option("--type", type, "root family A, B, C or D")->required();
  c_roots->add_option("--rank", rank, "rank of the root system")->required();
  add_format(c_roots);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  try {
    if (c_mtutte->parsed()) return run_mtutte(file, via, format);
    if (c_tutte->parsed()) return run_tutte(file, format);
    if (c_zono->parsed()) return run_zonotope(file, with_points, format);
    if (c_toric->parsed()) return run_toric(file, format);
    if (c_dm->parsed()) return run_dm(file, format);
    if (c_graph->parsed()) return run_graph(file, format);
    if (c_roots->parsed()) return run_roots(type, rank, format);
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
