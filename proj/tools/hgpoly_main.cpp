// Command-line front-end: parse a hypergraph, run one computation, print one
// JSON document.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hgpoly/families.hpp"
#include "hgpoly/geometry.hpp"
#include "hgpoly/hopf.hpp"
#include "hgpoly/json_io.hpp"

namespace {

using hgpoly::Hypergraph;
using json = nlohmann::json;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) {
    throw hgpoly::InputError("cannot open input file: " + path);
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const json& j, bool pretty) {
  if (pretty) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << j.dump() << "\n";
  }
}

json orientations_report(const Hypergraph& g) {
  long long total = 0;
  json acyclic = json::array();
  hgpoly::for_each_orientation(g.edges, [&](const hgpoly::Orientation& o) {
    ++total;
    if (hgpoly::is_acyclic(g, o)) {
      json heads = json::array();
      for (hgpoly::Mask h : o.heads) heads.push_back(hgpoly::to_vertices(h));
      acyclic.push_back(heads);
    }
  });
  return json{{"total", total},
              {"acyclic_count", acyclic.size()},
              {"acyclic", acyclic}};
}

// Cross-validation of every oracle-equivalence invariant on one input.
// Returns a report; `ok` false means some engines disagreed.
json run_check(const Hypergraph& g, int max_n) {
  json report;
  bool ok = true;
  auto record = [&](const std::string& name, bool pass, json detail = json()) {
    report[name] = pass;
    if (!pass) {
      ok = false;
      if (!detail.is_null()) report[name + "_diff"] = detail;
    }
  };

  hgpoly::AntipodeResult takeuchi = hgpoly::takeuchi_antipode(g, max_n);
  hgpoly::AntipodeResult oriented = hgpoly::orientation_antipode(g, max_n);
  hgpoly::AntipodeResult faces = hgpoly::antipode_from_faces(g, max_n);
  record("takeuchi_vs_orientation", takeuchi == oriented,
         json{{"takeuchi", to_json(takeuchi)}, {"orientation", to_json(oriented)}});
  record("takeuchi_vs_faces", takeuchi == faces,
         json{{"takeuchi", to_json(takeuchi)}, {"faces", to_json(faces)}});

  long long euler = 0;
  bool omega_psi = true;
  auto all_faces = hgpoly::enumerate_faces(g, max_n);
  for (const hgpoly::FaceKey& key : all_faces) {
    euler += (key.dim % 2 == 0) ? 1 : -1;
    if (!(hgpoly::omega(g, hgpoly::psi(g, key)) == key)) omega_psi = false;
  }
  record("euler", euler == 1, json{{"sum", euler}});
  record("omega_psi", omega_psi);

  if (hgpoly::is_hyperforest(g)) {
    bool coeffs = true;
    for (const auto& [flat, c] : takeuchi.coefficients) {
      if (c != hgpoly::hyperforest_coefficient(hgpoly::contract(g, flat)))
        coeffs = false;
    }
    record("hyperforest_coefficients", coeffs);
  }

  // Chain-shaped inputs (every edge an initial segment reaching n) also have
  // a closed-form f-vector to compare against.
  bool chain = !g.edges.empty();
  std::vector<int> sizes;
  for (hgpoly::Mask e : g.edges) {
    if (e != hgpoly::full_mask(hgpoly::popcount(e))) chain = false;
    sizes.push_back(hgpoly::popcount(e));
  }
  if (chain && sizes.back() == g.n) {
    hgpoly::FVector closed =
        hgpoly::ps_f_vector(hgpoly::make_ps_spec(g.n, sizes));
    hgpoly::FVector enumerated = hgpoly::f_vector(g, max_n);
    record("ps_f_vector", closed == enumerated,
           json{{"closed_form", to_json(closed)}, {"enumerated", to_json(enumerated)}});
  }

  report["ok"] = ok;
  return report;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw hgpoly::InputError("bad integer in list: " + item);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergraphic polytope and hypergraph antipode toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // shared flags may follow the verb

  std::string input;
  int max_n = hgpoly::kDefaultEnumerationLimit;
  bool pretty = false;
  app.add_option("--input", input, "hypergraph JSON file, or - for stdin");
  app.add_option("--max-n", max_n, "enumeration bound on the vertex count");
  app.add_flag("--pretty", pretty, "indent the JSON output");

  auto* antipode = app.add_subcommand("antipode", "antipode coefficients by flat");
  auto* faces = app.add_subcommand("faces", "all faces of P_G");
  auto* fvector = app.add_subcommand("fvector", "face counts by dimension");
  auto* simple = app.add_subcommand("simple", "is P_G a simple polytope");
  auto* skeleton = app.add_subcommand("skeleton", "vertices and edges of P_G");
  auto* volume = app.add_subcommand("volume", "normalized volume of P_G");
  auto* orient = app.add_subcommand("orientations", "acyclic orientations");
  auto* check = app.add_subcommand("check", "cross-validate every engine");

  auto* ps = app.add_subcommand("ps", "generalized Pitman-Stanley polytope");
  int ps_n = 0;
  std::string ps_set;
  ps->add_option("--n", ps_n, "vertex count")->required();
  ps->add_option("--set", ps_set, "comma-separated generators, max must be n")->required();

  auto* hyperperm = app.add_subcommand("hyperperm", "hyper-permutahedron");
  int hp_n = 0, hp_k = 0;
  hyperperm->add_option("--n", hp_n, "vertex count")->required();
  hyperperm->add_option("--k", hp_k, "edge size")->required();

  try {
    app.parse(argc, argv);

    if (ps->parsed()) {
      hgpoly::PSSpec spec = hgpoly::make_ps_spec(ps_n, parse_int_list(ps_set));
      Hypergraph g = hgpoly::ps_hypergraph(spec);
      emit(json{{"f_vector", to_json(hgpoly::f_vector(g, max_n))},
                {"volume", hgpoly::normalized_volume(g)},
                {"simple", hgpoly::is_simple(g, max_n)}},
           pretty);
      return 0;
    }
    if (hyperperm->parsed()) {
      Hypergraph g = hgpoly::hyperperm_hypergraph(hp_n, hp_k);
      emit(json{{"f_vector", to_json(hgpoly::f_vector(g, max_n))},
                {"simple", hgpoly::is_simple(g, max_n)}},
           pretty);
      return 0;
    }

    if (input.empty()) {
      throw hgpoly::InputError("this verb needs --input <path|->");
    }
    Hypergraph g = hgpoly::hypergraph_from_string(read_input(input));
    hgpoly::check_enumeration_limit(g.n, max_n);

    if (antipode->parsed()) {
      emit(to_json(hgpoly::orientation_antipode(g, max_n)), pretty);
    } else if (faces->parsed()) {
      json out = json::array();
      for (const auto& key : hgpoly::enumerate_faces(g, max_n)) {
        out.push_back(to_json(key));
      }
      emit(out, pretty);
    } else if (fvector->parsed()) {
      emit(to_json(hgpoly::f_vector(g, max_n)), pretty);
    } else if (simple->parsed()) {
      emit(json{{"simple", hgpoly::is_simple(g, max_n)}}, pretty);
    } else if (skeleton->parsed()) {
      emit(to_json(g, hgpoly::one_skeleton(g, max_n)), pretty);
    } else if (volume->parsed()) {
      emit(json{{"volume", hgpoly::normalized_volume(g)}}, pretty);
    } else if (orient->parsed()) {
      emit(orientations_report(g), pretty);
    } else if (check->parsed()) {
      json report = run_check(g, max_n);
      emit(report, pretty);
      return report["ok"].get<bool>() ? 0 : 1;
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  } catch (const hgpoly::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const hgpoly::EnumerationLimitError& e) {
    std::cerr << "enumeration bound exceeded: " << e.what() << "\n";
    return 3;
  } catch (const hgpoly::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
