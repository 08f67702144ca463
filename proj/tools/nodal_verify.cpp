// nodal-verify: command-line front end for the verification suites.
// Exit status: 0 all checks pass, 1 a check failed, 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nodal/core/poly_io.hpp"
#include "nodal/report/suite.hpp"

#ifndef NODAL_DEFAULT_FIXTURES
#define NODAL_DEFAULT_FIXTURES "fixtures"
#endif

namespace fs = std::filesystem;
using nlohmann::json;
using namespace nodal;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::uint64_t seed = kDefaultSeed;
  std::string output;
  bool json_stdout = false;

  std::string target;  // verify: "all"
  std::string fixtures = NODAL_DEFAULT_FIXTURES;
  std::string group;
  std::string module = "P";
  std::string hyperplane = "1,2,4,3,5,7";
  std::vector<std::uint32_t> primes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};
  bool check = false;
  std::string object;
  std::uint32_t q = 0;
  std::string poly_file;
  std::string point;
  unsigned trunc = 8;
  std::string model;
};

struct Outcome {
  json result;
  bool passed = true;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Rational parse_rational(const std::string& s) {
  try {
    Rational r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw UsageError("not a rational number: '" + s + "'");
  }
}

std::vector<Rational> parse_coords(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& t : split(s, ',')) out.push_back(parse_rational(t));
  return out;
}

std::array<Rational, 6> parse_hyperplane(const std::string& s) {
  const auto v = parse_coords(s);
  if (v.size() != 6) throw UsageError("--hyperplane expects six coefficients h0..h5");
  std::array<Rational, 6> h;
  std::copy(v.begin(), v.end(), h.begin());
  return h;
}

/// Elements separated by ';'. Empty means the trivial group, "Gamma" the whole group.
PermGroup<GammaElt> parse_group(const std::string& s) {
  if (s == "Gamma" || s == "gamma") return gamma_group();
  std::vector<std::string> gens;
  if (!s.empty())
    for (const auto& t : split(s, ';'))
      if (!t.empty()) gens.push_back(t);
  try {
    return gamma_subgroup(gens);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--group: ") + e.what());
  }
}

ZGModule load_module(const std::string& name) {
  const auto& names = standard_module_names();
  if (std::find(names.begin(), names.end(), name) != names.end()) return standard_module(name);
  if (!fs::exists(name)) {
    std::string all;
    for (const auto& n : names) all += " " + n;
    throw UsageError("--module: unknown module '" + name + "' (standard:" + all + ", or a JSON file)");
  }
  std::ifstream in(name);
  try {
    return module_from_json(json::parse(in));
  } catch (const std::exception& e) {
    throw UsageError("--module: cannot read '" + name + "': " + e.what());
  }
}

/// JSON ({vars, terms}) or text: a "vars: x y z" line followed by the polynomial.
NamedPoly load_poly(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("--poly: cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return poly_from_json(json::parse(text));
    std::istringstream lines(text);
    std::string header;
    std::getline(lines, header);
    if (header.rfind("vars:", 0) != 0) throw UsageError("--poly: text files start with 'vars: <names>'");
    NamedPoly out;
    std::istringstream names(header.substr(5));
    for (std::string v; names >> v;) out.vars.push_back(v);
    std::string body((std::istreambuf_iterator<char>(lines)), std::istreambuf_iterator<char>());
    out.poly = parse_poly(body, out.vars);
    return out;
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError("--poly: " + std::string(e.what()));
  }
}

json report_json(const SingularPointReport& r) {
  return {{"point", point_string(r.point)}, {"mu", r.mu},        {"mu_prime", r.mu_prime},
          {"m", r.m},                       {"is_node", r.is_node}, {"hessian_rank", r.hessian_rank},
          {"slice_seed", r.slice_seed}};
}

Outcome milnor(const NamedPoly& np, const std::vector<Rational>& pt, unsigned trunc, std::uint64_t seed) {
  if (pt.size() != np.vars.size()) throw UsageError("--point: expected " + std::to_string(np.vars.size()) + " coordinates");
  Hypersurface x;
  try {
    x = Hypersurface(np.poly, np.vars);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--poly: ") + e.what());
  }
  Outcome o;
  o.result = {{"poly", to_text(np.poly, np.vars)}, {"point", point_string(pt)}};
  if (!is_singular_point(x.f, pt)) {
    o.result["error"] = "point is not a singular point";
    o.passed = false;
    return o;
  }
  try {
    const auto r = classify_singularity(x, pt, trunc, seed);
    o.result["classification"] = report_json(r);
  } catch (const NonIsolatedSingularity& e) {
    o.result["error"] = e.what();
    o.passed = false;
  }
  return o;
}

// ---- commands ----

Outcome cmd_verify(const RunConfig& c) {
  if (c.target != "all") throw UsageError("verify: only 'verify all' is supported");
  Outcome o;
  json crit = json::array();
  for (const auto& r : verify_all(c.seed)) {
    crit.push_back(to_json(r));
    o.passed = o.passed && r.passed();
    std::cout << (r.passed() ? "PASS" : "FAIL") << "  " << r.number << ". " << r.title << "\n";
  }
  o.result["criteria"] = crit;

  // shipped fixtures
  const fs::path dir(c.fixtures);
  const fs::path manifest = dir / "manifest.json";
  std::vector<Check> fx;
  if (!fs::exists(manifest)) throw UsageError("verify: no fixture manifest at " + manifest.string());
  std::ifstream in(manifest);
  const json m = json::parse(in);
  for (const auto& e : m.at("milnor")) {
    const auto np = load_poly((dir / e.at("poly").get<std::string>()).string());
    const auto out = milnor(np, parse_coords(e.at("point").get<std::string>()), c.trunc, c.seed);
    bool ok = out.passed;
    if (ok) {
      const auto& cl = out.result.at("classification");
      for (const auto& [k, v] : e.at("expect").items()) ok = ok && cl.at(k) == v;
    }
    fx.push_back({"fixture.milnor." + e.at("poly").get<std::string>(), ok, out.result});
  }
  for (const auto& h : m.at("hyperplanes")) {
    std::string s;
    for (const auto& v : h) s += (s.empty() ? "" : ",") + v.dump();
    const auto g = section_geometry(parse_hyperplane(s));
    fx.push_back({"fixture.section." + s, g.ok(), {{"good_primes", g.cert.good_primes()}}});
  }
  o.passed = o.passed && all_passed(fx);
  std::cout << (all_passed(fx) ? "PASS" : "FAIL") << "  fixtures (" << fx.size() << " checks)\n";
  o.result["fixtures"] = to_json(fx);
  return o;
}

Outcome cmd_brauer_table(const RunConfig& c) {
  const auto rows = brauer_table();
  Outcome o;
  json jr = json::array();
  for (const auto& r : rows) jr.push_back(to_json(r));
  const auto checks = brauer_table_checks(rows);
  o.passed = all_passed(checks);
  o.result = {{"rows", jr}, {"checks", to_json(checks)}};
  if (!c.json_stdout) {
    std::cout << std::left << std::setw(14) << "class" << std::setw(7) << "order" << std::setw(6) << "size"
              << std::setw(10) << "H1(P)" << std::setw(12) << "H1(PicTil)" << std::setw(8) << "H1(E)" << "generators\n";
    for (const auto& r : rows)
      std::cout << std::setw(14) << r.label << std::setw(7) << r.order << std::setw(6) << r.class_size << std::setw(10)
                << r.h1_pic.to_string() << std::setw(12) << r.h1_pictilde.to_string() << std::setw(8)
                << r.h1_exceptional.to_string() << r.generators << "\n";
    for (const auto& k : checks) std::cout << (k.passed ? "PASS  " : "FAIL  ") << k.id << "\n";
  }
  return o;
}

Outcome cmd_cohomology(const RunConfig& c) {
  const auto w = parse_group(c.group);
  const auto m = load_module(c.module);
  Outcome o;
  FinAbGroup g;
  try {
    g = h1(w, m);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("cohomology: ") + e.what());
  }
  json inv = json::array();
  for (const auto& d : g.factors) inv.push_back(d.get_si());
  const auto z = h0(w, m);
  o.result = {{"group", to_string(w)},
              {"group_order", w.order()},
              {"module", m.name()},
              {"module_rank", m.rank()},
              {"invariant_factors", inv},
              {"H1", g.to_string()},
              {"H0_rank", z.rank()}};
  if (!c.json_stdout) std::cout << "H^1(W, " << m.name() << ") = " << g.to_string() << "\n";
  return o;
}

Outcome cmd_incidence(const RunConfig& c) {
  const auto h = parse_hyperplane(c.hyperplane);
  SectionGeometry g;
  g.cert = nine_nodal_section(h, c.primes);
  if (g.cert.accepted) {
    const auto full = section_geometry(h);
    g.planes = full.planes;
    g.planes_on_X = full.planes_on_X;
    g.nodes_per_plane = full.nodes_per_plane;
    g.planes_per_node = full.planes_per_node;
    g.skeleton = full.skeleton;
  }
  Outcome o;
  o.passed = g.ok();
  o.result = to_json(g);
  if (!c.json_stdout) {
    if (!g.cert.accepted) std::cout << "rejected: " << g.cert.rejection << "\n";
    std::cout << "good primes: " << g.cert.good_primes() << ", nodes: " << g.cert.nodes.size()
              << ", planes: " << g.planes.size() << ", graph: " << g.skeleton.vertices << " vertices, "
              << g.skeleton.edges << " edges, " << g.skeleton.triangles << " triangles, |Aut| = " << g.skeleton.aut_order
              << "\n";
  }
  return o;
}

Outcome cmd_torsor(const RunConfig& c) {
  if (!c.check) throw UsageError("torsor-map: pass --check");
  Outcome o;
  o.result = torsor_check_json();
  o.passed = o.result["identity_ok"].get<bool>() && o.result["equivariance_ok"] == 72 &&
             o.result["double_three"]["ok"].get<bool>();
  for (const auto& t : o.result["census"]) o.passed = o.passed && t["ok"].get<bool>();
  if (!c.json_stdout)
    std::cout << "identity " << o.result["identity_ok"] << ", equivariant elements " << o.result["equivariance_ok"]
              << ", double-vanishing checks " << o.result["double_three"]["passes"] << "/"
              << o.result["double_three"]["checks"] << "\n";
  return o;
}

Outcome cmd_census(const RunConfig& c) {
  Outcome o;
  if (c.object == "perazzo") {
    if (c.q != 2 && c.q != 3 && c.q != 5 && c.q != 7) throw UsageError("census --object perazzo: q must be 2, 3, 5 or 7");
    const auto t = torsor_census(c.q);
    o.result = to_json(t);
    o.passed = t.ok();
    if (!c.json_stdout)
      std::cout << "q=" << c.q << ": torus points " << t.torus_points << ", image " << t.image_size << ", fiber "
                << t.fiber_min << ".." << t.fiber_max << " (expected " << t.expected_fiber() << ")\n";
  } else if (c.object == "segre") {
    if (c.q != 3 && c.q != 5) throw UsageError("census --object segre: q must be 3 or 5");
    const auto s = segre_census(c.q, matching_model(c.seed));
    o.result = to_json(s);
    o.passed = s.identity_holds;
    if (!c.json_stdout)
      std::cout << "q=" << c.q << ": #M00 = " << s.m00 << ", #Sigma0 = " << s.sigma0 << ", #G = " << s.g_order
                << ", identity " << (s.identity_holds ? "holds" : "FAILS") << "\n";
  } else {
    throw UsageError("census: --object must be segre or perazzo");
  }
  return o;
}

Outcome cmd_milnor(const RunConfig& c) {
  auto o = milnor(load_poly(c.poly_file), parse_coords(c.point), c.trunc, c.seed);
  if (!c.json_stdout) {
    if (o.passed) {
      const auto& r = o.result["classification"];
      std::cout << "mu = " << r["mu"] << ", mu' = " << r["mu_prime"] << ", m = " << r["m"]
                << (r["is_node"].get<bool>() ? " (node)" : "") << "\n";
    } else {
      std::cout << o.result["error"].get<std::string>() << "\n";
    }
  }
  return o;
}

Outcome cmd_segre(const RunConfig& c) {
  FittedModel m;
  if (c.model == "quadrics") m = quadrics_model(c.seed);
  else if (c.model == "matrix") m = matching_model(c.seed);
  else throw UsageError("segre: --model must be quadrics or matrix");
  const auto standard = segre_standard();
  const auto fit = cubic_census(m.sigma.f, 7);
  const auto ref = cubic_census(standard.sigma.f, 7);
  const auto equiv = permutation_sign_equivalence(m.sigma.f, standard.sigma.f);
  Outcome o;
  o.passed = fit == ref && fit.singular == 10 && fit.planes == 15;
  o.result = {{"model", m.name},
              {"cubic", to_text(m.sigma.f, m.sigma.vars)},
              {"samples", m.samples},
              {"basis_dimension", m.basis_dimension},
              {"census_F7", to_json(fit)},
              {"standard_census_F7", to_json(ref)},
              {"censuses_agree", fit == ref},
              {"permutation_sign_equivalence", equiv ? json(equiv->first.to_string()) : json(nullptr)}};
  if (!c.json_stdout)
    std::cout << m.name << " model: " << to_text(m.sigma.f, m.sigma.vars) << "\nF_7: " << fit.points << " points, "
              << fit.singular << " singular, " << fit.planes << " planes (standard: " << ref.points << ", "
              << ref.singular << ", " << ref.planes << ")\n";
  return o;
}

fs::path output_path(const RunConfig& c) {
  if (!c.output.empty()) return c.output;
  if (const char* dir = std::getenv("NODAL_OUTPUT_DIR"); dir && *dir) return fs::path(dir) / (c.command + ".json");
  return fs::path(c.command + "-report.json");
}

void write_report(const RunConfig& c, const json& report) {
  const fs::path p = output_path(c);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write report to " + p.string());
  out << report.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nodal-verify: exact verification suites for nodal cubic threefolds"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig c;
  app.add_option("--seed", c.seed, "seed for pseudo-random choices")->capture_default_str();
  app.add_option("--output,-o", c.output, "report path (default $NODAL_OUTPUT_DIR/<cmd>.json or ./<cmd>-report.json)");
  app.add_flag("--json", c.json_stdout, "print the JSON report to stdout");

  auto* verify = app.add_subcommand("verify", "run the full suite");
  verify->add_option("target", c.target, "'all'")->required();
  verify->add_option("--fixtures", c.fixtures, "fixture directory")->capture_default_str();
  verify->add_option("--trunc", c.trunc, "local algebra truncation degree")->capture_default_str();

  app.add_subcommand("brauer-table", "H^1 of the class lattice over all subgroup classes");

  auto* coh = app.add_subcommand("cohomology", "H^1(W, M) for a subgroup W of Gamma");
  coh->add_option("--group", c.group, "generators '(rho,tau,eps);...', empty for trivial, 'Gamma' for all")->required();
  coh->add_option("--module", c.module, "standard module name or JSON file")->capture_default_str();

  auto* inc = app.add_subcommand("incidence-graph", "nine-nodal section certificate and plane incidence graph");
  inc->add_option("--hyperplane", c.hyperplane, "coefficients h0..h5 of x1,x2,x3,y1,y2,y3")->capture_default_str();
  inc->add_option("--primes", c.primes, "primes to scan")->delimiter(',');

  auto* tor = app.add_subcommand("torsor-map", "torsor identity, equivariance, double-three and census");
  tor->add_flag("--check", c.check, "run all checks");

  auto* cen = app.add_subcommand("census", "finite-field census");
  cen->add_option("--object", c.object, "segre or perazzo")->required();
  cen->add_option("--q", c.q, "field size")->required();

  auto* mil = app.add_subcommand("milnor", "classify a singular point");
  mil->add_option("--poly", c.poly_file, "polynomial file (JSON or 'vars:' text)")->required();
  mil->add_option("--point", c.point, "comma separated rational coordinates")->required();
  mil->add_option("--trunc", c.trunc, "local algebra truncation degree")->capture_default_str();

  auto* seg = app.add_subcommand("segre", "fit a Segre cubic model and compare censuses");
  seg->add_option("--model", c.model, "quadrics or matrix")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  c.command = app.get_subcommands().front()->get_name();

  json report = report_envelope(c.command, c.seed);
  int status = 0;
  try {
    Outcome o;
    if (c.command == "verify") o = cmd_verify(c);
    else if (c.command == "brauer-table") o = cmd_brauer_table(c);
    else if (c.command == "cohomology") o = cmd_cohomology(c);
    else if (c.command == "incidence-graph") o = cmd_incidence(c);
    else if (c.command == "torsor-map") o = cmd_torsor(c);
    else if (c.command == "census") o = cmd_census(c);
    else if (c.command == "milnor") o = cmd_milnor(c);
    else if (c.command == "segre") o = cmd_segre(c);
    report["result"] = o.result;
    report["passed"] = o.passed;
    status = o.passed ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    report["error"] = e.what();
    report["passed"] = false;
    status = 2;
  }
  if (c.json_stdout) std::cout << report.dump(2) << "\n";
  try {
    write_report(c, report);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return status == 0 ? 1 : status;
  }
  return status;
}
