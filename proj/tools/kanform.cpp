// kanform: build complexes, lift cycles, pair forms and verify identities.
//
// Exit codes: 0 pass, 2 verification failure, 3 input error, 4 obstruction.

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "kanform/io.hpp"
#include "kanform/moduli.hpp"
#include "kanform/shulman.hpp"

using namespace kanform;
namespace fs = std::filesystem;

namespace {

constexpr int kExitVerify = 2;
constexpr int kExitInput = 3;
constexpr int kExitObstruction = 4;

struct RunConfig {
  std::string command;
  std::string group = "SU2";
  std::string poly = "basic";
  double tol = 1e-5;
  int samples = 20;
  std::uint64_t seed = 1;
  std::string out = ".";
  int threads = 1;
  std::map<std::string, std::string> inputs;

  std::string path(const std::string& file) const { return (fs::path(out) / file).string(); }
};

json config_json(const RunConfig& c) {
  return {{"command", c.command}, {"group", c.group},     {"poly", c.poly},
          {"tol", c.tol},         {"samples", c.samples}, {"seed", c.seed},
          {"out", c.out},         {"threads", c.threads}, {"inputs", c.inputs}};
}

json conventions_json() {
  const auto& c = default_conventions();
  return {{"mu_sign", c.mu_sign},
          {"fiber_orientation", c.orientation},
          {"delta_G", "-iota_X"},
          {"pairing_sign", "(-1)^((k-1)(k+2)/2)"},
          {"total_D", "d + delta_G + (-1)^(i+j) partial_sharp"},
          {"integration_sign", "(-1)^(q j + q(q+3)/2), simplex directions first"},
          {"total_boundary", "partial_nat + (-1)^k partial_sharp"}};
}

// Attaches the run configuration (and so the seed) to an artifact.
void stamp(json& j, const RunConfig& c) {
  j["schema_version"] = kSchemaVersion;
  j["seed"] = c.seed;
  j["config"] = config_json(c);
}

void write_text(const std::string& path, const std::string& text) {
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw InputError("cannot write " + tmp.string());
    out << text;
  }
  fs::rename(tmp, p);
}

class Report {
 public:
  explicit Report(const RunConfig& c) : cfg_(c) {}

  // NaN residuals fail.
  void check(const std::string& name, double residual, double tol) {
    const bool pass = residual <= tol;
    checks_.push_back({{"name", name}, {"residual", residual}, {"tolerance", tol}, {"pass", pass}});
    passed_ = passed_ && pass;
  }
  void exact(const std::string& name, bool ok) {
    checks_.push_back({{"name", name}, {"exact", true}, {"pass", ok}});
    passed_ = passed_ && ok;
  }
  json& results() { return results_; }
  bool passed() const { return passed_; }

  int finish(const std::string& file) const {
    json j;
    stamp(j, cfg_);
    j["conventions"] = conventions_json();
    j["checks"] = checks_;
    j["results"] = results_;
    j["passed"] = passed_;
    write_json(cfg_.path(file), j);
    for (const auto& c : checks_) print_check(c);
    std::cout << (passed_ ? "all checks passed" : "verification failed") << " -> "
              << cfg_.path(file) << "\n";
    return passed_ ? 0 : kExitVerify;
  }

  static void print_check(const json& c) {
    std::cout << (c.at("pass").get<bool>() ? "PASS " : "FAIL ") << c.at("name").get<std::string>();
    if (c.contains("residual")) {
      const json& r = c.at("residual");
      std::cout << "  residual " << (r.is_number() ? r.get<double>() : NAN) << " (tol "
                << c.at("tolerance").get<double>() << ")";
    }
    std::cout << "\n";
  }

 private:
  const RunConfig& cfg_;
  json checks_ = json::array();
  json results_ = json::object();
  bool passed_ = true;
};

std::string key_string(const std::tuple<int, int, int>& k) {
  return std::to_string(std::get<0>(k)) + "," + std::to_string(std::get<1>(k)) + "," +
         std::to_string(std::get<2>(k));
}

json keys_json(const GradedForms& f) {
  json out = json::array();
  for (const auto& [key, form] : f) out.push_back(key_string(key));
  return out;
}

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t n) {
  const auto* b = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) h = (h ^ b[i]) * 1099511628211ULL;
  return h;
}

std::uint64_t hash_matrices(std::uint64_t h, const std::vector<Mat>& ms) {
  for (const auto& m : ms) h = fnv1a(h, m.data(), sizeof(cplx) * static_cast<std::size_t>(m.size()));
  return h;
}

std::vector<Tangent> random_frame(const MatrixGroup& g, int factors, int count,
                                  std::mt19937_64& rng) {
  std::vector<Tangent> v;
  for (int a = 0; a < count; ++a) v.push_back(random_tangent(g, factors, rng));
  return v;
}

FreeSimplicialGroup load_complex(RunConfig& cfg, const std::string& key, const std::string& path) {
  cfg.inputs[key] = path;
  return group_from_json(read_json(path));
}

// A cycle.json or a bare chain.
Chain load_chain(RunConfig& cfg, const std::string& path) {
  cfg.inputs["cycle"] = path;
  json j = read_json(path);
  return chain_from_json(j.contains("cycle") ? j.at("cycle") : j);
}

// name:coeff,name:coeff
CellularChain parse_cells(const std::string& text, const CellComplex& y) {
  CellularChain z;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto colon = item.find(':');
    std::string name = item.substr(0, colon);
    Integer n = 1;
    if (colon != std::string::npos) {
      try {
        n = Integer(item.substr(colon + 1));
      } catch (const std::exception&) {
        throw InputError("bad coefficient in cell term '" + item + "'");
      }
    }
    int d = y.degree_of(name);
    if (d < 0) throw InputError("unknown cell '" + name + "'");
    add_cell(z, d, name, n);
  }
  return z;
}

// ---------------------------------------------------------------- commands

int cmd_build(RunConfig& cfg, const std::string& complex_path) {
  FreeSimplicialGroup k = load_complex(cfg, "complex", complex_path);
  json out = group_to_json(k);
  stamp(out, cfg);
  write_json(cfg.path("kan.json"), out);
  std::cout << "kind " << out.at("kind").get<std::string>() << ", generators by degree";
  for (const auto& [q, n] : out.at("generator_counts").items()) std::cout << " " << q << ":" << n;
  std::cout << " -> " << cfg.path("kan.json") << "\n";
  return out.at("identity_check").at("violations").empty() ? 0 : kExitVerify;
}

int cmd_cycle(RunConfig& cfg, const std::string& kan_path, int degree, const std::string& method,
              const std::string& cells) {
  FreeSimplicialGroup k = load_complex(cfg, "complex", kan_path);
  if (degree < 1 || degree > 3) throw InputError("cycle degree must be 1, 2 or 3");
  LiftOptions opts;
  if (!method.empty()) opts.method = lift_method_from_string(method);
  CycleResult r;
  if (cells.empty() && degree == 2 && k.kind == "surface") {
    r = surface_cycle(k, opts);
  } else if (cells.empty() && degree == 3 && k.kind == "threefold") {
    r = threefold_cycle(k, opts);
  } else {
    CellComplex y = CellComplex::from_group(k);
    CellularChain z;
    if (!cells.empty()) {
      z = parse_cells(cells, y);
    } else {
      if (degree >= static_cast<int>(y.cells.size()) ||
          y.cells[static_cast<std::size_t>(degree)].size() != 1)
        throw InputError("no unique " + std::to_string(degree) + "-cell; pass --cells");
      add_cell(z, degree, y.cells[static_cast<std::size_t>(degree)].front(), 1);
    }
    r = cycle_from_cellular(k, y, z, opts);
  }
  json out = cycle_to_json(k, r);
  out["degree"] = degree;
  stamp(out, cfg);
  write_json(cfg.path("cycle.json"), out);
  const bool ok = out.at("boundary_zero").get<bool>();
  std::cout << r.cycle.str() << "\n"
            << (ok ? "PASS" : "FAIL") << " total boundary is zero -> " << cfg.path("cycle.json")
            << "\n";
  return ok ? 0 : kExitVerify;
}

int cmd_forms(RunConfig& cfg, const std::string& component) {
  MatrixGroup g = group_from_descriptor(cfg.group);
  InvariantPolynomial q = polynomial_from_descriptor(cfg.poly);
  OmegaQ om = assemble_omega(q);
  std::ostringstream csv;
  csv.precision(17);
  csv << "run_seed,i,j,q,point_seed,slot_hash,value\n";
  std::uint64_t row = 0;
  int rows = 0;
  for (const auto& [key, f] : om.components) {
    if (!component.empty() && key_string(key) != component) continue;
    for (int s = 0; s < cfg.samples; ++s, ++row) {
      const std::uint64_t point_seed = cfg.seed * 1000003ULL + row;
      std::mt19937_64 rng(point_seed);
      Point p = random_point(g, f.factors, rng);
      Mat x = g.random_algebra(rng);
      auto v = random_frame(g, f.factors, f.j, rng);
      std::uint64_t h = hash_matrices(1469598103934665603ULL, p);
      h = hash_matrices(h, {x});
      for (const auto& t : v) h = hash_matrices(h, t);
      csv << cfg.seed << "," << std::get<0>(key) << "," << std::get<1>(key) << ","
          << std::get<2>(key) << "," << point_seed << "," << h << "," << f(p, x, v) << "\n";
      ++rows;
    }
  }
  if (rows == 0) throw InputError("no component matches '" + component + "'");
  write_text(cfg.path("forms.csv"), csv.str());
  std::cout << rows << " rows -> " << cfg.path("forms.csv") << "\n";
  return 0;
}

int cmd_pair(RunConfig& cfg, const std::string& kan_path, const std::string& cycle_path) {
  FreeSimplicialGroup k = load_complex(cfg, "complex", kan_path);
  Chain c = load_chain(cfg, cycle_path);
  MatrixGroup g = group_from_descriptor(cfg.group);
  InvariantPolynomial q = polynomial_from_descriptor(cfg.poly);
  OmegaQ om = assemble_omega(q);
  std::mt19937_64 rng(cfg.seed);
  GradedForms paired = pair(k, om.components, c);
  IdentityReport id = differential_identity_check(k, g, om.components, 2 * q.degree, c,
                                                  cfg.samples, rng);
  Report rep(cfg);
  rep.results()["components"] = keys_json(paired);
  rep.results()["boundary_zero"] = total_boundary(k, c).is_zero();
  json rows = json::array();
  for (const auto& r : id.rows)
    rows.push_back({{"target", key_string(r.target)},
                    {"residual", r.residual},
                    {"magnitude", r.magnitude},
                    {"boundary_term", r.boundary}});
  rep.results()["identity_rows"] = rows;
  rep.check("D<Omega,c> = <d_G Omega,c> +- <Omega,dc>", id.worst, cfg.tol);
  return rep.finish("pair.json");
}

int cmd_moduli(RunConfig& cfg, int genus, bool verify, double radius) {
  MatrixGroup g = group_from_descriptor(cfg.group);
  InvariantPolynomial q = polynomial_from_descriptor(cfg.poly);
  std::mt19937_64 rng(cfg.seed);
  ExtendedModuli m(genus, g);
  ModuliChart chart(m, random_moduli_point(m, rng), radius);
  Chain c = surface_cycle(m.complex()).cycle;
  LiftOptions fox;
  fox.method = LiftMethod::fox;
  Chain c2 = surface_cycle(m.complex(), fox).cycle;

  MomentumReport mr = momentum_check(chart, q, c, cfg.samples, rng);
  SurfaceForms f = surface_two_form(chart, q, c);
  SurfaceForms f2 = surface_two_form(chart, q, c2);
  double lo = INFINITY, hi = -INFINITY;
  json ranks = json::array();
  for (int s = 0; s < cfg.samples; ++s) {
    auto a = chart.sample(rng);
    Mat x = g.random_algebra(rng);
    const double shift = f2.mu(a, x, {}) - f.mu(a, x, {});
    lo = std::min(lo, shift);
    hi = std::max(hi, shift);
    if (s < 5) {
      auto sv = omega_singular_values(chart, f.omega, a);
      ranks.push_back({{"point", a}, {"rank", numerical_rank(sv)}, {"singular_values", sv}});
    }
  }

  Report rep(cfg);
  auto& r = rep.results();
  r["genus"] = genus;
  r["dimension"] = m.dimension();
  r["cycle"] = c.str();
  r["second_lift"] = c2.str();
  r["omega_rank"] = ranks;
  r["momentum"] = {{"closedness", mr.closedness},       {"literal", mr.literal},
                   {"opposite", mr.opposite},           {"dmu_scale", mr.scale},
                   {"equivariance", mr.equivariance},   {"realized_sign", mr.realized_sign()},
                   {"lift_shift_spread", hi - lo}};
  std::cout << "realized sign: delta_G omega = " << (mr.realized_sign() < 0 ? "-" : "+")
            << "d mu  (literal residual " << mr.literal << ", opposite " << mr.opposite << ")\n";
  if (!verify) return rep.finish("moduli.json");
  rep.check("d omega_c", mr.closedness, cfg.tol);
  rep.check("delta_G omega_c + d mu_sharp (realized sign)", mr.opposite, cfg.tol);
  rep.check("omega_c invariant under conjugation", mr.equivariance, cfg.tol);
  rep.check("mu shift between lifts is constant", hi - lo, 1e-6);
  return rep.finish("moduli.json");
}

int cmd_cs(RunConfig& cfg, const std::string& complex_path, const std::string& plot_path,
           const std::string& loop_path, int level, double period_tol) {
  FreeSimplicialGroup k = load_complex(cfg, "complex", complex_path);
  MatrixGroup g = group_from_descriptor(cfg.group);
  InvariantPolynomial q = polynomial_from_descriptor(cfg.poly);
  cfg.inputs["plot"] = plot_path;
  PlotSpec ps = plot_from_json(read_json(plot_path), k, g);
  LoopSpec loop;
  if (!loop_path.empty()) {
    cfg.inputs["loop"] = loop_path;
    loop = loop_from_json(read_json(loop_path));
  } else {
    loop.base.assign(static_cast<std::size_t>(ps.plot.domain.dim), 0.0);
    loop.direction = loop.base;
    if (!loop.direction.empty()) loop.direction[0] = 1;
  }
  if (static_cast<int>(loop.base.size()) != ps.plot.domain.dim)
    throw InputError("loop dimension does not match the plot domain");
  Chain c = threefold_cycle(k).cycle;
  std::map<int, SimplexRule> rules;
  if (level > 0) rules[2] = composite_triangle_rule(level);
  std::mt19937_64 rng(cfg.seed);
  ChernSimonsReport cs = chern_simons(k, c, ps.plot, g, q, loop, ps.field, cfg.samples, rng, rules);

  Report rep(cfg);
  auto& r = rep.results();
  r["family"] = ps.family;
  r["plot"] = ps.descriptor;
  r["loop"] = {{"base", loop.base}, {"direction", loop.direction}, {"points", loop.points},
               {"closed", loop.closed}};
  r["cycle"] = c.str();
  r["raw"] = cs.raw;
  r["circle_value"] = cs.value.value;
  r["distance_to_integer"] = cs.distance_to_integer;
  r["closedness"] = cs.closedness;
  r["equivariance"] = cs.equivariance;
  r["quadrature_level"] = level;
  std::cout.precision(12);
  std::cout << "Psi raw " << cs.raw << ", mod 1 " << cs.value.value << "\n";
  rep.check("d psi", cs.closedness, cfg.tol);
  rep.check("delta_G psi on basis X", cs.equivariance, cfg.tol);
  if (loop.closed) rep.check("period is an integer", cs.distance_to_integer, period_tol);
  return rep.finish("cs.json");
}

int cmd_catalog(RunConfig& cfg, int genus, int n, bool verify) {
  std::mt19937_64 rng(cfg.seed);
  auto entries = un_generator_catalog(genus, n, cfg.samples, rng, verify);
  Report rep(cfg);
  json list = json::array();
  for (const auto& e : entries) {
    list.push_back({{"name", e.name},
                    {"r", e.r},
                    {"degree", e.degree},
                    {"cycle_degree", e.cycle_degree},
                    {"free_generator", e.free_generator},
                    {"chain", e.chain},
                    {"components", keys_json(e.form)},
                    {"closedness", e.closedness}});
    std::cout << e.name << "  degree " << e.degree << (e.free_generator ? "" : "  (not free)")
              << "\n";
    if (verify) rep.check(e.name + " closed", e.closedness, cfg.tol);
  }
  rep.results()["group"] = "U" + std::to_string(n);
  rep.results()["genus"] = genus;
  rep.results()["entries"] = list;
  return rep.finish("catalog.json");
}

int cmd_verify(RunConfig& cfg, int genus, const std::string& cycle_path) {
  MatrixGroup g = group_from_descriptor(cfg.group);
  InvariantPolynomial q = polynomial_from_descriptor(cfg.poly);
  FreeSimplicialGroup k = builtin_surface(genus);
  std::mt19937_64 rng(cfg.seed);
  Report rep(cfg);
  auto& r = rep.results();
  r["genus"] = genus;

  Chain c = cycle_path.empty() ? surface_cycle(k).cycle : load_chain(cfg, cycle_path);
  r["cycle"] = c.str();
  rep.exact("cycle has zero total boundary", total_boundary(k, c).is_zero());
  CellComplex y = CellComplex::from_group(k);
  CellularChain top;
  add_cell(top, 2, "r", 1);
  CellularChain ret = retract_to_cellular(k, c, y);
  CellularChain neg = top;
  for (auto& [d, cells] : neg)
    for (auto& [name, v] : cells) v = -v;
  rep.exact("cycle retracts to +-[r]", ret == top || ret == neg);

  OmegaQ om = assemble_omega(q);
  std::vector<EquivariantForm> all;
  for (const auto& [key, f] : om.components) all.push_back(f);
  double ladder = 0;
  for (const auto& [key, f] : total_differential(all))
    for (int s = 0; s < cfg.samples; ++s) {
      Point p = random_point(g, f.factors, rng);
      Mat x = g.random_algebra(rng);
      ladder = std::max(ladder, std::abs(f(p, x, random_frame(g, f.factors, f.j, rng))));
    }
  rep.check("d_G Omega_Q = 0", ladder, cfg.tol);

  IdentityReport id =
      differential_identity_check(k, g, om.components, 2 * q.degree, c, cfg.samples, rng);
  rep.check("pairing identity on the cycle", id.worst, cfg.tol);

  if (genus >= 1 && q.degree == 2 && g.family() != Family::SO) {
    ExtendedModuli m(genus, g);
    ModuliChart chart(m, random_moduli_point(m, rng), 0.3);
    MomentumReport mr = momentum_check(chart, q, c, std::min(cfg.samples, 20), rng);
    r["momentum"] = {{"literal", mr.literal}, {"opposite", mr.opposite},
                     {"realized_sign", mr.realized_sign()}};
    rep.check("d omega_c", mr.closedness, cfg.tol);
    rep.check("delta_G omega_c + d mu_sharp (realized sign)", mr.opposite, cfg.tol);
  }
  return rep.finish("report.json");
}

int cmd_report(const std::string& path) {
  json j = read_json(path);
  if (!j.contains("checks")) throw InputError(path + ": not a report (no checks)");
  std::cout << "command " << j.value("/config/command"_json_pointer, std::string("?")) << ", seed "
            << j.value("seed", 0ULL) << "\n";
  bool ok = true;
  for (const auto& c : j.at("checks")) {
    Report::print_check(c);
    ok = ok && c.value("pass", false);
  }
  std::cout << (ok ? "all checks passed" : "verification failed") << "\n";
  return ok ? 0 : kExitVerify;
}

int threads_from_env() {
  const char* v = std::getenv("KANFORM_THREADS");
  if (!v || !*v) return 1;
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 1) throw InputError(std::string("KANFORM_THREADS must be a positive integer, got '") + v + "'");
  return static_cast<int>(n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chern-Weil forms on Kan loop groups: cycles, pairings and verification"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--group", cfg.group, "Matrix group, e.g. SU2 or {\"family\":\"SU\",\"n\":2}");
  app.add_option("--poly", cfg.poly, "Invariant polynomial: basic, trace:<s>, chern:<r> or JSON");
  app.add_option("--tol", cfg.tol, "Residual tolerance")->check(CLI::PositiveNumber);
  app.add_option("--samples", cfg.samples, "Random samples per check")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "RNG seed");
  app.add_option("--out", cfg.out, "Output directory");

  std::string complex_path, kan_path, cycle_path, plot_path, loop_path, method, cells, component,
      report_path;
  int degree = 2, genus = 1, un = 2, level = 3;
  bool verify = false, no_verify = false;
  double radius = 0.3, period_tol = 1e-3;

  auto* build = app.add_subcommand("build", "Build a Kan loop group from a complex description");
  build->add_option("--complex", complex_path, "complex.json")->required();

  auto* cycle = app.add_subcommand("cycle", "Lift a cellular cycle to a total cycle");
  cycle->add_option("--kan", kan_path, "kan.json or complex.json")->required();
  cycle->add_option("--degree", degree, "Cycle degree (1, 2 or 3)");
  cycle->add_option("--method", method, "Lift method: telescoping, fox or linear");
  cycle->add_option("--cells", cells, "Cellular cycle as name:coeff,...");

  auto* forms = app.add_subcommand("forms", "Sample components Q^{i,j,q} as CSV");
  forms->add_option("--component", component, "Only the component \"i,j,q\"");

  auto* pairc = app.add_subcommand("pair", "Pair Omega_Q with a cycle and check D<Omega,c>");
  pairc->add_option("--kan", kan_path, "kan.json or complex.json")->required();
  pairc->add_option("--cycle", cycle_path, "cycle.json")->required();

  auto* moduli = app.add_subcommand("moduli", "Symplectic form and moment map on extended moduli");
  moduli->add_option("--genus", genus, "Surface genus")->check(CLI::PositiveNumber);
  moduli->add_option("--radius", radius, "Chart radius")->check(CLI::PositiveNumber);
  moduli->add_flag("--verify", verify, "Gate the exit code on the checks");

  auto* cs = app.add_subcommand("cs", "Chern-Simons function of an equivariant plot");
  cs->add_option("--complex", complex_path, "Threefold complex or kan.json")->required();
  cs->add_option("--plot", plot_path, "plot.json")->required();
  cs->add_option("--loop", loop_path, "loop.json");
  cs->add_option("--level", level, "Composite triangle rule level (0: default rule)");
  cs->add_option("--period-tol", period_tol, "Tolerance for integral periods");

  auto* catalog = app.add_subcommand("catalog", "Generators of the U(n) equivariant cohomology");
  catalog->add_option("--genus", genus, "Surface genus")->check(CLI::NonNegativeNumber);
  catalog->add_option("--un", un, "n for U(n)")->check(CLI::PositiveNumber);
  catalog->add_flag("--no-verify", no_verify, "Skip the closedness checks");

  auto* verifyc = app.add_subcommand("verify", "Run the identity suite on a surface");
  verifyc->add_option("--genus", genus, "Surface genus")->check(CLI::NonNegativeNumber);
  verifyc->add_option("--cycle", cycle_path, "Use this cycle.json instead of constructing one");

  auto* reportc = app.add_subcommand("report", "Print a report and exit with its status");
  reportc->add_option("--in", report_path, "report JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    cfg.threads = threads_from_env();
    cfg.command = app.get_subcommands().front()->get_name();
    if (build->parsed()) code = cmd_build(cfg, complex_path);
    else if (cycle->parsed()) code = cmd_cycle(cfg, kan_path, degree, method, cells);
    else if (forms->parsed()) code = cmd_forms(cfg, component);
    else if (pairc->parsed()) code = cmd_pair(cfg, kan_path, cycle_path);
    else if (moduli->parsed()) code = cmd_moduli(cfg, genus, verify, radius);
    else if (cs->parsed()) code = cmd_cs(cfg, complex_path, plot_path, loop_path, level, period_tol);
    else if (catalog->parsed()) code = cmd_catalog(cfg, genus, un, !no_verify);
    else if (verifyc->parsed()) code = cmd_verify(cfg, genus, cycle_path);
    else if (reportc->parsed()) code = cmd_report(report_path);
  } catch (const ObstructionError& e) {
    std::cerr << "obstruction: " << e.what() << "\n";
    return kExitObstruction;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << cfg.command << " finished in " << secs << " s\n";
  return code;
}
