#include "kanform/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace kanform {

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(where + ": missing field '" + key + "'");
  return j.at(key);
}

std::string string_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_string()) throw InputError(where + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

int int_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_number_integer()) throw InputError(where + ": field '" + key + "' must be an integer");
  return v.get<int>();
}

std::vector<std::string> string_list(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_array()) throw InputError(where + ": field '" + key + "' must be an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string())
      throw InputError(where + "." + key + "[" + std::to_string(i) + "]: expected a string");
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

Word word_at(const std::string& text, const std::string& where) {
  try {
    return Word::parse(text);
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

ParamDomain domain_from_json(const json& j) {
  const std::string where = "domain";
  ParamDomain d;
  d.kind = j.value("kind", std::string("box"));
  if (d.kind != "box" && d.kind != "torus" && d.kind != "interval")
    throw InputError("domain: unknown kind '" + d.kind + "'");
  d.dim = int_field(j, "dim", where);
  if (d.dim < 0) throw InputError("domain: negative dimension");
  if (j.contains("bounds")) {
    for (const auto& b : j.at("bounds")) {
      if (!b.is_array() || b.size() != 2) throw InputError("domain: bounds must be [lo, hi] pairs");
      d.bounds.push_back({b[0].get<double>(), b[1].get<double>()});
    }
    if (static_cast<int>(d.bounds.size()) != d.dim)
      throw InputError("domain: bounds do not match the dimension");
  }
  return d;
}

// Explicit generator list; also the kan.json format.
FreeSimplicialGroup generators_from_json(const json& j, const std::string& kind, int max_degree) {
  const json& gens = field(j, "generators", "complex");
  if (!gens.is_array()) throw InputError("complex: 'generators' must be an array");
  FreeSimplicialGroup k(max_degree);
  k.kind = kind;
  std::vector<const json*> order;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].is_object())
      throw InputError("complex.generators[" + std::to_string(i) + "]: expected an object");
    order.push_back(&gens[i]);
  }
  std::stable_sort(order.begin(), order.end(), [](const json* a, const json* b) {
    return a->value("degree", 0) < b->value("degree", 0);
  });
  for (const json* g : order) {
    std::string name = string_field(*g, "name", "generator");
    int degree = int_field(*g, "degree", "generator " + name);
    std::vector<Word> faces;
    if (g->contains("faces")) {
      auto fs = string_list(*g, "faces", "generator " + name);
      for (std::size_t i = 0; i < fs.size(); ++i)
        faces.push_back(word_at(fs[i], "generator " + name + " face " + std::to_string(i)));
    }
    k.add_generator(name, degree, faces);
  }
  if (j.contains("notes"))
    for (const auto& [key, v] : j.at("notes").items()) k.notes[key] = v.get<std::string>();
  auto bad = k.identity_violations();
  if (!bad.empty()) throw InputError("simplicial identity violation: " + bad.front());
  return k;
}

}  // namespace

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_json(const std::string& path, const json& j) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::filesystem::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw InputError("cannot write " + tmp.string());
    out << j.dump(2) << "\n";
    if (!out) throw InputError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, p);
}

FreeSimplicialGroup group_from_json(const json& j) {
  const std::string kind = string_field(j, "kind", "complex");
  const int max_degree = j.value("max_degree", 4);
  const bool listed = j.contains("generators") && j.at("generators").is_array() &&
                      !j.at("generators").empty() && j.at("generators")[0].is_object();
  if (listed || kind == "free") return generators_from_json(j, kind, max_degree);
  if (kind == "surface") return builtin_surface(int_field(j, "genus", "complex"), max_degree);
  // A threefold given by presentation data; serialized ones carry a
  // generator list instead and are read below.
  if (kind == "threefold" && (j.value("minimal_s3", false) || j.contains("sigma_faces"))) {
    if (j.value("minimal_s3", false)) return builtin_threefold(ThreefoldData::minimal_s3(), max_degree);
    ThreefoldData d;
    if (j.contains("generators")) d.generators = string_list(j, "generators", "complex");
    if (j.contains("relators")) {
      for (const auto& r : j.at("relators")) {
        std::string name = string_field(r, "name", "relator");
        d.relators.push_back({name, word_at(string_field(r, "word", "relator " + name), "relator " + name)});
      }
    }
    d.sigma_name = j.value("sigma", std::string("sigma"));
    auto faces = string_list(j, "sigma_faces", "complex");
    for (std::size_t i = 0; i < faces.size(); ++i)
      d.sigma_faces.push_back(word_at(faces[i], "sigma_faces[" + std::to_string(i) + "]"));
    return builtin_threefold(d, max_degree);
  }
  if (kind == "one_relator")
    return one_relator_group(string_list(j, "generators", "complex"),
                             word_at(string_field(j, "relator", "complex"), "relator"), max_degree);
  if (kind == "simplicial_set") {
    ReducedSimplicialSet x;
    for (const auto& level : field(j, "simplices", "complex"))
      x.simplices.push_back(level.get<std::vector<std::string>>());
    for (const auto& [name, faces] : field(j, "faces", "complex").items())
      x.faces[name] = faces.get<std::vector<std::string>>();
    x.validate();
    return kan_loop_group(x, max_degree);
  }
  throw InputError("complex: unknown kind '" + kind + "'");
}

json group_to_json(const FreeSimplicialGroup& k) {
  json gens = json::array();
  for (int q = 0; q <= k.max_degree(); ++q)
    for (const auto& g : k.generators(q)) {
      json faces = json::array();
      for (const auto& f : g.faces) faces.push_back(f.str());
      gens.push_back({{"name", g.name}, {"degree", g.degree}, {"faces", faces}});
    }
  json counts = json::object();
  for (int q = 0; q <= k.max_degree(); ++q)
    counts[std::to_string(q)] = k.generators(q).size();
  return {{"schema_version", kSchemaVersion},
          {"kind", k.kind.empty() ? "free" : k.kind},
          {"max_degree", k.max_degree()},
          {"generators", gens},
          {"generator_counts", counts},
          {"notes", k.notes},
          {"identity_check", {{"violations", k.identity_violations()}}}};
}

json chain_to_json(const Chain& c) {
  json terms = json::array();
  for (const auto& [t, n] : c.terms()) {
    json entries = json::array();
    for (const auto& w : t.entries) entries.push_back(w.str());
    terms.push_back({{"q", t.q}, {"entries", entries}, {"coeff", n.str()}});
  }
  return {{"text", c.str()}, {"terms", terms}};
}

Chain chain_from_json(const json& j) {
  const json& terms = field(j, "terms", "chain");
  if (!terms.is_array()) throw InputError("chain: 'terms' must be an array");
  Chain c;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "chain.terms[" + std::to_string(i) + "]";
    BarTuple t;
    t.q = int_field(terms[i], "q", where);
    auto entries = string_list(terms[i], "entries", where);
    for (const auto& e : entries) t.entries.push_back(word_at(e, where));
    const json& coeff = field(terms[i], "coeff", where);
    Integer n;
    try {
      n = coeff.is_string() ? Integer(coeff.get<std::string>()) : Integer(coeff.get<long long>());
    } catch (const std::exception&) {
      throw InputError(where + ": bad coefficient");
    }
    c.add(t, n);
  }
  return c;
}

json certificate_to_json(const LiftCertificate& c) {
  return {{"method", to_string(c.method)},
          {"target", chain_to_json(c.target)},
          {"solution", chain_to_json(c.solution)},
          {"residual_zero", c.residual.is_zero()},
          {"depth", c.depth},
          {"basis", c.basis},
          {"note", c.note}};
}

json cycle_to_json(const FreeSimplicialGroup& k, const CycleResult& r) {
  json steps = json::array();
  for (const auto& s : r.steps) steps.push_back(certificate_to_json(s));
  json components = json::object();
  for (int total = 0; total <= r.cycle.max_total_degree(); ++total)
    for (int kk = 1; kk <= total; ++kk) {
      Chain part = r.cycle.component(kk, total - kk);
      if (!part.is_zero())
        components["c_" + std::to_string(kk) + "," + std::to_string(total - kk)] = part.str();
    }
  CellComplex y = CellComplex::from_group(k);
  json retraction = json::object();
  for (const auto& [deg, cells] : retract_to_cellular(k, r.cycle, y)) {
    json cs = json::object();
    for (const auto& [cell, n] : cells) cs[cell] = n.str();
    retraction[std::to_string(deg)] = cs;
  }
  return {{"schema_version", kSchemaVersion},
          {"cycle", chain_to_json(r.cycle)},
          {"components", components},
          {"boundary_zero", total_boundary(k, r.cycle).is_zero()},
          {"retraction", retraction},
          {"certificate", steps}};
}

InvariantPolynomial polynomial_from_string(const std::string& s) {
  if (s == "basic") return basic_trace_form();
  auto colon = s.find(':');
  std::string head = s.substr(0, colon);
  if (colon == std::string::npos) throw InputError("unknown polynomial '" + s + "'");
  std::string arg = s.substr(colon + 1);
  try {
    std::size_t used = 0;
    if (head == "trace") {
      double scale = std::stod(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
      return trace_form(scale);
    }
    if (head == "chern") {
      int r = std::stoi(arg, &used);
      if (used != arg.size() || r < 1) throw std::invalid_argument(arg);
      return chern_polynomial(r);
    }
  } catch (const std::logic_error&) {
    throw InputError("bad polynomial argument in '" + s + "'");
  }
  throw InputError("unknown polynomial '" + s + "'");
}

InvariantPolynomial polynomial_from_descriptor(const std::string& text) {
  if (text.empty() || text.front() != '{') return polynomial_from_string(text);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("polynomial descriptor: ") + e.what());
  }
  const std::string kind = string_field(j, "kind", "polynomial");
  if (kind == "trace_form") {
    if (j.contains("scale")) return trace_form(field(j, "scale", "polynomial").get<double>());
    const std::string norm = j.value("normalization", std::string("basic"));
    if (norm != "basic") throw InputError("polynomial: unknown normalization '" + norm + "'");
    return basic_trace_form();
  }
  if (kind == "chern") {
    int r = int_field(j, "r", "polynomial");
    if (r < 1) throw InputError("polynomial: r must be positive");
    return chern_polynomial(r);
  }
  throw InputError("polynomial: unknown kind '" + kind + "'");
}

MatrixGroup group_from_descriptor(const std::string& text) {
  if (text.empty() || text.front() != '{') return MatrixGroup::parse(text);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("group descriptor: ") + e.what());
  }
  return MatrixGroup::parse(string_field(j, "family", "group") +
                            std::to_string(int_field(j, "n", "group")));
}

PlotSpec plot_from_json(const json& j, const FreeSimplicialGroup& k, const MatrixGroup& g) {
  PlotSpec spec;
  spec.descriptor = j;
  json params = j.value("params", json::object());
  std::string family;
  if (j.contains("family")) {
    family = string_field(j, "family", "plot");
    for (const auto& [key, v] : j.items())
      if (key != "family" && key != "domain") params[key] = v;
  } else {
    const json& degrees = field(j, "degrees", "plot");
    for (const auto& [q, name] : degrees.items()) {
      if (!name.is_string()) throw InputError("plot.degrees." + q + ": expected a family name");
      std::string n = name.get<std::string>();
      if (!family.empty() && n != family)
        throw InputError("plot: mixing families '" + family + "' and '" + n + "' is not supported");
      family = n;
    }
    if (family.empty()) throw InputError("plot: no degrees given");
  }
  spec.family = family;
  if (family == "s3_sweep") {
    if (RepSpace(k, 2).size() != 1 || RepSpace(k, 1).size() != 0)
      throw InputError("plot family s3_sweep needs the minimal 3-sphere complex");
    spec.plot = s3_sweep_plot(g, params.value("degree", 1));
    spec.field = s3_sweep_field(g);
  } else if (family == "constant") {
    ParamDomain d = j.contains("domain") ? domain_from_json(j.at("domain"))
                                         : ParamDomain{"box", 1, {{0.0, 1.0}}};
    spec.plot = constant_plot(k, std::min(k.max_degree(), 3), g.n(), d);
    const int dim = d.dim;
    spec.field = [dim](const std::vector<double>&, const Mat&) {
      return std::vector<double>(static_cast<std::size_t>(dim), 0.0);
    };
  } else {
    throw InputError("unknown plot family '" + family + "'");
  }
  if (j.contains("equivariant") && !j.at("equivariant").get<bool>()) spec.plot.equivariant = false;
  return spec;
}

LoopSpec loop_from_json(const json& j) {
  LoopSpec l;
  l.base = field(j, "base", "loop").get<std::vector<double>>();
  l.direction = field(j, "direction", "loop").get<std::vector<double>>();
  l.points = j.value("points", 64);
  l.closed = j.value("closed", true);
  if (l.points < 1) throw InputError("loop: points must be positive");
  if (l.base.size() != l.direction.size())
    throw InputError("loop: base and direction differ in dimension");
  return l;
}

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

}  // namespace kanform
