#include "kanform/simplicial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace kanform {

// ---------------------------------------------------------------------------
// Degeneracy bookkeeping

GeneratorRef GeneratorRef::parse(const std::string& name) {
  GeneratorRef ref;
  auto dot = name.find('.');
  if (dot == std::string::npos) {
    ref.base = name;
    return ref;
  }
  ref.base = name.substr(dot + 1);
  std::string prefix = name.substr(0, dot);
  std::size_t p = 0;
  while (p < prefix.size()) {
    if (prefix[p] != 's') throw InputError("bad degeneracy prefix in '" + name + "'");
    ++p;
    std::size_t start = p;
    while (p < prefix.size() && std::isdigit(static_cast<unsigned char>(prefix[p]))) ++p;
    if (start == p) throw InputError("bad degeneracy prefix in '" + name + "'");
    ref.degeneracies.push_back(std::stoi(prefix.substr(start, p - start)));
  }
  if (ref.degeneracies.empty() || ref.base.empty())
    throw InputError("bad generator name '" + name + "'");
  for (std::size_t k = 1; k < ref.degeneracies.size(); ++k)
    if (ref.degeneracies[k] >= ref.degeneracies[k - 1])
      throw InputError("degeneracy prefix not canonical in '" + name + "'");
  return ref;
}

std::string GeneratorRef::name() const {
  if (degeneracies.empty()) return base;
  std::string out;
  for (int j : degeneracies) out += "s" + std::to_string(j);
  return out + "." + base;
}

std::vector<int> compose_degeneracy(int i, std::vector<int> ops) {
  ops.insert(ops.begin(), i);
  for (std::size_t pos = 0; pos + 1 < ops.size() && ops[pos] <= ops[pos + 1]; ++pos) {
    int a = ops[pos], b = ops[pos + 1];
    ops[pos] = b + 1;
    ops[pos + 1] = a;
  }
  return ops;
}

namespace {

Word single(std::string name) { return Word::reduce({Letter{std::move(name), 1}}); }

Word apply_degeneracy_raw(int i, const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (const auto& l : w.letters()) {
    GeneratorRef ref = GeneratorRef::parse(l.gen);
    ref.degeneracies = compose_degeneracy(i, std::move(ref.degeneracies));
    out.push_back({ref.name(), l.exp});
  }
  return Word::reduce(std::move(out));
}

// Applies the outer-first operator list `ops` (innermost last) to w.
Word apply_degeneracies(const std::vector<int>& ops, Word w) {
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) w = apply_degeneracy_raw(*it, w);
  return w;
}

void subsets(int n, int m, int start, std::vector<int>& cur,
             std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == m) {
    out.push_back(cur);
    return;
  }
  for (int v = start; v < n; ++v) {
    cur.push_back(v);
    subsets(n, m, v + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// FreeSimplicialGroup

FreeSimplicialGroup::FreeSimplicialGroup(int max_degree)
    : max_degree_(max_degree), by_degree_(static_cast<std::size_t>(max_degree) + 1) {
  if (max_degree < 1) throw InputError("max_degree must be at least 1");
}

void FreeSimplicialGroup::add_generator(const std::string& name, int degree,
                                        std::vector<Word> faces) {
  validate_generator_name(name);
  if (name.find('.') != std::string::npos)
    throw InputError("generator name '" + name + "' may not contain '.'");
  if (degree < 0 || degree > max_degree_)
    throw InputError("generator '" + name + "' has degree outside [0, max_degree]");
  if (index_.count(name)) throw InputError("duplicate generator '" + name + "'");
  if (static_cast<int>(faces.size()) != (degree == 0 ? 0 : degree + 1))
    throw InputError("generator '" + name + "' needs " + std::to_string(degree + 1) +
                     " face words");
  for (const auto& f : faces) require_degree(f, degree - 1, name.c_str());
  auto& bucket = by_degree_[static_cast<std::size_t>(degree)];
  index_[name] = {degree, bucket.size()};
  bucket.push_back({name, degree, std::move(faces)});
}

const std::vector<Generator>& FreeSimplicialGroup::generators(int q) const {
  static const std::vector<Generator> empty;
  if (q < 0 || q > max_degree_) return empty;
  return by_degree_[static_cast<std::size_t>(q)];
}

const Generator& FreeSimplicialGroup::base(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw InputError("unknown generator '" + name + "'");
  return by_degree_[static_cast<std::size_t>(it->second.first)][it->second.second];
}

int FreeSimplicialGroup::degree_of(const std::string& name) const {
  GeneratorRef ref = GeneratorRef::parse(name);
  int deg = base(ref.base).degree;
  for (auto it = ref.degeneracies.rbegin(); it != ref.degeneracies.rend(); ++it) {
    if (*it < 0 || *it > deg)
      throw InputError("degeneracy index out of range in '" + name + "'");
    ++deg;
  }
  return deg;
}

bool FreeSimplicialGroup::is_generator(const std::string& name) const {
  try {
    degree_of(name);
    return true;
  } catch (const InputError&) {
    return false;
  }
}

bool FreeSimplicialGroup::is_degenerate(const std::string& name) const {
  return name.find('.') != std::string::npos;
}

int FreeSimplicialGroup::degree_of(const Word& w, int fallback) const {
  if (w.is_identity()) return fallback;
  int q = degree_of(w.letters().front().gen);
  for (const auto& l : w.letters())
    if (degree_of(l.gen) != q)
      throw InputError("word '" + w.str() + "' mixes simplicial degrees");
  return q;
}

void FreeSimplicialGroup::require_degree(const Word& w, int q, const char* what) const {
  for (const auto& l : w.letters()) {
    int d = degree_of(l.gen);
    if (d != q)
      throw InputError(std::string(what) + ": letter '" + l.gen + "' has degree " +
                       std::to_string(d) + ", expected " + std::to_string(q));
  }
}

Word FreeSimplicialGroup::face_letter(const GeneratorRef& g, int i) const {
  std::vector<int> prefix;
  for (std::size_t k = 0; k < g.degeneracies.size(); ++k) {
    int j = g.degeneracies[k];
    if (i < j) {
      prefix.push_back(j - 1);
    } else if (i == j || i == j + 1) {
      GeneratorRef rest{{g.degeneracies.begin() + static_cast<long>(k) + 1,
                         g.degeneracies.end()},
                        g.base};
      return apply_degeneracies(prefix, single(rest.name()));
    } else {
      prefix.push_back(j);
      --i;
    }
  }
  return apply_degeneracies(prefix, base(g.base).faces.at(static_cast<std::size_t>(i)));
}

Word FreeSimplicialGroup::face_of_generator(const std::string& name, int i) const {
  int q = degree_of(name);
  if (q == 0) throw InputError("degree-0 generator '" + name + "' has no faces");
  if (i < 0 || i > q) throw InputError("face index out of range");
  return face_letter(GeneratorRef::parse(name), i);
}

Word FreeSimplicialGroup::face(int q, int i, const Word& w) const {
  if (q < 1 || i < 0 || i > q)
    throw InputError("face index " + std::to_string(i) + " out of range for degree " +
                     std::to_string(q));
  Word out;
  for (const auto& l : w.letters()) {
    if (degree_of(l.gen) != q)
      throw InputError("letter '" + l.gen + "' is not in degree " + std::to_string(q));
    Word f = face_letter(GeneratorRef::parse(l.gen), i);
    out *= (l.exp > 0 ? f : f.inverse());
  }
  return out;
}

Word FreeSimplicialGroup::degeneracy(int q, int i, const Word& w) const {
  if (q < 0 || i < 0 || i > q)
    throw InputError("degeneracy index " + std::to_string(i) + " out of range for degree " +
                     std::to_string(q));
  require_degree(w, q, "degeneracy");
  return apply_degeneracy_raw(i, w);
}

bool FreeSimplicialGroup::in_degeneracy_image(int q, int j, const Word& w) const {
  if (q < 1 || j < 0 || j >= q) return false;
  return apply_degeneracy_raw(j, face(q, j, w)) == w;
}

std::vector<std::string> FreeSimplicialGroup::all_generators(int q) const {
  std::vector<std::string> out;
  for (int p = 0; p <= q && p <= max_degree_; ++p) {
    std::vector<std::vector<int>> seqs;
    std::vector<int> cur;
    subsets(q, q - p, 0, cur, seqs);
    for (const auto& g : generators(p)) {
      for (auto s : seqs) {
        std::reverse(s.begin(), s.end());
        out.push_back(GeneratorRef{s, g.name}.name());
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> FreeSimplicialGroup::identity_violations() const {
  std::vector<std::string> bad;
  for (int q = 2; q <= max_degree_; ++q) {
    for (const auto& name : all_generators(q)) {
      Word g = single(name);
      for (int j = 1; j <= q; ++j) {
        for (int i = 0; i < j; ++i) {
          Word lhs = face(q - 1, i, face(q, j, g));
          Word rhs = face(q - 1, j - 1, face(q, i, g));
          if (lhs != rhs) {
            std::ostringstream os;
            os << "d" << i << "d" << j << "(" << name << ") = " << lhs.str() << " but d"
               << j - 1 << "d" << i << "(" << name << ") = " << rhs.str();
            bad.push_back(os.str());
          }
        }
      }
    }
  }
  return bad;
}

// ---------------------------------------------------------------------------
// Reduced simplicial sets and the loop group

int ReducedSimplicialSet::degree_of(const std::string& simplex) const {
  for (std::size_t n = 0; n < simplices.size(); ++n)
    if (std::find(simplices[n].begin(), simplices[n].end(), simplex) != simplices[n].end())
      return static_cast<int>(n);
  throw InputError("unknown simplex '" + simplex + "'");
}

std::string ReducedSimplicialSet::face(const std::string& simplex, int i) const {
  GeneratorRef g = GeneratorRef::parse(simplex);
  std::vector<int> prefix;
  std::string inner;
  bool done = false;
  for (std::size_t k = 0; k < g.degeneracies.size() && !done; ++k) {
    int j = g.degeneracies[k];
    if (i < j) {
      prefix.push_back(j - 1);
    } else if (i == j || i == j + 1) {
      inner = GeneratorRef{{g.degeneracies.begin() + static_cast<long>(k) + 1,
                            g.degeneracies.end()},
                           g.base}
                  .name();
      done = true;
    } else {
      prefix.push_back(j);
      --i;
    }
  }
  if (!done) {
    auto it = faces.find(g.base);
    if (it == faces.end() || i >= static_cast<int>(it->second.size()))
      throw InputError("no face " + std::to_string(i) + " recorded for '" + g.base + "'");
    inner = it->second[static_cast<std::size_t>(i)];
  }
  GeneratorRef r = GeneratorRef::parse(inner);
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
    r.degeneracies = compose_degeneracy(*it, std::move(r.degeneracies));
  return r.name();
}

void ReducedSimplicialSet::validate() const {
  if (simplices.empty() || simplices[0].size() != 1)
    throw InputError("simplicial set is not reduced: need exactly one 0-simplex");
  auto formal_degree = [&](const std::string& s) {
    GeneratorRef r = GeneratorRef::parse(s);
    int d = degree_of(r.base);
    for (auto it = r.degeneracies.rbegin(); it != r.degeneracies.rend(); ++it) {
      if (*it > d) throw InputError("degeneracy index out of range in '" + s + "'");
      ++d;
    }
    return d;
  };
  for (std::size_t n = 1; n < simplices.size(); ++n) {
    for (const auto& x : simplices[n]) {
      auto it = faces.find(x);
      if (it == faces.end() || it->second.size() != n + 1)
        throw InputError("simplex '" + x + "' needs " + std::to_string(n + 1) + " faces");
      for (const auto& f : it->second)
        if (formal_degree(f) != static_cast<int>(n) - 1)
          throw InputError("face '" + f + "' of '" + x + "' has wrong degree");
      if (n < 2) continue;
      for (int j = 1; j <= static_cast<int>(n); ++j)
        for (int i = 0; i < j; ++i)
          if (face(face(x, j), i) != face(face(x, i), j - 1))
            throw InputError("simplicial identity d" + std::to_string(i) + "d" +
                             std::to_string(j) + " fails on '" + x + "'");
    }
  }
}

ReducedSimplicialSet ReducedSimplicialSet::point() {
  ReducedSimplicialSet x;
  x.simplices = {{"v"}};
  return x;
}

ReducedSimplicialSet ReducedSimplicialSet::circle() {
  ReducedSimplicialSet x;
  x.simplices = {{"v"}, {"e"}};
  x.faces["e"] = {"v", "v"};
  return x;
}

ReducedSimplicialSet ReducedSimplicialSet::sphere(int n) {
  if (n < 1) throw InputError("sphere dimension must be positive");
  ReducedSimplicialSet x;
  x.simplices.assign(static_cast<std::size_t>(n) + 1, {});
  x.simplices[0] = {"v"};
  std::string cell = "e" + std::to_string(n);
  x.simplices[static_cast<std::size_t>(n)] = {cell};
  GeneratorRef vertex{{}, "v"};
  for (int k = n - 2; k >= 0; --k) vertex.degeneracies.push_back(k);
  x.faces[cell] = std::vector<std::string>(static_cast<std::size_t>(n) + 1, vertex.name());
  return x;
}

FreeSimplicialGroup kan_loop_group(const ReducedSimplicialSet& x, int max_degree) {
  x.validate();
  const std::string& vertex = x.simplices[0][0];
  auto tau = [&](const std::string& simplex) -> Word {
    GeneratorRef r = GeneratorRef::parse(simplex);
    if (r.base == vertex) return {};
    if (std::find(r.degeneracies.begin(), r.degeneracies.end(), 0) != r.degeneracies.end())
      return {};
    for (int& j : r.degeneracies) --j;
    return single(r.name());
  };
  FreeSimplicialGroup k(max_degree);
  k.kind = "kan";
  int top = std::min(x.dimension(), max_degree + 1);
  for (int n = 1; n <= top; ++n) {
    for (const auto& s : x.simplices[static_cast<std::size_t>(n)]) {
      std::vector<Word> faces;
      if (n >= 2) {
        faces.push_back(tau(x.face(s, 1)) * tau(x.face(s, 0)).inverse());
        for (int i = 1; i <= n - 1; ++i) faces.push_back(tau(x.face(s, i + 1)));
      }
      k.add_generator(s, n - 1, std::move(faces));
    }
  }
  return k;
}

Word surface_relator(int genus) {
  Word r;
  for (int j = 1; j <= genus; ++j) {
    Word x = single("x" + std::to_string(j));
    Word y = single("y" + std::to_string(j));
    r *= x * y * x.inverse() * y.inverse();
  }
  return r;
}

FreeSimplicialGroup builtin_surface(int genus, int max_degree) {
  if (genus < 0) throw InputError("genus must be nonnegative");
  FreeSimplicialGroup k(max_degree);
  k.kind = "surface";
  k.notes["genus"] = std::to_string(genus);
  for (int j = 1; j <= genus; ++j) {
    k.add_generator("x" + std::to_string(j), 0, {});
    k.add_generator("y" + std::to_string(j), 0, {});
  }
  k.add_generator("r", 1, {surface_relator(genus), Word{}});
  return k;
}

ThreefoldData ThreefoldData::minimal_s3() {
  ThreefoldData d;
  d.sigma_faces = {Word{}, Word{}, Word{}};
  return d;
}

FreeSimplicialGroup builtin_threefold(const ThreefoldData& data, int max_degree) {
  if (max_degree < 2) throw InputError("threefold complexes need max_degree >= 2");
  FreeSimplicialGroup k(max_degree);
  k.kind = "threefold";
  for (const auto& g : data.generators) k.add_generator(g, 0, {});
  for (const auto& [name, rel] : data.relators) k.add_generator(name, 1, {rel, Word{}});
  if (data.sigma_faces.size() != 3) throw InputError("sigma needs exactly three face words");
  k.add_generator(data.sigma_name, 2, data.sigma_faces);
  auto bad = k.identity_violations();
  if (!bad.empty()) throw InputError("simplicial identity violation: " + bad.front());

  // The relator part of d_0 - d_1 + d_2 is the cellular boundary of the
  // 3-cell and has to vanish.
  ExponentVector total = exponent_sums(data.sigma_faces[0]);
  total += scaled(exponent_sums(data.sigma_faces[1]), -1);
  total += exponent_sums(data.sigma_faces[2]);
  for (const auto& [name, rel] : data.relators) {
    auto it = total.find(name);
    if (it != total.end())
      throw InputError("sigma face data inconsistent: relator '" + name +
                       "' has exponent sum " + std::to_string(it->second) +
                       " in d0 - d1 + d2");
  }
  std::string faces;
  for (std::size_t i = 0; i < 3; ++i)
    faces += (i ? ", " : "") + data.sigma_faces[i].str();
  k.notes["sigma_faces"] = faces;
  return k;
}

}  // namespace kanform
