#include <cmath>

#include "kanform/moduli.hpp"

namespace kanform {

namespace {

double worst_magnitude(const IdentityReport& r) {
  double m = 0;
  for (const auto& row : r.rows) m = std::max(m, row.magnitude);
  return m;
}

}  // namespace

std::vector<CatalogEntry> un_generator_catalog(int genus, int n, int samples,
                                               std::mt19937_64& rng, bool verify) {
  if (genus < 0) throw InputError("genus must be nonnegative");
  if (n < 1) throw InputError("U(n) needs n >= 1");
  MatrixGroup g(Family::U, n);
  FreeSimplicialGroup k = builtin_surface(genus);
  Chain c = surface_cycle(k).cycle;

  std::vector<CatalogEntry> out;
  for (int r = 1; r <= n; ++r) {
    InvariantPolynomial q = chern_polynomial(r);
    OmegaQ omega = assemble_omega(q);
    const std::string rs = std::to_string(r);

    CatalogEntry f;
    f.name = "f_" + rs;
    f.r = r;
    f.degree = 2 * r - 2;
    f.cycle_degree = 2;
    f.free_generator = f.cycle_degree < 2 * r;
    f.chain = c.str();
    f.form = pair(k, omega.components, c);
    if (verify)
      f.closedness = worst_magnitude(
          differential_identity_check(k, g, omega.components, 2 * r, c, samples, rng));
    out.push_back(std::move(f));

    for (int j = 1; j <= genus; ++j)
      for (const char* letter : {"x", "y"}) {
        CatalogEntry b;
        const std::string gen = letter + std::to_string(j);
        b.name = "b_" + rs + "^" + gen;
        b.r = r;
        b.degree = 2 * r - 1;
        b.cycle_degree = 1;
        b.free_generator = true;
        Chain u(BarTuple{0, {Word::generator(gen)}});
        b.chain = u.str();
        b.form = pair(k, omega.components, u);
        if (verify)
          b.closedness = worst_magnitude(
              differential_identity_check(k, g, omega.components, 2 * r, u, samples, rng));
        out.push_back(std::move(b));
      }

    CatalogEntry a;
    a.name = "a_" + rs;
    a.r = r;
    a.degree = 2 * r;
    a.cycle_degree = 0;
    a.free_generator = true;
    a.chain = "1";
    EquivariantForm qa{0, 2 * r, 0, [q, r](const Point&, const Mat& x, const std::vector<Tangent>&) {
                         return q(std::vector<Mat>(static_cast<std::size_t>(r), x));
                       }};
    a.form = {{{2 * r, 0, 0}, qa}};
    if (verify) {
      auto d = total_differential({qa});
      double worst = 0;
      for (int s = 0; s < samples; ++s) {
        Mat x = g.random_algebra(rng);
        for (const auto& [key, form] : d) {
          Point p = random_point(g, form.factors, rng);
          std::vector<Tangent> v;
          for (int t = 0; t < form.j; ++t) v.push_back(random_tangent(g, form.factors, rng));
          worst = std::max(worst, std::abs(form(p, x, v)));
        }
      }
      a.closedness = worst;
    }
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace kanform
