#include "tanlim/geometry.hpp"

#include "series.hpp"

namespace tanlim {

namespace {

bool through_origin(const MPoly& f) { return !f.is_constant() && f.constant_term() == 0; }

MPoly at_base(const MPoly& f, std::size_t keep) {
  MPoly r = f;
  for (std::size_t j = 0; j < f.nvars(); ++j)
    if (j != keep) r = specialize(r, j, 0);
  return r;
}

// Critical values over the group's components near the origin hit z = 0?
Tri plain_test(const ContourGroup& g, std::size_t drop) {
  MPoly s0 = at_base(g.sub, drop);
  if (s0.is_zero()) return Tri::Unknown;
  return s0.constant_term() == 0 ? Tri::Yes : Tri::No;
}

Tri combine(Tri acc, Tri t) {
  if (acc == Tri::Yes || t == Tri::Yes) return Tri::Yes;
  if (acc == Tri::Unknown || t == Tri::Unknown) return Tri::Unknown;
  return Tri::No;
}

}  // namespace

ContourData contour_data(const MPoly& local, std::size_t drop, const std::vector<std::size_t>& divisor) {
  ContourData d;
  d.drop = drop;
  d.G = squarefree_part(local);
  int deg = d.G.degree(drop);
  auto lc_at_origin = [&](const MPoly& g) { return at_base(leading_coeff_in(g, drop), drop).constant_term(); };
  if (deg > 0 && lc_at_origin(d.G) == 0) {
    const auto& vars = d.G.vars();
    auto cs = coefficients_in(d.G, drop);
    MPoly z = MPoly::variable(vars, drop);
    for (int c = 1; d.mobius == 0; ++c) {
      MPoly den = MPoly::constant(vars, 1) + z * Rat(c);
      MPoly g(vars);
      for (int j = 0; j <= deg; ++j) g += cs[j] * pow(z, j) * pow(den, deg - j);
      if (lc_at_origin(g) != 0) {
        d.G = normalize(g);
        d.mobius = c;
      }
    }
  }
  d.disc = discriminant(d.G, drop);
  d.cofactor = normalize(monomial_split(d.disc, divisor).cofactor);
  MPoly gz = partial(d.G, drop);
  MPoly rem = d.cofactor;
  for (int k = 1; k < deg && !rem.is_constant(); ++k) {
    MPoly s = subresultant(d.G, gz, drop, k);
    if (s.degree(drop) < k) continue;
    MPoly psc = coefficients_in(s, drop)[k];
    MPoly common = gcd(rem, psc);
    MPoly part = *divide_exact(rem, common);
    if (!part.is_constant()) d.groups.push_back({k, normalize(part), s});
    rem = common;
  }
  d.leftover = normalize(rem);
  return d;
}

Tri contour_at_origin(const ContourData& d) {
  Tri acc = Tri::No;
  for (const auto& g : d.groups)
    if (through_origin(g.factor)) acc = combine(acc, plain_test(g, d.drop));
  if (through_origin(d.leftover)) acc = combine(acc, Tri::Unknown);
  return acc;
}

Tri contour_off_curve_at_origin(const ContourData& d, const CurveParam& c) {
  using series::Series;
  std::size_t K = curve_precision(d.G, c);
  Series A = series::of(c.A, c.n, K), Z = series::of(c.Z, c.n, K);
  if (d.mobius != 0) {
    // Z in the coordinate of G
    // z = z' / (1 + c z'), so z' = z / (1 - c z)
    Series den = Z;
    for (auto& c : den) c *= -d.mobius;
    den[0] += 1;
    Z = series::mul(Z, series::inverse(den));
  }
  Tri acc = Tri::No;
  for (const auto& g : d.groups) {
    if (!through_origin(g.factor)) continue;
    if (!series::is_zero(series::along(g.factor, c.n, {{c.a, A}}, K))) {
      acc = combine(acc, plain_test(g, d.drop));
      continue;
    }
    // the singular curve's image belongs to this group; another branch of it
    // through the origin would need a finer test
    bool singular = true;
    for (std::size_t v = 0; v < g.factor.nvars(); ++v)
      if (partial(g.factor, v).constant_term() != 0) singular = false;
    if (singular) acc = combine(acc, Tri::Unknown);
    auto cs = series::coefficients_along(g.sub, d.drop, c.n, {{c.a, A}}, K);
    // divide by z - Z(n) while it divides
    while (cs.size() > 1) {
      std::vector<Series> q(cs.size() - 1, Series(K, 0));
      Series carry(K, 0);
      for (std::size_t j = cs.size(); j-- > 1;) {
        carry = series::add(series::mul(carry, Z), cs[j]);
        q[j - 1] = carry;
      }
      Series rem = series::add(series::mul(carry, Z), cs[0]);
      if (!series::is_zero(rem)) break;
      cs = std::move(q);
    }
    std::size_t m = K;
    for (const auto& s : cs) m = std::min(m, series::order(s));
    if (m >= K) {
      acc = combine(acc, Tri::Unknown);
      continue;
    }
    acc = combine(acc, series::order(cs[0]) > m ? Tri::Yes : Tri::No);
  }
  if (through_origin(d.leftover)) acc = combine(acc, Tri::Unknown);
  return acc;
}

}  // namespace tanlim
