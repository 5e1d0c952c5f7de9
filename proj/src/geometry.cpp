#include "tanlim/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "series.hpp"

namespace tanlim {

ProjPoint ProjPoint::of(const Rat& a, const Rat& b, const Rat& c) {
  if (a == 0 && b == 0 && c == 0) throw DegenerateInput("projective point (0:0:0)");
  Int l = 1;
  for (const Rat* r : {&a, &b, &c}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r->get_den_mpz_t());
  Rat sa = a * l, sb = b * l, sc = c * l;
  Int x = sa.get_num(), y = sb.get_num(), z = sc.get_num();
  Int g = 0;
  for (const Int* v : {&x, &y, &z}) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v->get_mpz_t());
  x /= g;
  y /= g;
  z /= g;
  int s = x != 0 ? sgn(x) : (y != 0 ? sgn(y) : sgn(z));
  if (s < 0) {
    x = -x;
    y = -y;
    z = -z;
  }
  return {x, y, z};
}

std::string ProjPoint::str() const {
  return "(" + a.get_str() + ":" + b.get_str() + ":" + c.get_str() + ")";
}

int multiplicity(const SurfaceGerm& g) {
  if (g.F.eval(g.p) != 0) throw DegenerateInput("base point is not on the surface");
  return order_at_origin(g.local());
}

MPoly tangent_cone(const SurfaceGerm& g) {
  MPoly l = g.local();
  return homogeneous_part(l, order_at_origin(l));
}

bool is_homogeneous(const MPoly& f) {
  if (f.is_zero()) return true;
  int d = f.total_degree();
  for (const auto& [e, c] : f.terms())
    if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
  return true;
}

namespace {

MPoly hessian_determinant(const MPoly& f) {
  std::size_t n = f.nvars();
  std::vector<std::vector<MPoly>> h(n, std::vector<MPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    MPoly fi = partial(f, i);
    for (std::size_t j = 0; j < n; ++j) h[i][j] = partial(fi, j);
  }
  return determinant(h, f.vars());
}

}  // namespace

bool is_union_of_planes(const MPoly& cone) {
  if (cone.is_zero() || !is_homogeneous(cone)) throw DegenerateInput("expected a nonzero homogeneous form");
  MPoly sq = squarefree_part(cone);
  int d = sq.total_degree();
  if (d <= 1) return true;
  MPoly h = hessian_determinant(sq);
  if (d == 2) return h.is_zero();
  return h.is_zero() || divide_exact(h, sq).has_value();
}

bool contains_plane(const MPoly& cone, const MPoly& linear) {
  if (linear.is_zero()) throw DegenerateInput("zero linear form");
  return divide_exact(cone, linear).has_value();
}

namespace {

// linear factors of a binary form in variables (u, v) of a 3-variable ring
void binary_linear_factors(const MPoly& b, std::size_t u, std::size_t v, std::vector<MPoly>& out) {
  if (b.is_constant()) return;
  const auto& vars = b.vars();
  MPoly t = specialize(b, u, 1);
  if (t.degree(v) < b.total_degree()) out.push_back(MPoly::variable(vars, u));
  if (t.degree(v) <= 0) return;
  for (const Rat& r : rational_roots(t, v))
    out.push_back(normalize(MPoly::variable(vars, v) - MPoly::constant(vars, r) * MPoly::variable(vars, u)));
}

}  // namespace

std::vector<MPoly> rational_linear_factors(const MPoly& form, MPoly* rest) {
  if (form.nvars() != 3 || !is_homogeneous(form) || form.is_zero())
    throw DegenerateInput("expected a nonzero ternary form");
  const auto& vars = form.vars();
  MPoly sq = squarefree_part(form);
  std::vector<MPoly> out;
  MPoly zfree = sq.degree(2) > 0 ? content_in(sq, 2) : sq;
  binary_linear_factors(normalize(zfree), 0, 1, out);
  MPoly c = sq.degree(2) > 0 ? *divide_exact(sq, zfree) : MPoly::constant(vars, 1);
  if (!c.is_constant()) {
    MPoly z = MPoly::variable(vars, 2), x = MPoly::variable(vars, 0), y = MPoly::variable(vars, 1);
    std::vector<Rat> rs{0}, ss{0};
    MPoly cx = specialize(specialize(c, 1, 0), 0, 1), cy = specialize(specialize(c, 0, 0), 1, 1);
    if (cx.degree(2) > 0) rs = rational_roots(cx, 2);
    if (cy.degree(2) > 0) ss = rational_roots(cy, 2);
    for (const Rat& r : rs)
      for (const Rat& s : ss) {
        MPoly l = z - MPoly::constant(vars, r) * x - MPoly::constant(vars, s) * y;
        if (auto q = divide_exact(c, l)) {
          out.push_back(normalize(l));
          c = *q;
        }
      }
  }
  if (rest) {
    MPoly r = sq;
    for (const auto& l : out) r = *divide_exact(r, l);
    *rest = normalize(r);
  }
  return out;
}

MPoly discriminant(const MPoly& f, std::size_t drop) {
  if (f.degree(drop) < 1) throw DegenerateInput("degenerate projection: polynomial is free of " + f.vars()[drop]);
  MPoly g = squarefree_part(f);
  if (g.degree(drop) == 1) return MPoly::constant(f.vars(), 1);
  MPoly r = resultant(g, partial(g, drop), drop);
  MPoly lc = leading_coeff_in(g, drop);
  if (auto q = divide_exact(r, lc)) r = *q;
  if (r.is_zero()) throw DegenerateInput("vanishing discriminant");
  return squarefree_part(r);
}

MPoly discriminant(const SurfaceGerm& g, std::size_t drop) { return discriminant(g.F, drop); }

MonomialSplit monomial_split(const MPoly& r, const std::vector<std::size_t>& vars) {
  if (r.is_zero()) throw DegenerateInput("monomial split of zero");
  MonomialSplit s;
  for (std::size_t v : vars) {
    int m = r.degree(v);
    for (const auto& [e, c] : r.terms()) m = std::min(m, e[v]);
    s.powers.push_back(m);
  }
  s.cofactor = MPoly(r.vars());
  for (const auto& [e, c] : r.terms()) {
    Exponent t = e;
    for (std::size_t i = 0; i < vars.size(); ++i) t[vars[i]] -= s.powers[i];
    s.cofactor.add_term(t, c);
  }
  return s;
}

MonomialSplit monomial_split(const MPoly& r) {
  std::vector<std::size_t> all(r.nvars());
  std::iota(all.begin(), all.end(), 0);
  return monomial_split(r, all);
}

std::vector<MPoly> sing_locus_generators(const SurfaceGerm& g) {
  MPoly l = g.local();
  std::vector<MPoly> out{l};
  for (std::size_t i = 0; i < l.nvars(); ++i) out.push_back(partial(l, i));
  return out;
}

std::optional<std::size_t> projection_for(const MPoly& local, const std::vector<std::size_t>& divisor) {
  for (std::size_t v = local.nvars(); v-- > 0;) {
    if (std::find(divisor.begin(), divisor.end(), v) != divisor.end()) continue;
    MPoly axis = local;
    for (std::size_t j = 0; j < local.nvars(); ++j)
      if (j != v) axis = specialize(axis, j, 0);
    if (!axis.is_zero()) return v;
  }
  return std::nullopt;
}

std::optional<std::vector<Rat>> series_root(const MPoly& p, std::size_t n, std::size_t a, std::size_t K) {
  for (std::size_t j = 0; j < p.nvars(); ++j)
    if (j != n && j != a && p.involves(j)) throw StructuralError("series_root expects two variables");
  Exponent ea(p.nvars(), 0);
  ea[a] = 1;
  Rat slope = p.coeff(ea);
  if (p.constant_term() != 0 || slope == 0) return std::nullopt;
  series::Series A(K, 0);
  for (std::size_t i = 1; i < K; ++i) {
    series::Series head(A.begin(), A.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    A[i] = -series::along(p, n, {{a, head}}, i + 1)[i] / slope;
  }
  return A;
}

std::optional<MPoly> polynomial_root(const MPoly& p, std::size_t n, std::size_t a) {
  auto A = series_root(p, n, a, static_cast<std::size_t>(std::max(p.degree(n), 0)) + 1);
  if (!A) return std::nullopt;
  MPoly r = series::to_poly(*A, n, p.vars());
  if (!substitute(p, {{p.vars()[a], r}}).is_zero()) return std::nullopt;
  return r;
}

std::size_t curve_precision(const MPoly& G, const CurveParam& c) {
  if (c.precision) return c.precision;
  int d = std::max({G.total_degree(), c.A.total_degree(), c.Z.total_degree()});
  return static_cast<std::size_t>(4 * d + 8);
}

namespace {

// Projection of Sing(G) along `drop`, squarefree and free of powers of n.
MPoly sing_projection(const MPoly& G, std::size_t drop, std::size_t n) {
  MPoly P(G.vars());
  if (G.degree(drop) <= 0) return P;
  for (std::size_t v = 0; v < G.nvars(); ++v) {
    MPoly d = partial(G, v);
    if (d.is_zero()) continue;
    MPoly r = resultant(G, d, drop);
    if (r.is_zero()) continue;
    P = P.is_zero() ? r : gcd(P, r);
  }
  if (P.is_zero()) return P;
  return normalize(monomial_split(squarefree_part(P), {n}).cofactor);
}

}  // namespace

SingCurve log_sing_curve(const SurfaceGerm& g, std::size_t drop) {
  if (g.divisor.size() != 1) throw DegenerateInput("Sing^N needs a smooth divisor at the base point");
  std::size_t n = g.divisor[0], z = drop;
  std::size_t a = 3 - n - z;
  MPoly G = g.local();
  SingCurve out;
  auto unresolved = [&](std::string note) {
    out.status = SingCurve::Unresolved;
    out.note = std::move(note);
    return out;
  };
  MPoly P = sing_projection(G, z, n);
  if (P.is_zero()) return unresolved("all eliminants vanish");
  if (P.is_constant() || P.constant_term() != 0) return out;
  MPoly q = specialize(P, n, 0);
  if (q.is_zero()) return unresolved("singular locus contains a line of N");
  if (root_multiplicity(q, a, 0) > 1) {
    out.status = SingCurve::NotSmoothTransversal;
    out.note = "several singular branches or tangency over the base point";
    return out;
  }
  MPoly P2 = sing_projection(G, a, n);
  if (P2.is_zero()) return unresolved("all eliminants vanish");
  if (P2.is_constant() || P2.constant_term() != 0) return out;
  MPoly q2 = specialize(P2, n, 0);
  if (q2.is_zero() || root_multiplicity(q2, z, 0) > 1) return unresolved("singular points collide over the base point");
  std::size_t K = static_cast<std::size_t>(4 * G.total_degree() + 8);
  auto A = series_root(P, n, a, K);
  auto Z = series_root(P2, n, z, K);
  if (!A || !Z) return unresolved("no branch through the base point");
  for (const MPoly& f : {G, partial(G, 0), partial(G, 1), partial(G, 2)})
    if (!series::is_zero(series::along(f, n, {{a, *A}, {z, *Z}}, K))) return unresolved("eliminated curve is not singular");
  out.status = SingCurve::Smooth;
  out.param = CurveParam{n, a, z, series::to_poly(*A, n, G.vars()), series::to_poly(*Z, n, G.vars()), K};
  return out;
}

namespace {

MPoly truncate(MPoly f, std::size_t var, std::size_t K) {
  MPoly r(f.vars());
  for (const auto& [e, c] : f.terms())
    if (static_cast<std::size_t>(e[var]) < K) r.add_term(e, c);
  return r;
}

}  // namespace

bool equimultiple_along(const SurfaceGerm& g, const CurveParam& curve) {
  MPoly G = g.local();
  const auto& vars = G.vars();
  std::size_t K = curve_precision(G, curve);
  std::vector<std::string> target{"t_"};
  target.insert(target.end(), vars.begin(), vars.end());
  MPoly t = MPoly::variable(target, 0);
  auto lift = [&](const MPoly& f) { return substitute(f, {{vars[curve.n], t}}, target); };
  auto local_var = [&](std::size_t i) { return MPoly::variable(target, i + 1); };
  // truncated powers of n -> t + n', a -> A(t) + a', z -> Z(t) + z'
  std::vector<std::pair<std::size_t, MPoly>> shifts{{curve.n, t + local_var(curve.n)},
                                                    {curve.a, lift(curve.A) + local_var(curve.a)},
                                                    {curve.z, lift(curve.Z) + local_var(curve.z)}};
  std::vector<std::vector<MPoly>> powers(3);
  auto power = [&](std::size_t i, int k) -> const MPoly& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(MPoly::constant(target, 1));
    while (pw.size() <= static_cast<std::size_t>(k)) pw.push_back(truncate(pw.back() * shifts[i].second, 0, K));
    return pw[static_cast<std::size_t>(k)];
  };
  MPoly moved(target);
  for (const auto& [e, c] : G.terms()) {
    MPoly term = MPoly::constant(target, c);
    for (std::size_t i = 0; i < 3; ++i) term = truncate(term * power(i, e[shifts[i].first]), 0, K);
    moved += term;
  }
  if (moved.is_zero()) return false;
  int generic = moved.total_degree();
  for (const auto& [e, c] : moved.terms()) generic = std::min(generic, std::accumulate(e.begin() + 1, e.end(), 0));
  // Compare with the part of the tangent cone through the curve's tangent, so
  // that branches missing the curve do not count.
  int m = order_at_origin(G);
  MPoly cone = homogeneous_part(G, m);
  std::vector<Rat> tau(G.nvars(), 0);
  tau[curve.n] = 1;
  auto slope = [&](const MPoly& f) {
    Exponent e(G.nvars(), 0);
    e[curve.n] = 1;
    return f.coeff(e);
  };
  tau[curve.a] = slope(curve.A);
  tau[curve.z] = slope(curve.Z);
  MPoly rest = cone;
  int through = 0;
  for (const auto& l : rational_linear_factors(cone)) {
    while (auto q = divide_exact(rest, l)) {
      rest = *q;
      if (l.eval(tau) == 0) ++through;
    }
  }
  if (!rest.is_constant() && rest.eval(tau) == 0) through += rest.total_degree();
  return generic == through;
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::No: return "no";
    case Tri::Yes: return "yes";
    default: return "unknown";
  }
}

bool contour_predicate_smooth(const SurfaceGerm& g, std::size_t drop) {
  return contour_at_origin(contour_data(g.local(), drop, g.divisor)) != Tri::No;
}

bool quasi_ordinary_at(const SurfaceGerm& g, std::size_t drop) {
  MPoly d = discriminant(g.local(), drop);
  for (std::size_t v : g.divisor) d *= MPoly::variable(d.vars(), v);
  d = squarefree_part(d);
  if (d.constant_term() != 0) return true;
  int m = order_at_origin(d);
  if (m == 1) return true;
  if (m > 2) return false;
  MPoly q = homogeneous_part(d, 2);
  std::vector<std::size_t> base;
  for (std::size_t i = 0; i < q.nvars(); ++i)
    if (i != drop) base.push_back(i);
  Exponent e(q.nvars(), 0);
  auto co = [&](int i, int j) {
    Exponent t = e;
    t[base[0]] = i;
    t[base[1]] = j;
    return q.coeff(t);
  };
  return co(1, 1) * co(1, 1) - 4 * co(2, 0) * co(0, 2) != 0;
}

}  // namespace tanlim
