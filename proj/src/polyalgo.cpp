#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>

#include "tanlim/polyring.hpp"

namespace tanlim {

namespace {

MPoly one_like(const MPoly& f) { return MPoly::constant(f.vars(), 1); }

bool univariate_in(const MPoly& f, std::size_t var) {
  for (std::size_t i = 0; i < f.nvars(); ++i)
    if (i != var && f.involves(i)) return false;
  return true;
}

}  // namespace

Rat rational_content(const MPoly& f) {
  if (f.is_zero()) return 0;
  Int num = 0, den = 1;
  for (const auto& [e, c] : f.terms()) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  Rat r(num, den);
  r.canonicalize();
  if (f.leading_coeff() < 0) r = -r;
  return r;
}

MPoly normalize(const MPoly& f) {
  if (f.is_zero()) return f;
  Rat c = rational_content(f);
  MPoly r = f;
  r *= Rat(1) / c;
  return r;
}

std::optional<MPoly> divide_exact(const MPoly& f, const MPoly& g) {
  if (g.is_zero()) return std::nullopt;
  if (f.vars() != g.vars()) throw StructuralError("mismatched variable lists");
  if (g.is_constant()) {
    MPoly q = f;
    q *= Rat(1) / g.constant_term();
    return q;
  }
  MPoly q(f.vars());
  MPoly r = f;
  const Exponent& eg = g.leading_exponent();
  const Rat& cg = g.leading_coeff();
  Exponent d(f.nvars());
  while (!r.is_zero()) {
    const Exponent& er = r.leading_exponent();
    for (std::size_t i = 0; i < d.size(); ++i) {
      d[i] = er[i] - eg[i];
      if (d[i] < 0) return std::nullopt;
    }
    Rat c = r.leading_coeff() / cg;
    q.add_term(d, c);
    for (const auto& [e, k] : g.terms()) {
      Exponent t = e;
      for (std::size_t i = 0; i < t.size(); ++i) t[i] += d[i];
      r.add_term(t, -c * k);
    }
  }
  return q;
}

MPoly pseudo_remainder(const MPoly& a, const MPoly& b, std::size_t var) {
  int db = b.degree(var);
  if (db < 0) throw DegenerateInput("pseudo-remainder by zero");
  MPoly r = a;
  int dr = r.degree(var);
  if (dr < db) return r;
  MPoly lb = leading_coeff_in(b, var);
  int steps = dr - db + 1;
  while (!r.is_zero() && (dr = r.degree(var)) >= db) {
    MPoly lr = leading_coeff_in(r, var);
    Exponent sh(a.nvars(), 0);
    sh[var] = dr - db;
    r = lb * r - lr * MPoly::monomial(a.vars(), sh) * b;
    --steps;
  }
  if (steps > 0) r *= pow(lb, steps);
  return r;
}

MPoly content_in(const MPoly& f, std::size_t var) {
  if (f.is_zero()) return f;
  auto cs = coefficients_in(f, var);
  MPoly g(f.vars());
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return one_like(f);
  }
  return g;
}

MPoly primitive_part_in(const MPoly& f, std::size_t var) {
  if (f.is_zero()) return f;
  return *divide_exact(f, content_in(f, var));
}

namespace {

// Sufficient test for gcd(a, b) to be free of v: the images at a point
// where both leading coefficients survive are coprime.
bool coprime_in(const MPoly& a, const MPoly& b, std::size_t v) {
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (i != v && (a.involves(i) || b.involves(i))) rest.push_back(i);
  if (rest.empty()) return false;
  for (int attempt = 0; attempt < 3; ++attempt) {
    MPoly x = a, y = b;
    for (std::size_t k = 0; k < rest.size(); ++k) {
      Rat value(static_cast<long>(3 + 7 * k + 5 * attempt), static_cast<long>(2 + k + attempt));
      x = specialize(x, rest[k], value);
      y = specialize(y, rest[k], value);
    }
    if (x.degree(v) != a.degree(v) || y.degree(v) != b.degree(v)) continue;
    return gcd(x, y).is_constant();
  }
  return false;
}

}  // namespace

MPoly gcd(const MPoly& f, const MPoly& g) {
  if (f.vars() != g.vars()) throw StructuralError("mismatched variable lists");
  if (f.is_zero()) return normalize(g);
  if (g.is_zero()) return normalize(f);
  if (f.is_constant() || g.is_constant()) return one_like(f);
  std::size_t v = f.nvars();
  for (std::size_t i = f.nvars(); i-- > 0;)
    if (f.involves(i) || g.involves(i)) {
      v = i;
      break;
    }
  if (!f.involves(v)) return gcd(f, content_in(g, v));
  if (!g.involves(v)) return gcd(content_in(f, v), g);
  MPoly cf = content_in(f, v), cg = content_in(g, v);
  MPoly c = gcd(cf, cg);
  MPoly a = *divide_exact(f, cf), b = *divide_exact(g, cg);
  if (coprime_in(a, b, v)) return normalize(c);
  if (a.degree(v) < b.degree(v)) std::swap(a, b);
  while (true) {
    MPoly r = pseudo_remainder(a, b, v);
    if (r.is_zero()) return normalize(c * primitive_part_in(b, v));
    if (!r.involves(v)) return normalize(c);
    a = std::move(b);
    b = normalize(primitive_part_in(r, v));
  }
}

MPoly squarefree_part(const MPoly& f) {
  if (f.is_zero()) return f;
  if (f.is_constant()) return one_like(f);
  Exponent low(f.nvars(), std::numeric_limits<int>::max());
  for (const auto& [e, c] : f.terms())
    for (std::size_t i = 0; i < low.size(); ++i) low[i] = std::min(low[i], e[i]);
  if (std::any_of(low.begin(), low.end(), [](int k) { return k > 0; })) {
    MPoly mono = MPoly::monomial(f.vars(), low);
    MPoly r = squarefree_part(*divide_exact(f, mono));
    for (std::size_t i = 0; i < low.size(); ++i)
      if (low[i] > 0) r *= MPoly::variable(f.vars(), i);
    return normalize(r);
  }
  MPoly g = f;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    if (!f.involves(i)) continue;
    g = gcd(g, partial(f, i));
    if (g.is_constant()) break;
  }
  return normalize(*divide_exact(f, g));
}

MPoly resultant(const MPoly& f, const MPoly& g, std::size_t var) {
  if (f.vars() != g.vars()) throw StructuralError("mismatched variable lists");
  if (f.is_zero() || g.is_zero()) return MPoly(f.vars());
  int a = f.degree(var), b = g.degree(var);
  if (a == 0 && b == 0) throw DegenerateInput("resultant of two polynomials free of the variable");
  if (a == 0) return pow(f, b);
  if (b == 0) return pow(g, a);
  MPoly A = f, B = g;
  Rat s = 1;
  if (a < b) {
    std::swap(A, B);
    if (a % 2 && b % 2) s = -1;
  }
  MPoly gg = one_like(f), h = one_like(f);
  while (true) {
    int da = A.degree(var), db = B.degree(var);
    int delta = da - db;
    if (da % 2 && db % 2) s = -s;
    MPoly r = pseudo_remainder(A, B, var);
    A = std::move(B);
    B = *divide_exact(r, gg * pow(h, delta));
    gg = leading_coeff_in(A, var);
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = gg;
    } else {
      h = *divide_exact(pow(gg, delta), pow(h, delta - 1));
    }
    if (B.is_zero()) return MPoly(f.vars());
    if (B.degree(var) == 0) {
      int dA = A.degree(var);
      MPoly lb = B;
      MPoly res = dA == 1 ? lb : *divide_exact(pow(lb, dA), pow(h, dA - 1));
      res *= s;
      return res;
    }
  }
}

MPoly resultant(const MPoly& f, const MPoly& g, const std::string& var) {
  return resultant(f, g, f.index_of(var));
}

MPoly determinant(std::vector<std::vector<MPoly>> m, const std::vector<std::string>& vars) {
  std::size_t n = m.size();
  if (n == 0) return MPoly::constant(vars, 1);
  MPoly prev = MPoly::constant(vars, 1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return MPoly(vars);
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MPoly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = *divide_exact(t, prev);
      }
      m[i][k] = MPoly(vars);
    }
    prev = m[k][k];
  }
  MPoly d = m[n - 1][n - 1];
  if (sign < 0) d = -d;
  return d;
}

namespace {

// Rows x^{rows_f-1} f, ..., f, x^{rows_g-1} g, ..., g as coefficient rows of
// width `width`, highest power first.
std::vector<std::vector<MPoly>> shifted_rows(const MPoly& f, const MPoly& g, std::size_t var,
                                             int rows_f, int rows_g, int width) {
  auto cf = coefficients_in(f, var);
  auto cg = coefficients_in(g, var);
  int m = static_cast<int>(cf.size()) - 1, n = static_cast<int>(cg.size()) - 1;
  std::vector<std::vector<MPoly>> rows;
  auto push = [&](const std::vector<MPoly>& c, int deg, int shift) {
    std::vector<MPoly> row(width, MPoly(f.vars()));
    // term x^{deg-i+shift} sits at column width-1-(deg-i+shift)
    for (int i = 0; i <= deg; ++i) {
      int power = i + shift;
      int col = width - 1 - power;
      if (col >= 0) row[col] = c[i];
    }
    rows.push_back(std::move(row));
  };
  for (int r = rows_f - 1; r >= 0; --r) push(cf, m, r);
  for (int r = rows_g - 1; r >= 0; --r) push(cg, n, r);
  return rows;
}

}  // namespace

MPoly resultant_sylvester(const MPoly& f, const MPoly& g, std::size_t var) {
  if (f.vars() != g.vars()) throw StructuralError("mismatched variable lists");
  if (f.is_zero() || g.is_zero()) return MPoly(f.vars());
  int m = f.degree(var), n = g.degree(var);
  if (m == 0 && n == 0) throw DegenerateInput("resultant of two polynomials free of the variable");
  auto rows = shifted_rows(f, g, var, n, m, m + n);
  return determinant(std::move(rows), f.vars());
}

MPoly subresultant(const MPoly& f, const MPoly& g, std::size_t var, int k) {
  int m = f.degree(var), n = g.degree(var);
  if (m < n) return subresultant(g, f, var, k);
  if (k > n) throw DegenerateInput("subresultant index above degree");
  if (k == n) return g;
  int size = m + n - 2 * k;
  int width = m + n - k;
  auto rows = shifted_rows(f, g, var, n - k, m - k, width);
  MPoly s(f.vars());
  for (int j = 0; j <= k; ++j) {
    std::vector<std::vector<MPoly>> mat(size);
    for (int r = 0; r < size; ++r) {
      mat[r].assign(rows[r].begin(), rows[r].begin() + (size - 1));
      mat[r].push_back(rows[r][width - 1 - j]);
    }
    MPoly d = determinant(std::move(mat), f.vars());
    if (d.is_zero()) continue;
    Exponent e(f.nvars(), 0);
    e[var] = j;
    s += d * MPoly::monomial(f.vars(), e);
  }
  return s;
}

namespace {

std::vector<Int> small_factor_divisors(Int n) {
  n = abs(n);
  std::vector<std::pair<Int, int>> factors;
  for (unsigned long p = 2; p < 200000 && Int(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    int k = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++k;
    }
    if (k) factors.emplace_back(Int(p), k);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<Int> divs{1};
  for (const auto& [p, k] : factors) {
    std::size_t base = divs.size();
    Int pk = 1;
    for (int i = 1; i <= k; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  return divs;
}

}  // namespace

std::vector<Rat> rational_roots(const MPoly& f, std::size_t var) {
  if (!univariate_in(f, var)) throw StructuralError("rational_roots expects a univariate polynomial");
  if (f.is_zero()) throw DegenerateInput("roots of the zero polynomial");
  MPoly sf = squarefree_part(f);
  auto cs = coefficients_in(sf, var);
  std::vector<Rat> roots;
  std::size_t low = 0;
  while (low < cs.size() && cs[low].is_zero()) ++low;
  if (low > 0) roots.emplace_back(0);
  if (cs.size() - low <= 1) return roots;
  std::vector<Int> c;
  for (std::size_t i = low; i < cs.size(); ++i) c.push_back(cs[i].constant_term().get_num());
  auto ps = small_factor_divisors(c.front());
  auto qs = small_factor_divisors(c.back());
  std::set<Rat> found;
  for (const auto& q : qs)
    for (const auto& p : ps)
      for (int sgn : {1, -1}) {
        Rat r(p * sgn, q);
        r.canonicalize();
        if (found.count(r)) continue;
        Rat acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * r + c[i];
        if (acc == 0) found.insert(r);
      }
  roots.insert(roots.end(), found.begin(), found.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}

int root_multiplicity(const MPoly& f, std::size_t var, const Rat& r) {
  if (f.is_zero()) throw DegenerateInput("multiplicity in the zero polynomial");
  std::vector<Rat> pt(f.nvars(), 0);
  pt[var] = r;
  int k = 0;
  MPoly g = f;
  while (!g.is_zero() && g.eval(pt) == 0) {
    g = partial(g, var);
    ++k;
  }
  return k;
}

}  // namespace tanlim
