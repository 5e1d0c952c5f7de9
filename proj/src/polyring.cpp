#include "tanlim/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tanlim {

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MPoly::MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) throw StructuralError("duplicate variable " + vars_[i]);
}

MPoly MPoly::constant(const std::vector<std::string>& vars, const Rat& c) {
  MPoly p(vars);
  p.add_term(Exponent(vars.size(), 0), c);
  return p;
}

MPoly MPoly::variable(const std::vector<std::string>& vars, const std::string& name) {
  MPoly p(vars);
  return variable(vars, p.index_of(name));
}

MPoly MPoly::variable(const std::vector<std::string>& vars, std::size_t index) {
  if (index >= vars.size()) throw StructuralError("variable index out of range");
  Exponent e(vars.size(), 0);
  e[index] = 1;
  return monomial(vars, std::move(e));
}

MPoly MPoly::monomial(const std::vector<std::string>& vars, Exponent e, const Rat& c) {
  MPoly p(vars);
  if (e.size() != vars.size()) throw StructuralError("exponent length mismatch");
  p.add_term(e, c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rat MPoly::constant_term() const { return coeff(Exponent(vars_.size(), 0)); }

Rat MPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

int MPoly::degree(std::size_t var) const {
  if (var >= vars_.size()) throw StructuralError("variable index out of range");
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

bool MPoly::involves(std::size_t var) const { return degree(var) > 0; }

std::optional<std::size_t> MPoly::find_var(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

std::size_t MPoly::index_of(const std::string& name) const {
  auto i = find_var(name);
  if (!i) throw StructuralError("unknown variable " + name);
  return *i;
}

void MPoly::add_term(const Exponent& e, const Rat& c) {
  if (e.size() != vars_.size()) throw StructuralError("exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MPoly::require_same_vars(const MPoly& o) const {
  if (vars_ != o.vars_) throw StructuralError("mismatched variable lists");
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.require_same_vars(b);
  MPoly r(a.vars_);
  Exponent e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool operator==(const MPoly& a, const MPoly& b) {
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
  if (point.size() != vars_.size()) throw StructuralError("point dimension mismatch");
  Rat sum = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      Rat p;
      mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), e[i]);
      t *= p;
    }
    sum += t;
  }
  return sum;
}

std::string to_string(const Rat& r) { return r.get_str(); }

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat mag = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    bool unit_monomial = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
    bool need_star = false;
    if (mag != 1 || unit_monomial) {
      out << mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) out << "*";
      out << vars_[i];
      if (e[i] > 1) out << "^" << e[i];
      need_star = true;
    }
  }
  return out.str();
}

MPoly add(const MPoly& a, const MPoly& b) { return a + b; }
MPoly mul(const MPoly& a, const MPoly& b) { return a * b; }

MPoly pow(const MPoly& a, unsigned k) {
  MPoly result = MPoly::constant(a.vars(), 1);
  MPoly base = a;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

MPoly substitute(const MPoly& f, const std::map<std::string, MPoly>& bindings,
                 const std::vector<std::string>& target) {
  for (const auto& [name, img] : bindings) {
    f.index_of(name);
    if (img.vars() != target) throw StructuralError("binding image over wrong variables");
  }
  std::vector<MPoly> images;
  images.reserve(f.nvars());
  for (const auto& v : f.vars()) {
    auto it = bindings.find(v);
    images.push_back(it != bindings.end() ? it->second : MPoly::variable(target, v));
  }
  // cache powers per variable
  std::vector<std::vector<MPoly>> powers(f.nvars());
  auto power_of = [&](std::size_t i, int k) -> const MPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MPoly::constant(target, 1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  MPoly r(target);
  for (const auto& [e, c] : f.terms()) {
    MPoly t = MPoly::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= power_of(i, e[i]);
    r += t;
  }
  return r;
}

MPoly substitute(const MPoly& f, const std::map<std::string, MPoly>& bindings) {
  return substitute(f, bindings, f.vars());
}

MPoly with_vars(const MPoly& f, const std::vector<std::string>& target) {
  std::vector<int> map(f.nvars());
  MPoly probe(target);
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    auto j = probe.find_var(f.vars()[i]);
    if (!j) {
      if (f.involves(i)) throw StructuralError("variable " + f.vars()[i] + " missing in target");
      map[i] = -1;
    } else {
      map[i] = static_cast<int>(*j);
    }
  }
  MPoly r(target);
  for (const auto& [e, c] : f.terms()) {
    Exponent t(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (map[i] >= 0) t[map[i]] += e[i];
    r.add_term(t, c);
  }
  return r;
}

MPoly partial(const MPoly& f, std::size_t var) {
  if (var >= f.nvars()) throw StructuralError("variable index out of range");
  MPoly r(f.vars());
  for (const auto& [e, c] : f.terms()) {
    if (e[var] == 0) continue;
    Exponent d = e;
    --d[var];
    r.add_term(d, c * e[var]);
  }
  return r;
}

MPoly partial(const MPoly& f, const std::string& var) { return partial(f, f.index_of(var)); }

std::vector<MPoly> coefficients_in(const MPoly& f, std::size_t var) {
  int d = f.degree(var);
  std::vector<MPoly> out(std::max(d + 1, 0), MPoly(f.vars()));
  for (const auto& [e, c] : f.terms()) {
    Exponent t = e;
    t[var] = 0;
    out[e[var]].add_term(t, c);
  }
  return out;
}

MPoly from_coefficients(const std::vector<MPoly>& coeffs, std::size_t var) {
  if (coeffs.empty()) throw StructuralError("empty coefficient list");
  MPoly r(coeffs.front().vars());
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (const auto& [e, c] : coeffs[k].terms()) {
      Exponent t = e;
      t[var] += static_cast<int>(k);
      r.add_term(t, c);
    }
  return r;
}

MPoly leading_coeff_in(const MPoly& f, std::size_t var) {
  if (f.is_zero()) return f;
  return coefficients_in(f, var).back();
}

MPoly specialize(const MPoly& f, std::size_t var, const Rat& value) {
  MPoly r(f.vars());
  std::vector<Rat> powers{1};
  for (const auto& [e, c] : f.terms()) {
    while (static_cast<int>(powers.size()) <= e[var]) powers.push_back(powers.back() * value);
    Exponent t = e;
    t[var] = 0;
    r.add_term(t, c * powers[e[var]]);
  }
  return r;
}

int order_at_origin(const MPoly& f) {
  if (f.is_zero()) throw DegenerateInput("order of the zero polynomial");
  int m = f.total_degree();
  for (const auto& [e, c] : f.terms()) m = std::min(m, std::accumulate(e.begin(), e.end(), 0));
  return m;
}

MPoly homogeneous_part(const MPoly& f, int d) {
  MPoly r(f.vars());
  for (const auto& [e, c] : f.terms())
    if (std::accumulate(e.begin(), e.end(), 0) == d) r.add_term(e, c);
  return r;
}

MPoly translate(const MPoly& f, const std::vector<Rat>& p) {
  if (p.size() != f.nvars()) throw StructuralError("point dimension mismatch");
  std::map<std::string, MPoly> b;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    b.emplace(f.vars()[i], MPoly::variable(f.vars(), i) + MPoly::constant(f.vars(), p[i]));
  }
  if (b.empty()) return f;
  return substitute(f, b);
}

}  // namespace tanlim
