#include "tanlim/charts.hpp"

#include <algorithm>
#include <cctype>

namespace tanlim {

std::optional<std::size_t> ChartNode::divisor_var(const std::string& key) const {
  for (const auto& c : divisor)
    if (c.key == key) return c.var;
  return std::nullopt;
}

std::optional<std::string> ChartNode::divisor_key(std::size_t var) const {
  for (const auto& c : divisor)
    if (c.var == var) return c.key;
  return std::nullopt;
}

int BlowupTree::add_root(const MPoly& f, std::vector<DivisorComponent> divisor) {
  ChartNode root;
  root.kind = "root";
  root.vars = f.vars();
  root.strict_transform = f;
  root.divisor = std::move(divisor);
  return add(std::move(root));
}

int BlowupTree::add(ChartNode node) {
  node.id = static_cast<int>(nodes_.size());
  nodes_.push_back(std::move(node));
  return nodes_.back().id;
}

std::string BlowupTree::new_exceptional_key() { return "E" + std::to_string(++next_exceptional_); }

namespace {

std::vector<std::string> child_vars(const std::vector<std::string>& parent, int depth) {
  std::vector<std::string> out;
  for (auto name : parent) {
    while (name.size() > 1 && std::isdigit(static_cast<unsigned char>(name.back()))) name.pop_back();
    out.push_back(name + std::to_string(depth));
  }
  return out;
}

int valuation(const MPoly& f, std::size_t var) {
  if (f.is_zero()) throw DegenerateInput("valuation of the zero polynomial");
  int m = f.degree(var);
  for (const auto& [e, c] : f.terms()) m = std::min(m, e[var]);
  return m;
}

MPoly strip_power(const MPoly& f, std::size_t var, int m) {
  MPoly r(f.vars());
  for (const auto& [e, c] : f.terms()) {
    Exponent t = e;
    t[var] -= m;
    r.add_term(t, c);
  }
  return r;
}

void finish_child(ChartNode& child, const MPoly& parent_f, std::size_t exc) {
  MPoly total = substitute(parent_f, child.substitution, child.vars);
  if (total.is_zero()) throw DegenerateInput("surface vanishes identically in chart");
  int m = valuation(total, exc);
  child.exceptional_multiplicity = m;
  child.exceptional_var = exc;
  child.strict_transform = strip_power(total, exc, m);
  if (child.strict_transform.is_constant()) child.flags.push_back("center exhausts surface");
}

}  // namespace

std::array<int, 3> point_blowup(BlowupTree& tree, int node, const std::vector<Rat>& p) {
  const ChartNode parent = tree.at(node);
  const MPoly& f = parent.strict_transform;
  if (p.size() != 3 || f.nvars() != 3) throw StructuralError("point blow-up needs three coordinates");
  if (f.eval(p) != 0) throw DegenerateInput("blow-up center is not on the surface");
  std::string key = tree.new_exceptional_key();
  std::array<int, 3> ids{};
  for (std::size_t i = 0; i < 3; ++i) {
    ChartNode child;
    child.parent = node;
    child.kind = "point";
    child.depth = parent.depth + 1;
    child.vars = child_vars(parent.vars, child.depth);
    MPoly u = MPoly::variable(child.vars, i);
    for (std::size_t j = 0; j < 3; ++j) {
      MPoly img = j == i ? u : u * MPoly::variable(child.vars, j);
      child.substitution.emplace(parent.vars[j], img + MPoly::constant(child.vars, p[j]));
    }
    finish_child(child, f, i);
    for (const auto& c : parent.divisor)
      if (p[c.var] == 0 && c.var != i) child.divisor.push_back(c);
    child.divisor.push_back({key, i});
    ids[i] = tree.add(std::move(child));
  }
  return ids;
}

std::array<int, 2> line_blowup(BlowupTree& tree, int node, std::size_t a, std::size_t b) {
  const ChartNode parent = tree.at(node);
  const MPoly& f = parent.strict_transform;
  if (a == b || a >= 3 || b >= 3) throw StructuralError("unsupported center: not a coordinate line");
  std::string key = tree.new_exceptional_key();
  std::array<int, 2> ids{};
  for (int k = 0; k < 2; ++k) {
    // k = 0: exceptional coordinate is x_b; k = 1: x_a
    std::size_t exc = k == 0 ? b : a;
    std::size_t other = k == 0 ? a : b;
    ChartNode child;
    child.parent = node;
    child.kind = "line";
    child.depth = parent.depth + 1;
    child.vars = child_vars(parent.vars, child.depth);
    for (std::size_t j = 0; j < 3; ++j) {
      MPoly img = MPoly::variable(child.vars, j);
      if (j == other) img *= MPoly::variable(child.vars, exc);
      child.substitution.emplace(parent.vars[j], img);
    }
    finish_child(child, f, exc);
    for (const auto& c : parent.divisor)
      if (c.var != exc) child.divisor.push_back(c);
    child.divisor.push_back({key, exc});
    ids[k] = tree.add(std::move(child));
  }
  return ids;
}

int coordinate_change(BlowupTree& tree, int node, const std::map<std::string, MPoly>& substitution) {
  const ChartNode parent = tree.at(node);
  ChartNode child;
  child.parent = node;
  child.kind = "change";
  child.depth = parent.depth;
  child.vars = parent.vars;
  child.substitution = substitution;
  child.strict_transform = substitute(parent.strict_transform, substitution, child.vars);
  child.divisor = parent.divisor;
  return tree.add(std::move(child));
}

bool verify_strict_transform(const BlowupTree& tree, int node) {
  const ChartNode& n = tree.at(node);
  if (n.parent < 0) return true;
  const ChartNode& p = tree.at(n.parent);
  MPoly total = substitute(p.strict_transform, n.substitution, n.vars);
  if (!n.exceptional_var) return total == n.strict_transform;
  std::size_t e = *n.exceptional_var;
  Exponent ex(n.vars.size(), 0);
  ex[e] = n.exceptional_multiplicity;
  if (total != MPoly::monomial(n.vars, ex) * n.strict_transform) return false;
  return valuation(n.strict_transform, e) == 0;
}

// ---- monomial maps ----

namespace {

Rat rat_pow(const Rat& c, int k) {
  Rat r = 1;
  Rat b = k < 0 ? Rat(1) / c : c;
  for (int i = 0; i < std::abs(k); ++i) r *= b;
  return r;
}

LaurentMonomial mono(std::vector<int> exps, Rat c = 1) { return {std::move(c), std::move(exps)}; }

MonomialMap make_map(std::vector<std::string> source, std::vector<std::string> target,
                     std::vector<LaurentMonomial> images) {
  return {std::move(source), std::move(target), std::move(images)};
}

}  // namespace

MonomialMap compose(const MonomialMap& outer, const MonomialMap& inner) {
  if (outer.source != inner.target) throw StructuralError("monomial maps do not compose");
  MonomialMap r{inner.source, outer.target, {}};
  for (const auto& img : outer.images) {
    LaurentMonomial m{img.coeff, std::vector<int>(inner.source.size(), 0)};
    for (std::size_t s = 0; s < img.exps.size(); ++s) {
      int k = img.exps[s];
      if (k == 0) continue;
      const auto& in = inner.images[s];
      m.coeff *= rat_pow(in.coeff, k);
      for (std::size_t t = 0; t < m.exps.size(); ++t) m.exps[t] += k * in.exps[t];
    }
    r.images.push_back(std::move(m));
  }
  return r;
}

MonomialMap invert(const MonomialMap& m) {
  std::size_t n = m.target.size();
  if (m.source.size() != n) throw StructuralError("non-square monomial map");
  // Gauss-Jordan on [M | I] over Q
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.images[i].exps[j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw DegenerateInput("monomial map is not invertible");
    std::swap(a[piv], a[col]);
    Rat inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  MonomialMap r{m.target, m.source, {}};
  for (std::size_t s = 0; s < n; ++s) {
    LaurentMonomial img{1, std::vector<int>(n, 0)};
    for (std::size_t t = 0; t < n; ++t) {
      const Rat& q = a[s][n + t];
      if (q.get_den() != 1) throw DegenerateInput("monomial map is not unimodular");
      int k = static_cast<int>(q.get_num().get_si());
      img.exps[t] = k;
      img.coeff *= rat_pow(m.images[t].coeff, -k);
    }
    r.images.push_back(std::move(img));
  }
  return r;
}

bool is_identity(const MonomialMap& m) {
  if (m.source != m.target) return false;
  for (std::size_t i = 0; i < m.images.size(); ++i) {
    if (m.images[i].coeff != 1) return false;
    for (std::size_t j = 0; j < m.images[i].exps.size(); ++j)
      if (m.images[i].exps[j] != (i == j ? 1 : 0)) return false;
  }
  return true;
}

std::string to_string(const LaurentMonomial& m, const std::vector<std::string>& vars) {
  std::string num, den;
  auto put = [](std::string& s, const std::string& v, int k) {
    if (!s.empty()) s += "*";
    s += v;
    if (k > 1) s += "^" + std::to_string(k);
  };
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] > 0) put(num, vars[i], m.exps[i]);
    if (m.exps[i] < 0) put(den, vars[i], -m.exps[i]);
  }
  std::string out = m.coeff == 1 ? "" : m.coeff.get_str();
  if (!num.empty()) out += (out.empty() ? "" : "*") + num;
  if (out.empty()) out = "1";
  if (!den.empty()) out += "/" + (den.find('*') == std::string::npos ? den : "(" + den + ")");
  return out;
}

std::vector<std::string> alpha_vars(int chart) {
  std::string i = std::to_string(chart);
  return {"u" + i, "v" + i, "w" + i};
}

AlphaAtlas alpha_atlas(const CFrac& alpha) {
  int e = static_cast<int>(alpha.e());
  int epi = static_cast<int>(pi_op(alpha).e());
  int eom = static_cast<int>(omega(alpha).e());
  AlphaAtlas at{alpha, {}, {}, {}};
  at.t13 = make_map(alpha_vars(1), alpha_vars(3),
                    {mono({1, 0, -epi}), mono({0, 1, e}), mono({0, 0, -1})});
  at.t24 = make_map(alpha_vars(2), alpha_vars(4),
                    {mono({1, 0, eom}), mono({0, 1, -e}), mono({0, 0, -1})});
  at.t12 = make_map(alpha_vars(1), alpha_vars(2),
                    {mono({1, 1, 0}), mono({0, -1, 0}), mono({0, 0, 1})});
  return at;
}

std::array<RefineMap, 4> alpha_refine(const CFrac& alpha, Side side) {
  (void)alpha;  // the maps are the same monomials for every alpha
  std::array<RefineMap, 4> out;
  for (int i = 1; i <= 4; ++i) {
    bool odd = i % 2 == 1;
    RefineMap r;
    r.child_chart = i;
    LaurentMonomial u, v, w = mono({0, 0, 1});
    if (side == Side::b) {
      r.parent_chart = odd ? i : i - 1;
      if (odd) {
        u = mono({1, 0, 0});
        v = mono({1, 1, 0});
      } else {
        u = mono({1, 1, 0});
        v = mono({1, 0, 0});
      }
    } else {
      r.parent_chart = odd ? i + 1 : i;
      if (odd) {
        u = mono({1, 1, 0});
        v = mono({1, 0, 0});
      } else {
        u = mono({1, 0, 0});
        v = mono({1, 1, 0});
      }
    }
    r.map = make_map(alpha_vars(i), alpha_vars(r.parent_chart), {u, v, w});
    out[static_cast<std::size_t>(i - 1)] = std::move(r);
  }
  return out;
}

MonomialMap alpha_base_chart(int chart) {
  if (chart < 1 || chart > 4) throw StructuralError("chart index must be 1..4");
  std::vector<std::string> src = chart <= 2 ? std::vector<std::string>{"x2", "y2", "z2"}
                                            : std::vector<std::string>{"x3", "y3", "z3"};
  bool x_first = chart % 2 == 1;
  LaurentMonomial u = x_first ? mono({1, 0, 0}) : mono({0, 1, 0});
  LaurentMonomial v = x_first ? mono({-1, 1, 0}) : mono({1, -1, 0});
  return make_map(src, alpha_vars(chart), {u, v, mono({0, 0, 1})});
}

std::array<std::string, 3> AlphaChart::coords() const {
  auto v = alpha_vars(index);
  return {v[0], v[1], v[2]};
}

}  // namespace tanlim
