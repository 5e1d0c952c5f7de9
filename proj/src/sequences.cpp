#include "tanlim/sequences.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

namespace tanlim {

std::vector<const Event*> Trace::find(const std::string& kind, const std::string& rule) const {
  std::vector<const Event*> out;
  for (const auto& e : events)
    if (e.kind == kind && (rule.empty() || e.rule == rule)) out.push_back(&e);
  return out;
}

Options default_options() {
  Options o;
  if (const char* env = std::getenv("TANLIM_MAX_DEPTH")) {
    try {
      int v = std::stoi(env);
      if (v > 0) o.max_depth = v;
    } catch (const std::exception&) {
    }
  }
  return o;
}

std::string point_str(const std::vector<Rat>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].get_str();
  return s + ")";
}

namespace {

struct Roots {
  std::vector<Rat> rational;
  bool irrational = false;
};

Roots roots_of(const MPoly& f, std::size_t var) {
  Roots r;
  if (f.is_zero()) throw DegenerateInput("roots of the zero polynomial");
  if (f.degree(var) <= 0) return r;
  MPoly sf = squarefree_part(f);
  r.rational = rational_roots(sf, var);
  r.irrational = sf.degree(var) > static_cast<int>(r.rational.size());
  return r;
}

MPoly on_line(const MPoly& f, std::size_t keep) {
  MPoly r = f;
  for (std::size_t j = 0; j < f.nvars(); ++j)
    if (j != keep) r = specialize(r, j, 0);
  return r;
}

std::size_t other_of(std::size_t i, std::size_t j) { return 3 - i - j; }

struct Outcome {
  LimitKind kind = LimitKind::Finite;
  bool unresolved = false;
  std::string rule;
  std::string reason;
  int depth = 0;
  std::vector<std::string> notes;

  static Outcome full(std::string rule, std::string reason, int depth) {
    Outcome o;
    o.kind = LimitKind::Full;
    o.rule = std::move(rule);
    o.reason = std::move(reason);
    o.depth = depth;
    return o;
  }
  static Outcome finite(std::string rule, int depth) {
    Outcome o;
    o.rule = std::move(rule);
    o.depth = depth;
    return o;
  }
  static Outcome open(std::string note, int depth) {
    Outcome o;
    o.unresolved = true;
    o.depth = depth;
    o.notes.push_back(std::move(note));
    return o;
  }
  bool is_full() const { return kind == LimitKind::Full; }
};

// Accumulates sub-outcomes; a Full one wins.
void absorb(Outcome& acc, const Outcome& sub) {
  if (acc.is_full()) return;
  if (sub.is_full()) {
    acc = sub;
    return;
  }
  acc.unresolved = acc.unresolved || sub.unresolved;
  acc.notes.insert(acc.notes.end(), sub.notes.begin(), sub.notes.end());
}

class Driver {
 public:
  // exhaustive: keep blowing up crossings after a Full verdict is known.
  Driver(Trace& t, const Options& opt, bool exhaustive = false) : t_(t), opt_(opt), exhaustive_(exhaustive) {}

  Outcome regular(int node, const std::vector<Rat>& p, std::size_t n);
  Outcome crossing(int node, std::size_t a, std::size_t b, const std::vector<Rat>& cs);

 private:
  Outcome trivcone(int node, const std::vector<Rat>& p, std::size_t n, const MPoly& cone);
  Outcome second(int node, const std::vector<Rat>& p, std::size_t n, const MPoly& cone);
  Outcome decide_candidates(int node, std::size_t e, const std::function<bool(const std::vector<Rat>&)>& keep);

  void log(std::string kind, std::string rule, int node, std::vector<Rat> p, std::string result,
           std::string detail = "") {
    t_.events.push_back({std::move(kind), std::move(rule), node, std::move(p), std::move(result), std::move(detail)});
  }
  Outcome conclude(Outcome o, int node, const std::vector<Rat>& p) {
    log("rule", o.rule, node, p, o.is_full() ? "full" : "finite", o.reason);
    return o;
  }
  bool out_of_depth(int node) const { return t_.tree.at(node).depth + 1 > opt_.max_depth; }

  bool done(const Outcome& o) const { return o.is_full() && !exhaustive_; }

  Trace& t_;
  Options opt_;
  bool exhaustive_;
};

Outcome Driver::regular(int node, const std::vector<Rat>& p, std::size_t n) {
  const MPoly f = t_.tree.at(node).strict_transform;
  int depth = t_.tree.at(node).depth;
  log("candidate", "", node, p, "regular");
  MPoly g = translate(f, p);
  if (g.constant_term() != 0) throw DegenerateInput("candidate point is not on the surface");
  auto drop = projection_for(g, {n});
  if (!drop) {
    log("unresolved", "", node, p, "no compatible projection");
    return Outcome::open("no compatible projection at " + point_str(p), depth);
  }
  log("discriminant", "", node, p, discriminant(f, *drop).str(), "drop " + f.vars()[*drop]);
  if (monomial_split(discriminant(g, *drop), {n}).cofactor.constant_term() != 0)
    return conclude(Outcome::finite("TRIVIAL", depth), node, p);
  int m = order_at_origin(g);
  MPoly cone = homogeneous_part(g, m);
  bool degenerate = contains_plane(cone, MPoly::variable(g.vars(), n));
  ContourData cd = contour_data(g, *drop, {n});
  if (m == 1) {
    Tri t = contour_at_origin(cd);
    if (t == Tri::Yes) return conclude(Outcome::full("CHANGESMOOTH", "contour through a smooth point", depth), node, p);
    if (t == Tri::No) return conclude(Outcome::finite("CHANGESMOOTH", depth), node, p);
    return degenerate ? second(node, p, n, cone) : trivcone(node, p, n, cone);
  }
  if (degenerate) return second(node, p, n, cone);
  SingCurve sing = log_sing_curve({f, p, {n}}, *drop);
  if (sing.status == SingCurve::Empty) {
    Tri t = contour_at_origin(cd);
    if (t == Tri::Yes) return conclude(Outcome::full("CHANGESMOOTH", "contour through the point", depth), node, p);
    if (t == Tri::No) return conclude(Outcome::finite("CHANGESMOOTH", depth), node, p);
    return trivcone(node, p, n, cone);
  }
  if (sing.status == SingCurve::Smooth) {
    if (!equimultiple_along({f, p, {n}}, *sing.param))
      return conclude(Outcome::full("CHANGETRANS", "singular curve is not equimultiple", depth), node, p);
    Tri t = contour_off_curve_at_origin(cd, *sing.param);
    if (t == Tri::Yes)
      return conclude(Outcome::full("CHANGETRANS", "contour off the singular curve", depth), node, p);
    if (t == Tri::No) return conclude(Outcome::finite("CHANGETRANS", depth), node, p);
    return trivcone(node, p, n, cone);
  }
  return trivcone(node, p, n, cone);
}

Outcome Driver::trivcone(int node, const std::vector<Rat>& p, std::size_t n, const MPoly& cone) {
  int depth = t_.tree.at(node).depth;
  if (!is_union_of_planes(cone))
    return conclude(Outcome::full("TRIVCONE", "tangent cone is not a union of planes", depth), node, p);
  if (out_of_depth(node)) return Outcome::open("depth bound reached at " + point_str(p), depth);
  auto kids = point_blowup(t_.tree, node, p);
  log("center", "point", node, p, "TRIVCONE");
  std::size_t j1 = n == 0 ? 1 : 0;
  std::size_t j2 = other_of(n, j1);
  Outcome acc = Outcome::finite("TRIVCONE", depth);
  absorb(acc, decide_candidates(kids[n], n, {}));
  if (acc.is_full()) return acc;
  // crossing points of E with the strict transform of N
  std::vector<Rat> cs;
  MPoly line = on_line(t_.tree.at(kids[j1]).strict_transform, j2);
  if (line.is_zero()) return Outcome::open("strict transform of N meets E in a line of S", depth);
  Roots r = roots_of(line, j2);
  if (r.irrational) acc.unresolved = true, acc.notes.push_back("irrational crossing point");
  if (!r.rational.empty()) absorb(acc, crossing(kids[j1], n, j1, r.rational));
  if (acc.is_full()) return acc;
  if (t_.tree.at(kids[j2]).strict_transform.constant_term() == 0) absorb(acc, crossing(kids[j2], n, j2, {0}));
  return acc;
}

Outcome Driver::decide_candidates(int node, std::size_t e,
                                  const std::function<bool(const std::vector<Rat>&)>& keep) {
  Outcome acc = Outcome::finite("", t_.tree.at(node).depth);
  Candidates c = candidate_points(t_.tree.at(node).strict_transform, e, keep);
  for (const auto& u : c.unresolved) {
    log("unresolved", "", node, {}, u);
    acc.unresolved = true;
    acc.notes.push_back(u);
  }
  for (const auto& q : c.points) {
    absorb(acc, regular(node, q, e));
    if (acc.is_full()) break;
  }
  return acc;
}

Outcome Driver::crossing(int node, std::size_t a, std::size_t b, const std::vector<Rat>& cs) {
  const MPoly f = t_.tree.at(node).strict_transform;
  int depth = t_.tree.at(node).depth;
  std::size_t c = other_of(a, b);
  Outcome acc = Outcome::finite("TRIVIAL", depth);
  std::vector<Rat> need;
  for (const Rat& c0 : cs) {
    std::vector<Rat> p(3, 0);
    p[c] = c0;
    MPoly g = translate(f, p);
    if (g.constant_term() != 0) continue;
    log("candidate", "", node, p, "crossing");
    if (on_line(g, c).is_zero()) {
      log("unresolved", "", node, p, "crossing line contained in S");
      absorb(acc, Outcome::open("crossing line contained in S at " + point_str(p), depth));
      continue;
    }
    Tri t = contour_at_origin(contour_data(g, c, {a, b}));
    if (t == Tri::No) {
      log("rule", "TRIVIAL", node, p, "finite");
      continue;
    }
    need.push_back(c0);
  }
  if (need.empty()) return acc;
  if (out_of_depth(node)) return Outcome::open("depth bound reached in the first sequence", depth);
  auto kids = line_blowup(t_.tree, node, a, b);
  log("center", "line", node, {}, "first sequence", f.vars()[a] + "=" + f.vars()[b] + "=0");
  // chart A: exceptional coordinate x_b; chart B: exceptional coordinate x_a
  const MPoly fa = t_.tree.at(kids[0]).strict_transform;
  MPoly u1 = fa.degree(c) > 0 ? discriminant(fa, c) : MPoly::constant(fa.vars(), 1);
  u1 = monomial_split(u1, {b}).cofactor;
  MPoly on_e = specialize(u1, b, 0);
  for (const Rat& c0 : need) {
    if (!on_e.is_constant()) {
      Roots r = roots_of(on_e, a);
      if (r.irrational) {
        acc.unresolved = true;
        acc.notes.push_back("irrational candidate on the exceptional fibre");
        log("unresolved", "", kids[0], {}, "irrational root of " + on_e.str());
      }
      for (const Rat& a0 : r.rational) {
        if (a0 == 0) continue;
        std::vector<Rat> q(3, 0);
        q[a] = a0;
        q[c] = c0;
        if (fa.eval(q) != 0) continue;
        absorb(acc, regular(kids[0], q, b));
        if (done(acc)) return acc;
      }
    }
  }
  absorb(acc, crossing(kids[0], a, b, need));
  if (done(acc)) return acc;
  absorb(acc, crossing(kids[1], a, b, need));
  return acc;
}

Outcome Driver::second(int node, const std::vector<Rat>& p, std::size_t n, const MPoly& cone) {
  int depth = t_.tree.at(node).depth;
  if (!is_union_of_planes(cone))
    return conclude(Outcome::full("SECONDSEQ", "tangent cone is not a union of planes", depth), node, p);
  if (out_of_depth(node)) return Outcome::open("depth bound reached at " + point_str(p), depth);
  std::string n_key = t_.tree.at(node).divisor_key(n).value_or("N");
  auto kids = point_blowup(t_.tree, node, p);
  log("center", "point", node, p, "SECONDSEQ");
  std::string e0 = t_.tree.at(kids[n]).divisor_key(n).value();
  t_.labels[n_key] = CFrac::zero();
  t_.labels[e0] = CFrac::infinity();
  std::size_t j1 = n == 0 ? 1 : 0;
  std::size_t j2 = other_of(n, j1);

  struct Segment {
    int node;
    std::size_t s, b, w;
    CFrac ls, lb;
    bool infinity;
  };
  std::deque<Segment> queue{{kids[j1], n, j1, j2, CFrac::zero(), CFrac::infinity(), false},
                            {kids[j2], n, j2, j1, CFrac::zero(), CFrac::infinity(), true}};
  struct Job {
    int node;
    std::size_t e;
    std::function<bool(const std::vector<Rat>&)> keep;
  };
  std::vector<Job> jobs{{kids[n], n, {}}};
  std::vector<std::pair<Segment, std::vector<Rat>>> crossings;
  Outcome acc = Outcome::finite("SECONDSEQ", depth);

  while (!queue.empty()) {
    Segment sg = queue.front();
    queue.pop_front();
    const MPoly f = t_.tree.at(sg.node).strict_transform;
    if (f.is_constant()) continue;
    MPoly line = on_line(f, sg.w);
    if (!line.is_zero()) {
      Roots r = roots_of(line, sg.w);
      if (r.irrational && !sg.infinity) {
        acc.unresolved = true;
        acc.notes.push_back("irrational crossing point");
      }
      std::vector<Rat> cs;
      for (const Rat& c0 : r.rational)
        if (!sg.infinity || c0 == 0) cs.push_back(c0);
      if (!cs.empty()) crossings.push_back({sg, cs});
      continue;
    }
    if (out_of_depth(sg.node)) return Outcome::open("depth bound reached in the second sequence", depth);
    CFrac alpha = mediant(sg.ls, sg.lb);
    auto lk = line_blowup(t_.tree, sg.node, sg.s, sg.b);
    std::string key = t_.tree.at(lk[0]).divisor_key(sg.b).value();
    t_.labels[key] = alpha;
    log("center", "line", sg.node, {}, "SECONDSEQ",
        f.vars()[sg.s] + "=" + f.vars()[sg.b] + "=0, label " + alpha.value_str());
    const ChartNode& c2 = t_.tree.at(lk[0]);
    if (!sg.infinity) {
      MPoly curve = specialize(c2.strict_transform, sg.b, 0);
      auto wb = well_behaved(curve, sg.s, sg.w, alpha, 2);
      log("wellbehaved", "WELLB", lk[0], {}, wb ? (*wb ? "yes" : "no") : "unresolved",
          "curve " + curve.str() + " on " + key + ", label " + alpha.value_str());
      if (wb && !*wb) {
        Outcome o = Outcome::full("SECONDSEQ", "non-well-behaved exceptional curve", c2.depth);
        log("rule", "SECONDSEQ", lk[0], {}, "full", o.reason);
        return o;
      }
      if (!wb) {
        acc.unresolved = true;
        acc.notes.push_back("well-behaved test undecided for " + curve.str());
      }
    }
    std::size_t s = sg.s, w = sg.w;
    bool inf = sg.infinity;
    jobs.push_back({lk[0], sg.b, [s, w, inf](const std::vector<Rat>& q) { return q[s] != 0 && (!inf || q[w] == 0); }});
    queue.push_back({lk[0], sg.s, sg.b, sg.w, sg.ls, alpha, sg.infinity});
    queue.push_back({lk[1], sg.s, sg.b, sg.w, alpha, sg.lb, sg.infinity});
  }
  for (const auto& [sg, cs] : crossings) {
    absorb(acc, crossing(sg.node, sg.s, sg.b, cs));
    if (acc.is_full()) return acc;
  }
  for (const auto& job : jobs) {
    absorb(acc, decide_candidates(job.node, job.e, job.keep));
    if (acc.is_full()) return acc;
  }
  return acc;
}

LimitVerdict to_verdict(const Outcome& o, bool report_point) {
  LimitVerdict v;
  v.kind = o.kind;
  v.rule = o.rule;
  v.reason = o.reason;
  v.depth = o.depth;
  v.unresolved = o.notes;
  if (o.unresolved && v.unresolved.empty()) v.unresolved.push_back("unresolved candidate");
  if (o.kind == LimitKind::Finite && report_point) v.points.push_back(ProjPoint::of(0, 0, 1));
  return v;
}

}  // namespace

Candidates candidate_points(const MPoly& f, std::size_t e, const std::function<bool(const std::vector<Rat>&)>& keep) {
  Candidates out;
  std::set<std::vector<Rat>> seen;
  auto add = [&](std::vector<Rat> q) {
    if (f.eval(q) != 0) return;
    if (keep && !keep(q)) return;
    if (seen.insert(q).second) out.points.push_back(std::move(q));
  };
  MPoly on_e = specialize(f, e, 0);
  if (on_e.is_zero()) throw DegenerateInput("surface contains the exceptional plane");
  if (on_e.is_constant()) return out;
  std::vector<std::size_t> others;
  for (std::size_t j = f.nvars(); j-- > 0;)
    if (j != e) others.push_back(j);
  // drop the last variable the surface depends on
  std::size_t z = f.degree(others[0]) > 0 ? others[0] : others[1];
  std::size_t a = z == others[0] ? others[1] : others[0];
  auto stripped = [&](std::size_t drop) {
    MPoly u = f.degree(drop) > 0 ? discriminant(f, drop) : MPoly::constant(f.vars(), 1);
    return specialize(monomial_split(u, {e}).cofactor, e, 0);
  };
  MPoly u = stripped(z);
  if (u.is_constant()) return out;
  Roots ra = roots_of(u, a);
  if (ra.irrational) out.unresolved.push_back("irrational root of " + u.str() + " on " + f.vars()[e] + "=0");
  for (const Rat& a0 : ra.rational) {
    MPoly fibre = specialize(on_e, a, a0);
    if (!fibre.is_zero()) {
      Roots rz = roots_of(fibre, z);
      if (rz.irrational) out.unresolved.push_back("irrational point over " + f.vars()[a] + "=" + a0.get_str());
      for (const Rat& z0 : rz.rational) {
        std::vector<Rat> q(3, 0);
        q[a] = a0;
        q[z] = z0;
        add(q);
      }
      continue;
    }
    // the line {e = 0, a = a0} lies on S; use the other projection along it
    MPoly alt = stripped(a);
    if (alt.is_constant()) continue;
    Roots rz = roots_of(alt, z);
    if (rz.irrational) out.unresolved.push_back("irrational point on the line " + f.vars()[a] + "=" + a0.get_str());
    for (const Rat& z0 : rz.rational) {
      std::vector<Rat> q(3, 0);
      q[a] = a0;
      q[z] = z0;
      add(q);
    }
  }
  return out;
}

std::optional<bool> well_behaved(const MPoly& g, std::size_t v, std::size_t w, const CFrac& alpha, int chart) {
  if (chart != 1 && chart != 2) throw StructuralError("well-behaved test runs in chart 1 or 2");
  if (g.is_zero()) return std::nullopt;
  MPoly G = normalize(g);
  if (chart == 1) {
    // v_1 = 1 / v_2
    int d = G.degree(v);
    MPoly r(G.vars());
    for (const auto& [e, c] : G.terms()) {
      Exponent t = e;
      t[v] = d - e[v];
      r.add_term(t, c);
    }
    G = normalize(r);
  }
  if (G.degree(v) > 0) G = primitive_part_in(G, v);  // fibres w = const are well behaved
  G = monomial_split(G, {v}).cofactor;                  // Z_s itself
  int d = G.degree(v);
  if (d <= 0) return true;
  MPoly lc = leading_coeff_in(G, v);
  if (!lc.is_constant()) return false;  // a branch runs into Z_b
  std::int64_t e = alpha.e();
  for (const auto& [ex, c] : G.terms())
    if (ex[w] + e * ex[v] > e * d) return false;
  if (d > 1) return std::nullopt;
  // G = lc * v + c0(w): section v = s(w)
  MPoly s = -(coefficients_in(G, v)[0] * (Rat(1) / lc.constant_term()));
  if (s.is_constant()) return !s.is_zero();
  int k = s.degree(w);
  if (k != e) return false;
  auto cs = coefficients_in(s, w);
  Rat top = cs[k].constant_term();
  Rat r = -cs[k - 1].constant_term() / (top * k);
  MPoly power = pow(MPoly::variable(s.vars(), w) - MPoly::constant(s.vars(), r), static_cast<unsigned>(k)) * top;
  return power == s;
}

Decision decide(const MPoly& f, const std::vector<Rat>& p, const std::vector<std::size_t>& divisor,
                const Options& opt) {
  if (f.nvars() != 3 || p.size() != 3) throw StructuralError("surfaces live in three variables");
  if (f.eval(p) != 0) throw DegenerateInput("point is not on the surface");
  std::vector<std::size_t> through;
  for (std::size_t v : divisor)
    if (p[v] == 0) through.push_back(v);
  std::sort(through.begin(), through.end());
  through.erase(std::unique(through.begin(), through.end()), through.end());
  if (through.empty() || through.size() > 2) throw DegenerateInput("point must lie on one or two divisor planes");
  Decision d;
  std::vector<DivisorComponent> comps;
  for (std::size_t v : divisor) comps.push_back({"N" + f.vars()[v], v});
  int root = d.trace.tree.add_root(normalize(f), comps);
  Driver drv(d.trace, opt);
  Outcome o;
  if (through.size() == 1) {
    o = drv.regular(root, p, through[0]);
  } else {
    std::size_t c = other_of(through[0], through[1]);
    o = drv.crossing(root, through[0], through[1], {p[c]});
  }
  d.verdict = to_verdict(o, through.size() == 1);
  return d;
}

Decision first_sequence(const MPoly& f, std::size_t a, std::size_t b, const std::vector<Rat>& third_values,
                        const Options& opt) {
  Decision d;
  int root = d.trace.tree.add_root(normalize(f), {{"N" + f.vars()[a], a}, {"N" + f.vars()[b], b}});
  Driver drv(d.trace, opt, true);
  d.verdict = to_verdict(drv.crossing(root, a, b, third_values), false);
  return d;
}

std::string Pencil::line_str() const {
  bool simple = std::all_of(forms.begin(), forms.end(), [](const MPoly& l) { return l.size() == 1; });
  std::string s = "{";
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (simple) {
      s += (i ? "=" : "") + forms[i].str();
    } else {
      s += (i ? ", " : "") + forms[i].str() + "=0";
    }
  }
  return s + (simple ? "=0}" : "}");
}

std::string ClassicalLimit::describe() const {
  std::string dual;
  for (std::size_t i = 0; i < dual_points.size(); ++i) dual += (i ? ", " : "") + dual_points[i].str();
  std::string s = "Sigma_o(S) = ";
  if (full) {
    s += "dual curve of a non-planar tangent cone";
    if (!dual.empty()) s += "; dual points: " + dual;
    return s;
  }
  if (pencils.empty()) return s + "{" + dual + "}";
  for (std::size_t i = 0; i < pencils.size(); ++i)
    s += (i ? " + " : "") + std::string("pencil of planes containing ") + pencils[i].line_str();
  if (!dual.empty()) s += "; dual points: " + dual;
  return s;
}

ClassicalResult classical_limit(const MPoly& f, const std::vector<Rat>& o, const Options& opt) {
  if (f.nvars() != 3 || o.size() != 3) throw StructuralError("surfaces live in three variables");
  if (f.eval(o) != 0) throw DegenerateInput("point is not on the surface");
  ClassicalResult res;
  Trace& t = res.trace;
  int root = t.tree.add_root(normalize(f), {});
  MPoly g = translate(t.tree.at(root).strict_transform, o);
  MPoly cone = homogeneous_part(g, order_at_origin(g));
  MPoly rest;
  auto planes = rational_linear_factors(cone, &rest);
  for (const auto& l : planes) {
    std::vector<Rat> c(3);
    for (std::size_t i = 0; i < 3; ++i) {
      Exponent e(3, 0);
      e[i] = 1;
      c[i] = l.coeff(e);
    }
    res.limit.dual_points.push_back(ProjPoint::of(c[0], c[1], c[2]));
  }
  if (!is_union_of_planes(cone)) {
    res.limit.full = true;
    t.events.push_back({"rule", "TRIVCONE", root, o, "full", "tangent cone is not a union of planes"});
    return res;
  }
  if (!rest.is_constant()) res.limit.unresolved.push_back("tangent cone planes not defined over Q: " + rest.str());
  if (order_at_origin(g) == 1) return res;
  auto kids = point_blowup(t.tree, root, o);
  t.events.push_back({"center", "point", root, o, "classical", ""});
  Driver drv(t, opt);
  const auto& vars = f.vars();
  for (std::size_t j = 0; j < 3; ++j) {
    auto keep = [j](const std::vector<Rat>& q) {
      for (std::size_t i = 0; i < j; ++i)
        if (q[i] != 0) return false;
      return true;
    };
    Candidates c = candidate_points(t.tree.at(kids[j]).strict_transform, j, keep);
    for (const auto& u : c.unresolved) res.limit.unresolved.push_back(u);
    for (const auto& q : c.points) {
      Outcome out = drv.regular(kids[j], q, j);
      for (const auto& note : out.notes) res.limit.unresolved.push_back(note);
      if (!out.is_full()) continue;
      std::vector<Rat> dir = q;
      dir[j] = 1;
      Pencil pen{ProjPoint::of(dir[0], dir[1], dir[2]), {}};
      for (std::size_t i = 0; i < 3; ++i) {
        if (i == j) continue;
        MPoly xi = MPoly::variable(vars, i) - MPoly::constant(vars, o[i]);
        MPoly xj = MPoly::variable(vars, j) - MPoly::constant(vars, o[j]);
        pen.forms.push_back(normalize(xi - xj * dir[i]));
      }
      res.limit.pencils.push_back(std::move(pen));
    }
  }
  return res;
}

}  // namespace tanlim
