#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>

#include "tanlim/cli.hpp"
#include "tanlim/sequences.hpp"

using namespace tanlim;

namespace {

const std::vector<std::string> XYZ{"x", "y", "z"};
const char* kPencilSurface = "z^2-x^2*(x+y^2)";
const char* kSwallowtail = "256*z^3 - 27*y^4 - 128*x^2*z^2 + 144*x*y^2*z + 16*x^4*z - 4*x^3*y^2";
const char* kQuintic = "z^5-x^2*y";

MPoly P(const std::string& s) { return parse_poly(s, XYZ); }

MPoly as_xyz(const MPoly& f) {
  MPoly r(XYZ);
  for (const auto& [e, c] : f.terms()) r.add_term(e, c);
  return r;
}

bool same_up_to_unit(const MPoly& a, const MPoly& b) {
  MPoly u = normalize(as_xyz(a)), v = normalize(b);
  return u == v || u == -v;
}

bool tree_contains(const Trace& t, const std::string& f) {
  MPoly g = P(f);
  return std::any_of(t.tree.nodes().begin(), t.tree.nodes().end(),
                     [&](const ChartNode& n) { return same_up_to_unit(n.strict_transform, g); });
}

bool has_event(const Trace& t, const std::string& kind, const std::string& rule, int node, const std::vector<Rat>& p,
               const std::string& result = "") {
  return std::any_of(t.events.begin(), t.events.end(), [&](const Event& e) {
    return e.kind == kind && e.rule == rule && e.node == node && e.point == p && (result.empty() || e.result == result);
  });
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Report {
  int failures = 0;
  void line(int id, bool ok, const std::string& what) {
    std::printf("%s %d: %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

std::string timing(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", s);
  return buf;
}

// ---- criterion 1 ----

bool pencil_surface(std::vector<Trace>& traces, std::string& note) {
  auto t0 = std::chrono::steady_clock::now();
  cli::Request req;
  req.command = "limit";
  req.surface = kPencilSurface;
  auto res = cli::run(req);
  ClassicalResult c = classical_limit(P(kPencilSurface), {0, 0, 0});
  double dt = seconds_since(t0);
  bool ok = res.status == 0 &&
            res.out == "Sigma_o(S) = pencil of planes containing {x=z=0}; dual points: (0:0:1)\n" &&
            c.limit.pencils.size() == 1 && c.limit.pencils[0].line_str() == "{x=z=0}";
  ok = ok && tree_contains(c.trace, "z^2 - x^2*y*(x + y)") && tree_contains(c.trace, "z^2 - x^2*y^2*(x + 1)");
  bool disc = false;
  for (const auto* e : c.trace.find("discriminant")) {
    MPoly d = parse_poly(e->result, c.trace.tree.at(e->node).vars);
    if (same_up_to_unit(squarefree_part(d), P("x*y*(x + 1)"))) disc = true;
  }
  ok = ok && disc && dt < 1.0;
  note = "z^2 - x^2*(x + y^2): pencil {x=z=0}, strict transforms and discriminant {x2*y2*(x2+1)}, " + timing(dt);
  traces.push_back(std::move(c.trace));
  return ok;
}

// ---- criterion 2 ----

bool swallowtail(std::vector<Trace>& traces, std::string& note) {
  auto t0 = std::chrono::steady_clock::now();
  ClassicalResult c = classical_limit(P(kSwallowtail), {0, 0, 0});
  double dt = seconds_since(t0);
  const Trace& t = c.trace;
  bool ok = c.limit.describe() == "Sigma_o(S) = {(0:0:1)}" && c.limit.pencils.empty() && !c.limit.full &&
            c.limit.unresolved.empty();

  // o_l is the first regular candidate; the chart it is blown up into holds o1, o2
  auto candidates = t.find("candidate");
  std::vector<std::pair<int, std::vector<Rat>>> regular;
  for (const auto* e : candidates)
    if (e->result == "regular") regular.emplace_back(e->node, e->point);
  ok = ok && regular.size() == 4 && regular[0].second == std::vector<Rat>{0, 0, 0};
  if (ok) {
    int w2 = regular[1].first, w4 = regular[3].first;
    std::vector<Rat> o1{0, 0, 0}, o2{0, 0, Rat(1, 4)}, o4{0, 0, 0}, o5{Rat(-27, 8), 0, 0};
    ok = regular[1] == std::make_pair(w2, o1) && regular[2] == std::make_pair(w2, o2) && regular[3].second == o5;
    ok = ok && has_event(t, "rule", "CHANGESMOOTH", w2, o1, "finite");
    ok = ok && has_event(t, "rule", "CHANGETRANS", w2, o2, "finite");
    ok = ok && has_event(t, "rule", "CHANGETRANS", w4, o5, "finite");
    ok = ok && has_event(t, "candidate", "", w4, o4, "crossing") && has_event(t, "rule", "TRIVIAL", w4, o4, "finite");
    ok = ok && t.find("rule", "CHANGESMOOTH").size() == 1 && t.find("rule", "CHANGETRANS").size() == 2;
  }
  ok = ok && dt < 5.0;
  note = "swallowtail {(0:0:1)}, candidates o1 o2 o4 o5 with CHANGESMOOTH/CHANGETRANS/TRIVIAL, " + timing(dt);
  traces.push_back(std::move(c.trace));
  return ok;
}

// ---- criterion 3 ----

bool quintic(std::vector<Trace>& traces, std::string& note) {
  auto t0 = std::chrono::steady_clock::now();
  cli::Request req;
  req.command = "decide";
  req.surface = kQuintic;
  req.divisor = cli::parse_divisor("x");
  auto res = cli::run(req);
  Decision d = decide(P(kQuintic), {0, 0, 0}, {0});
  double dt = seconds_since(t0);
  bool ok = res.status == 0 && res.out.find("FULL (non-well-behaved exceptional curve") == 0 &&
            d.verdict.kind == LimitKind::Full && d.verdict.reason == "non-well-behaved exceptional curve";
  ok = ok && tree_contains(d.trace, "x^2 - y^2*z^5") && tree_contains(d.trace, "z^2 - x^2*y") && dt < 2.0;
  note = "z^5 - x^2*y is FULL by a non-well-behaved curve, " + timing(dt);
  traces.push_back(std::move(d.trace));
  return ok;
}

// ---- criterion 4 ----

bool cfrac_suite(std::string& note) {
  int checked = 0, failed = 0;
  auto check = [&](bool ok) { ++checked, failed += !ok; };
  for (std::int64_t n = 1; n < 50; ++n)
    for (std::int64_t d = 1; n + d <= 50; ++d) {
      if (std::gcd(n, d) != 1) continue;
      auto [a, sib] = from_rational(n, d);
      check(eval_digits(a.digits) == std::make_pair(n, d));
      check(eval_digits(sib.digits) == std::make_pair(n, d));
      check(a.digits.size() + 1 == sib.digits.size() || sib.digits.size() + 1 == a.digits.size());
      check(CFrac::from_digits(sib.digits) == a && CFrac::from_digits(a.digits).digits == a.digits);
      CFrac s = succ_s(a), b = succ_b(a), w = omega(a), p = pi_op(a);
      check(pi_op(s) == a && omega(b) == a);
      check(omega(s) == w && pi_op(b) == p);
      check(a.e() + p.e() == b.e() && a.e() + w.e() == s.e());
      check(s.n == a.n + w.n && s.d == a.d + w.d);
      check(b.n == a.n + p.n && b.d == a.d + p.d);
      check(mediant(a, w) == s && mediant(a, p) == b);
    }
  note = std::to_string(checked) + " identities over n + d <= 50, " + std::to_string(failed) + " failures";
  return failed == 0;
}

// ---- criterion 5 ----

MPoly random_poly(std::mt19937& rng, int max_deg_z) {
  std::uniform_int_distribution<int> coef(-9, 9), dz(0, max_deg_z), dxy(0, 2), terms(1, 6);
  MPoly f(XYZ);
  int top = dz(rng);
  int k = terms(rng);
  for (int i = 0; i < k; ++i) f.add_term({dxy(rng), dxy(rng), i == 0 ? top : std::min(top, dz(rng))}, coef(rng));
  return f;
}

bool resultant_oracle(std::string& note) {
  std::mt19937 rng(20261015);
  int pairs = 0, failed = 0;
  while (pairs < 200) {
    MPoly f = random_poly(rng, 3), g = random_poly(rng, 3);
    if (f.is_zero() || g.is_zero() || (f.degree(2) < 1 && g.degree(2) < 1)) continue;
    ++pairs;
    if (resultant(f, g, 2) != resultant_sylvester(f, g, 2)) ++failed;
  }
  note = std::to_string(pairs) + " random pairs, " + std::to_string(failed) + " mismatches";
  return failed == 0;
}

// ---- criterion 6 ----

bool strict_transforms(const std::vector<Trace>& traces, std::string& note) {
  int nodes = 0, failed = 0;
  for (const auto& t : traces)
    for (std::size_t i = 0; i < t.tree.size(); ++i, ++nodes)
      if (!verify_strict_transform(t.tree, static_cast<int>(i))) ++failed;
  note = std::to_string(nodes) + " nodes checked, " + std::to_string(failed) + " failures";
  return failed == 0 && nodes > 0;
}

// ---- criterion 7 ----

MPoly random_linear(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-5, 5), den(1, 4);
  MPoly l(XYZ);
  while (l.is_zero())
    for (std::size_t i = 0; i < 3; ++i) l += MPoly::variable(XYZ, i) * Rat(c(rng), den(rng));
  return l;
}

bool independent(const MPoly& a, const MPoly& b, const MPoly& c) {
  auto co = [](const MPoly& l, std::size_t i) {
    Exponent e(3, 0);
    e[i] = 1;
    return l.coeff(e);
  };
  Rat det = co(a, 0) * (co(b, 1) * co(c, 2) - co(b, 2) * co(c, 1)) -
            co(a, 1) * (co(b, 0) * co(c, 2) - co(b, 2) * co(c, 0)) +
            co(a, 2) * (co(b, 0) * co(c, 1) - co(b, 1) * co(c, 0));
  return det != 0;
}

// Partials of a ternary cubic have no common projective zero.
bool smooth_cubic(const MPoly& f) {
  MPoly fx = partial(f, 0), fy = partial(f, 1), fz = partial(f, 2);
  if (fx.eval({0, 0, 1}) == 0 && fy.eval({0, 0, 1}) == 0 && fz.eval({0, 0, 1}) == 0) return false;
  for (const auto* d : {&fx, &fy, &fz})
    if (d->degree(2) != 2) return false;
  MPoly g = gcd(gcd(resultant(fx, fy, 2), resultant(fx, fz, 2)), resultant(fy, fz, 2));
  return !g.is_zero() && g.is_constant();
}

bool union_of_planes_oracle(std::string& note) {
  std::mt19937 rng(7);
  int failed = 0, cases = 0;
  std::uniform_int_distribution<int> count(1, 4), pick(0, 3);
  for (int i = 0; i < 100; ++i, ++cases) {
    std::vector<MPoly> forms;
    int k = count(rng);
    MPoly f = MPoly::constant(XYZ, Rat(pick(rng) + 1, 1 + pick(rng)));
    for (int j = 0; j < k; ++j) {
      if (!forms.empty() && pick(rng) == 0) {
        forms.push_back(forms[static_cast<std::size_t>(pick(rng)) % forms.size()]);
      } else {
        forms.push_back(random_linear(rng));
      }
      f *= forms.back();
    }
    if (!is_union_of_planes(f)) ++failed;
  }
  int quadrics = 0;
  while (quadrics < 20) {
    MPoly a = random_linear(rng), b = random_linear(rng), c = random_linear(rng);
    if (!independent(a, b, c)) continue;
    ++quadrics, ++cases;
    MPoly q = a * a + b * b * Rat(pick(rng) + 1) - c * c * Rat(pick(rng) + 1);
    if (is_union_of_planes(q)) ++failed;
  }
  ++cases;
  if (is_union_of_planes(P("x^3 + y^3 + z^3"))) ++failed;
  int cubics = 0;
  std::uniform_int_distribution<int> coef(-9, 9);
  while (cubics < 20) {
    MPoly f(XYZ);
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; i + j <= 3; ++j) f.add_term({i, j, 3 - i - j}, coef(rng));
    if (!smooth_cubic(f)) continue;
    ++cubics, ++cases;
    if (is_union_of_planes(f)) ++failed;
  }
  note = std::to_string(cases) + " cones, " + std::to_string(failed) + " misclassified";
  return failed == 0;
}

// ---- criterion 8 ----

bool shear_invariance(std::string& note) {
  struct Germ {
    const char* f;
    LimitKind expected;
  };
  // local germs of the three surfaces above, with the divisor {x = 0}
  const std::vector<Germ> germs{{"z^2 - x*y^2*(y + x)", LimitKind::Full},
                                {"256*z^3 - 27*x*y^4 - 128*x*z^2 + 144*x*y^2*z + 16*x^2*z - 4*x^2*y^2", LimitKind::Finite},
                                {kQuintic, LimitKind::Full}};
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  std::vector<Rat> lambdas;
  while (lambdas.size() < 20) {
    Rat l(num(rng), den(rng));
    l.canonicalize();
    if (l != 0 && std::find(lambdas.begin(), lambdas.end(), l) == lambdas.end()) lambdas.push_back(l);
  }
  int runs = 0, failed = 0;
  for (const auto& g : germs) {
    MPoly f = P(g.f);
    if (decide(f, {0, 0, 0}, {0}).verdict.kind != g.expected) ++failed;
    for (const Rat& l : lambdas) {
      ++runs;
      MPoly sheared = substitute(f, {{"y", P("y") + P("z") * l}});
      if (decide(sheared, {0, 0, 0}, {0}).verdict.kind != g.expected) ++failed;
    }
  }
  note = std::to_string(runs) + " sheared germs, " + std::to_string(failed) + " verdict changes";
  return failed == 0;
}

}  // namespace

int main() {
  Report r;
  std::vector<Trace> traces;
  std::string note;
  auto guarded = [&](int id, auto&& fn) {
    bool ok = false;
    try {
      ok = fn(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    r.line(id, ok, note);
  };
  guarded(1, [&](std::string& n) { return pencil_surface(traces, n); });
  guarded(2, [&](std::string& n) { return swallowtail(traces, n); });
  guarded(3, [&](std::string& n) { return quintic(traces, n); });
  guarded(4, cfrac_suite);
  guarded(5, resultant_oracle);
  guarded(6, [&](std::string& n) { return strict_transforms(traces, n); });
  guarded(7, union_of_planes_oracle);
  guarded(8, shear_invariance);
  return r.failures == 0 ? 0 : 1;
}
