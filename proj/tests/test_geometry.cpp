#include <random>

#include "doctest.h"
#include "tanlim/geometry.hpp"

using namespace tanlim;

namespace {

const std::vector<std::string> XYZ{"x", "y", "z"};
const char* kSwallowtail = "256*z^3 - 27*y^4 - 128*x^2*z^2 + 144*x*y^2*z + 16*x^4*z - 4*x^3*y^2";

MPoly P(const std::string& s, const std::vector<std::string>& vars = XYZ) { return parse_poly(s, vars); }

SurfaceGerm germ(const std::string& f, std::vector<std::size_t> divisor = {}, std::vector<Rat> p = {0, 0, 0},
                 const std::vector<std::string>& vars = XYZ) {
  return {P(f, vars), std::move(p), std::move(divisor)};
}

MPoly random_linear(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-4, 4);
  MPoly l(XYZ);
  while (l.is_zero())
    for (std::size_t i = 0; i < 3; ++i) l += MPoly::variable(XYZ, i) * Rat(c(rng), 1 + (c(rng) + 4) % 3);
  return l;
}

}  // namespace

TEST_CASE("multiplicity and tangent cone") {
  CHECK(multiplicity(germ("z^2 - x^2*(x + y^2)")) == 2);
  CHECK(multiplicity(germ(kSwallowtail)) == 3);
  CHECK(multiplicity(germ("z")) == 1);
  CHECK(tangent_cone(germ("z^2 - x^2*(x + y^2)")) == P("z^2"));
  CHECK(tangent_cone(germ(kSwallowtail)) == P("256*z^3"));
  CHECK_THROWS_AS(multiplicity(germ("z - 1")), DegenerateInput);
  std::mt19937 rng(1);
  for (int i = 0; i < 10; ++i) {
    MPoly f = P("z^2 - x^3 + y^4*x"), g = P("x*y - z^3");
    CHECK(tangent_cone({f * g, {0, 0, 0}, {}}) == tangent_cone({f, {0, 0, 0}, {}}) * tangent_cone({g, {0, 0, 0}, {}}));
    // invariance under a unimodular change fixing the origin
    std::uniform_int_distribution<int> c(-3, 3);
    std::map<std::string, MPoly> shear{{"y", P("y") + P("z") * Rat(c(rng))}, {"x", P("x") + P("y") * Rat(c(rng))}};
    CHECK(multiplicity({substitute(f * g, shear), {0, 0, 0}, {}}) == 4);
  }
}

TEST_CASE("union of planes") {
  CHECK(is_union_of_planes(P("z^2")));
  CHECK(is_union_of_planes(P("x*y*z")));
  CHECK_FALSE(is_union_of_planes(P("x^3 + y^3 + z^3")));
  CHECK_FALSE(is_union_of_planes(P("x^2 + y^2 - z^2")));
  CHECK(is_union_of_planes(P("x^2 + y^2")));  // two complex planes
  CHECK_FALSE(is_union_of_planes(P("z*(x^2 + y^2 + z^2)")));
  CHECK(contains_plane(P("z*(x^2 + y^2 + z^2)"), P("z")));
  CHECK_THROWS_AS(is_union_of_planes(P("x^2 + y")), DegenerateInput);
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> k(1, 4);
  for (int i = 0; i < 50; ++i) {
    MPoly c = MPoly::constant(XYZ, 1);
    int n = k(rng);
    for (int j = 0; j < n; ++j) c *= random_linear(rng);
    CHECK(is_union_of_planes(c));
  }
}

TEST_CASE("contains plane") {
  CHECK(contains_plane(P("z^2"), P("z")));
  std::vector<std::string> c1{"x1", "y1", "z1"};
  CHECK_FALSE(contains_plane(P("z1^2", c1), P("y1", c1)));
  CHECK(contains_plane(P("x*z"), P("x")));
}

TEST_CASE("rational linear factors") {
  MPoly rest;
  auto fs = rational_linear_factors(P("z^2*(x - 2*y)*(x^2 + y^2)"), &rest);
  REQUIRE(fs.size() == 2);
  CHECK(std::count(fs.begin(), fs.end(), P("z")) == 1);
  CHECK(std::count(fs.begin(), fs.end(), P("x - 2*y")) == 1);
  CHECK(rest == P("x^2 + y^2"));
  auto gs = rational_linear_factors(P("(z - x - 3*y)*(2*z + y)*x"));
  CHECK(gs.size() == 3);
}

TEST_CASE("discriminant") {
  CHECK(discriminant(P("z^2 - x^3"), 2) == P("x"));
  std::vector<std::string> c2{"x2", "y2", "z2"};
  CHECK(discriminant(P("z2^2 - x2^2*y2^2*(x2 + 1)", c2), 2) == P("x2*y2*(x2 + 1)", c2));
  std::vector<std::string> c4{"x4", "y4", "z4"};
  MPoly f4 = P("256*z4^3 - 27*x4*y4^3 - 128*x4*y4*z4^2 + 144*x4*y4^2*z4 + 16*x4^2*y4^2*z4 - 4*x4^2*y4^3", c4);
  // zero set {x4 y4 (8 x4 + 27) = 0}
  CHECK(discriminant(f4, 2) == P("x4*y4*(8*x4 + 27)", c4));
  CHECK_THROWS_AS(discriminant(P("x - y"), 2), DegenerateInput);
}

TEST_CASE("monomial split") {
  std::vector<std::string> c2{"x2", "y2", "z2"};
  auto s = monomial_split(P("-4*x2^2*y2^2*(x2 + 1)", c2), {0, 1});
  CHECK(s.powers == std::vector<int>{2, 2});
  CHECK(s.cofactor == P("-4*(x2 + 1)", c2));
  CHECK(s.cofactor.constant_term() == -4);
  auto t = monomial_split(P("x^3"), {0, 1});
  CHECK(t.powers == std::vector<int>{3, 0});
  CHECK(t.cofactor == P("1"));
  auto u = monomial_split(P("x^2*y*(x + y^2)"), {0, 1});
  CHECK(u.powers == std::vector<int>{2, 1});
  CHECK(u.cofactor.constant_term() == 0);
}

TEST_CASE("singular locus generators") {
  auto g = sing_locus_generators(germ("z^2 - x^2*(x + y^2)"));
  REQUIRE(g.size() == 4);
  CHECK(g[1] == P("-3*x^2 - 2*x*y^2"));
  CHECK(g[2] == P("-2*x^2*y"));
  CHECK(g[3] == P("2*z"));
  std::map<std::string, MPoly> line{{"x", P("0")}, {"z", P("0")}};
  for (const auto& f : g) CHECK(substitute(f, line).is_zero());
  auto h = sing_locus_generators(germ("z"));
  CHECK(h[3] == P("1"));
}

TEST_CASE("logarithmic singular curve") {
  CHECK(log_sing_curve(germ("z^2 - x^2*(x + y^2)", {0}), 2).status == SingCurve::Empty);
  CHECK(log_sing_curve(germ("x^2 + y^2 + z^2", {0}), 2).status == SingCurve::Empty);
  // the line {x = 0, z = 0} lies in Sing and meets N = {y = 0} transversally
  auto s = log_sing_curve(germ("z^2 - x^2*y*(x + y)", {1}), 2);
  REQUIRE(s.status == SingCurve::Smooth);
  CHECK(s.param->A.is_zero());
  CHECK(s.param->Z.is_zero());
  CHECK(equimultiple_along(germ("z^2 - x^2*y*(x + y)", {1}), *s.param));
  // two singular lines through the base point over the same projection
  auto t = log_sing_curve(germ("z^2 - x^2*(x - y)^2*y", {1}), 2);
  CHECK(t.status == SingCurve::NotSmoothTransversal);
}

TEST_CASE("equimultiplicity") {
  SurfaceGerm g = germ("z^2 - x*y^2", {0});
  CurveParam line{0, 1, 2, P("0"), P("0")};
  CHECK(equimultiple_along(g, line));
  SurfaceGerm cusp = germ("z^2 - y^3 - x^2*y^2", {0});
  CHECK(equimultiple_along(cusp, line));
  // order 3 at the origin, 2 at the other points of the x-axis
  CHECK_FALSE(equimultiple_along(germ("z^3 + y^3 + x*(y^2 + z^2)", {0}), line));
  SurfaceGerm h = germ("z^2 - y^2*(y + x^2) + z^3", {0});
  CHECK(equimultiple_along(h, line));
  SurfaceGerm drop = germ("z^2*(x + 1) - y^3 + x*y^2 - x*z^2", {0});
  CHECK(equimultiple_along(drop, line));
  // a smooth sheet through the origin that misses the line does not count
  CHECK(equimultiple_along(germ("(z^2 - y^3 - x^2*y^2)*(y - z + x)", {0}), line));
  CHECK_FALSE(equimultiple_along(germ("(z^3 + y^3 + x*(y^2 + z^2))*(y - z + x)", {0}), line));
}

TEST_CASE("cuspidal edge of the swallowtail after the line blow-up") {
  std::vector<std::string> c4{"x4", "y4", "z4"};
  SurfaceGerm o5{P("256*z4^3 - 27*x4*y4^3 - 128*x4*y4*z4^2 + 144*x4*y4^2*z4 + 16*x4^2*y4^2*z4 - 4*x4^2*y4^3", c4),
                 {Rat(-27, 8), 0, 0},
                 {1}};
  CHECK(multiplicity(o5) == 3);
  auto s = log_sing_curve(o5, 2);
  REQUIRE(s.status == SingCurve::Smooth);
  // the edge has multiplicity 2, and so does the branch containing it at o5
  MPoly on_edge = translate(o5.F, {Rat(-27, 8), 1, Rat(9, 32)});
  CHECK(order_at_origin(on_edge) == 2);
  CHECK(equimultiple_along(o5, *s.param));
  auto d = contour_data(o5.local(), 2, o5.divisor);
  CHECK(contour_off_curve_at_origin(d, *s.param) == Tri::No);
}

TEST_CASE("contour predicate") {
  CHECK_FALSE(contour_predicate_smooth(germ("z^2 - x^3", {0}), 2));
  CHECK(contour_predicate_smooth(germ("z^2 - y", {0}), 2));
  // a monomial discriminant never gives a contour
  CHECK_FALSE(contour_predicate_smooth(germ("z^3 - x^2*y", {0, 1}), 2));
  // the swallowtail after two blow-ups, at o1 = origin of the x-chart: finite
  std::vector<std::string> c2{"x2", "y2", "z2"};
  SurfaceGerm o1{P("256*z2^3 - 27*x2^2*y2^4 - 128*z2^2 + 144*x2*y2^2*z2 + 16*z2 - 4*x2*y2^2", c2), {0, 0, 0}, {0}};
  CHECK_FALSE(contour_predicate_smooth(o1, 2));
}

TEST_CASE("contour away from the singular curve") {
  std::vector<std::string> c2{"x2", "y2", "z2"};
  SurfaceGerm at_minus_one{P("z2^2 - x2^2*y2^2*(x2 + 1)", c2), {-1, 0, 0}, {1}};
  CHECK(log_sing_curve(at_minus_one, 2).status == SingCurve::Empty);
  CHECK(contour_predicate_smooth(at_minus_one, 2));

  SurfaceGerm origin{P("z2^2 - x2^2*y2^2*(x2 + 1)", c2), {0, 0, 0}, {1}};
  auto s = log_sing_curve(origin, 2);
  REQUIRE(s.status == SingCurve::Smooth);
  CHECK(equimultiple_along(origin, *s.param));
  auto d = contour_data(origin.local(), 2, origin.divisor);
  CHECK(contour_off_curve_at_origin(d, *s.param) == Tri::No);

  // before the second blow-up the contour branch x + y = 0 still meets the singular line
  std::vector<std::string> c1{"x1", "y1", "z1"};
  SurfaceGerm ol{P("z1^2 - x1^2*y1*(x1 + y1)", c1), {0, 0, 0}, {1}};
  auto s1 = log_sing_curve(ol, 2);
  REQUIRE(s1.status == SingCurve::Smooth);
  auto d1 = contour_data(ol.local(), 2, ol.divisor);
  CHECK(contour_off_curve_at_origin(d1, *s1.param) != Tri::No);
}

TEST_CASE("quasi-ordinary") {
  CHECK(quasi_ordinary_at(germ("z^2 - x*y"), 2));
  CHECK_FALSE(quasi_ordinary_at(germ("z^2 - x^2*(x + y^2)"), 2));
  CHECK(quasi_ordinary_at(germ("z^2 - x"), 2));
}

TEST_CASE("polynomial roots of plane curves") {
  std::vector<std::string> na{"n", "a"};
  auto r = polynomial_root(parse_poly("(a - n^2 + 3*n)*(a + 1)", na), 0, 1);
  REQUIRE(r);
  CHECK(*r == parse_poly("n^2 - 3*n", na));
  CHECK_FALSE(polynomial_root(parse_poly("a^2 - n", na), 0, 1));
  CHECK_FALSE(polynomial_root(parse_poly("a*(1 - n) - n", na), 0, 1));
}

TEST_CASE("series roots and curves that are not polynomial graphs") {
  std::vector<std::string> na{"n", "a"};
  auto r = series_root(parse_poly("a*(1 - n) - n", na), 0, 1, 6);
  REQUIRE(r);
  CHECK(*r == std::vector<Rat>{0, 1, 1, 1, 1, 1});
  CHECK_FALSE(series_root(parse_poly("a^2 - n", na), 0, 1, 6));

  // Sing is {z = 0, y = x / (1 - x)}
  SurfaceGerm g = germ("z^2 - (y*(1 - x) - x)^2*(x + 1)", {0});
  auto s = log_sing_curve(g, 2);
  REQUIRE(s.status == SingCurve::Smooth);
  REQUIRE(s.param);
  CHECK(s.param->precision > 0);
  CHECK(s.param->Z.is_zero());
  MPoly expect(XYZ);
  for (std::size_t k = 1; k < s.param->precision; ++k) expect += pow(P("x"), static_cast<unsigned>(k));
  CHECK(s.param->A == expect);
  CHECK(equimultiple_along(g, *s.param));
}
