#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tanlim/polyring.hpp"

namespace tanlim {

struct SurfaceGerm {
  MPoly F;
  std::vector<Rat> p;                   // base point, F(p) = 0
  std::vector<std::size_t> divisor;     // coordinate planes {x_i = 0} through p that form N
  MPoly local() const { return translate(F, p); }
};

// Reduced integer triple, first nonzero entry positive.
struct ProjPoint {
  Int a, b, c;
  static ProjPoint of(const Rat& a, const Rat& b, const Rat& c);
  std::string str() const;
  friend bool operator==(const ProjPoint& x, const ProjPoint& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }
};

enum class LimitKind { Full, Finite };

struct LimitVerdict {
  LimitKind kind = LimitKind::Finite;
  std::vector<ProjPoint> points;
  std::vector<std::string> unresolved;
  std::string rule;    // rule that justified the verdict
  std::string reason;  // short human text
  int depth = 0;
};

int multiplicity(const SurfaceGerm& g);
MPoly tangent_cone(const SurfaceGerm& g);
bool is_homogeneous(const MPoly& f);
bool is_union_of_planes(const MPoly& cone);
bool contains_plane(const MPoly& cone, const MPoly& linear);

// Rational linear factors of a homogeneous form, each normalized; `rest` gets the cofactor.
std::vector<MPoly> rational_linear_factors(const MPoly& form, MPoly* rest = nullptr);

// Set-level discriminant of F with respect to dropping `drop`: squarefree
// primitive part of Res(F, dF/d drop) divided by the leading coefficient.
MPoly discriminant(const MPoly& f, std::size_t drop);
MPoly discriminant(const SurfaceGerm& g, std::size_t drop);

struct MonomialSplit {
  std::vector<int> powers;  // one per listed variable
  MPoly cofactor;
};
MonomialSplit monomial_split(const MPoly& r, const std::vector<std::size_t>& vars);
MonomialSplit monomial_split(const MPoly& r);  // all variables

std::vector<MPoly> sing_locus_generators(const SurfaceGerm& g);

// Sing^N near the base point, in local coordinates (base point at the origin).
// The curve is a graph over the divisor variable n: a = A(n), z = Z(n).
// A and Z are exact polynomials (precision 0) or power series truncated
// below n^precision.
struct CurveParam {
  std::size_t n = 0, a = 0, z = 0;
  MPoly A, Z;  // univariate in n, over the germ's variables
  std::size_t precision = 0;
};

struct SingCurve {
  enum Status { Empty, Smooth, NotSmoothTransversal, Unresolved } status = Empty;
  std::optional<CurveParam> param;
  std::string note;
};

SingCurve log_sing_curve(const SurfaceGerm& g, std::size_t drop);
bool equimultiple_along(const SurfaceGerm& g, const CurveParam& curve);

enum class Tri { No, Yes, Unknown };
std::string to_string(Tri t);

// Contour analysis of a germ translated to the origin, for the projection that
// forgets `drop`. Discriminant components are grouped by the first index k with
// a non-vanishing principal subresultant; the k-th subresultant locates the
// critical points over each group.
struct ContourGroup {
  int k = 0;
  MPoly factor;
  MPoly sub;
};

struct ContourData {
  std::size_t drop = 0;
  // When the fibre over the origin loses degree, G is (1 + c z)^d F(z / (1 + c z))
  // so that no root escapes to infinity there.
  Rat mobius = 0;
  MPoly G;
  MPoly disc;
  MPoly cofactor;
  std::vector<ContourGroup> groups;
  MPoly leftover;
};

ContourData contour_data(const MPoly& local, std::size_t drop, const std::vector<std::size_t>& divisor);
// Does the closure of (contour minus N) pass through the origin?
Tri contour_at_origin(const ContourData& d);
// Same, ignoring the branch of the contour contained in the given Sing curve.
Tri contour_off_curve_at_origin(const ContourData& d, const CurveParam& curve);

// o in the closure of Xi_rho(S) minus N, for a germ whose singular locus lies in N.
bool contour_predicate_smooth(const SurfaceGerm& g, std::size_t drop);

// Discriminant union rho(N) is a normal crossings curve at rho(p).
bool quasi_ordinary_at(const SurfaceGerm& g, std::size_t drop);

// Choose a projection (variable to drop) valid at the origin of `local`:
// not a divisor variable and the fibre through the origin is not inside S.
std::optional<std::size_t> projection_for(const MPoly& local, const std::vector<std::size_t>& divisor);

// Root a = A(n) of P(n, a) through the origin with P_a(0,0) != 0, if it is polynomial.
std::optional<MPoly> polynomial_root(const MPoly& p, std::size_t n, std::size_t a);

// The same root as a power series, coefficients of n^0 .. n^(K-1).
std::optional<std::vector<Rat>> series_root(const MPoly& p, std::size_t n, std::size_t a, std::size_t K);

}  // namespace tanlim
