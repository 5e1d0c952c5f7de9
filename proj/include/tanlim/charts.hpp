#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tanlim/cfrac.hpp"
#include "tanlim/polyring.hpp"

namespace tanlim {

// One coordinate plane {var = 0} of a chart that belongs to the divisor.
struct DivisorComponent {
  std::string key;
  std::size_t var;
};

struct ChartNode {
  int id = 0;
  int parent = -1;
  std::string kind;  // root, point, line, change
  std::vector<std::string> vars;
  // parent variable -> polynomial in this chart's variables
  std::map<std::string, MPoly> substitution;
  MPoly strict_transform;
  int exceptional_multiplicity = 0;
  std::optional<std::size_t> exceptional_var;
  std::vector<DivisorComponent> divisor;
  std::vector<std::string> flags;
  int depth = 0;

  std::optional<std::size_t> divisor_var(const std::string& key) const;
  std::optional<std::string> divisor_key(std::size_t var) const;
  bool is_exceptional(const std::string& key) const { return key.rfind("E", 0) == 0; }
};

// Append-only blow-up tree.
class BlowupTree {
 public:
  int add_root(const MPoly& f, std::vector<DivisorComponent> divisor);
  int add(ChartNode node);
  const ChartNode& at(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  ChartNode& at(int id) { return nodes_.at(static_cast<std::size_t>(id)); }
  const std::vector<ChartNode>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  std::string new_exceptional_key();

 private:
  std::vector<ChartNode> nodes_;
  int next_exceptional_ = 0;
};

// Blow up the point p of chart `node`. Child i uses variable i as the
// exceptional coordinate: x_i = p_i + u, x_j = p_j + u * x_j'.
std::array<int, 3> point_blowup(BlowupTree& tree, int node, const std::vector<Rat>& p);

// Blow up the coordinate line {x_a = x_b = 0}. Child 0: x_a = x_a' x_b', x_b = x_b'
// (exceptional x_b'); child 1: x_a = x_a', x_b = x_a' x_b' (exceptional x_a').
std::array<int, 2> line_blowup(BlowupTree& tree, int node, std::size_t a, std::size_t b);

// Invertible polynomial change of coordinates (no exceptional divisor).
int coordinate_change(BlowupTree& tree, int node, const std::map<std::string, MPoly>& substitution);

// Re-checks substitute(parent, map) = e^m * strict with e not dividing strict.
bool verify_strict_transform(const BlowupTree& tree, int node);

// Laurent monomial c * prod v_i^{k_i} over an ordered list of variables.
struct LaurentMonomial {
  Rat coeff = 1;
  std::vector<int> exps;
};

// target variable -> monomial over the source variables
struct MonomialMap {
  std::vector<std::string> source;
  std::vector<std::string> target;
  std::vector<LaurentMonomial> images;  // one per target variable
};

MonomialMap compose(const MonomialMap& outer, const MonomialMap& inner);
MonomialMap invert(const MonomialMap& m);
bool is_identity(const MonomialMap& m);
std::string to_string(const LaurentMonomial& m, const std::vector<std::string>& vars);

std::vector<std::string> alpha_vars(int chart);

struct AlphaAtlas {
  CFrac alpha;
  MonomialMap t13;  // (u3, v3, w3) in terms of (u1, v1, w1)
  MonomialMap t24;
  MonomialMap t12;
};

AlphaAtlas alpha_atlas(const CFrac& alpha);

enum class Side { b, s };

struct RefineMap {
  int child_chart;   // chart index of M^(alpha_b) or M^(alpha_s)
  int parent_chart;  // chart index of M^(alpha)
  MonomialMap map;   // parent coordinates in terms of child coordinates
};

// The four per-chart maps of the blow-up of M^(alpha) along Z^{alpha_b} or Z^{alpha_s}.
std::array<RefineMap, 4> alpha_refine(const CFrac& alpha, Side side);

// u_{1,i}, v_{1,i}, w_{1,i} in terms of the point blow-up charts (x2,y2,z2), (x3,y3,z3).
MonomialMap alpha_base_chart(int chart);

struct AlphaChart {
  CFrac alpha;
  int index = 1;
  Side side = Side::b;
  std::array<std::string, 3> coords() const;
};

}  // namespace tanlim
