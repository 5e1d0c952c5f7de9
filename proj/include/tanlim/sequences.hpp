#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tanlim/cfrac.hpp"
#include "tanlim/charts.hpp"
#include "tanlim/geometry.hpp"

namespace tanlim {

struct Event {
  std::string kind;  // candidate, rule, center, discriminant, wellbehaved, unresolved
  std::string rule;
  int node = -1;
  std::vector<Rat> point;
  std::string result;
  std::string detail;
};

struct Trace {
  BlowupTree tree;
  std::vector<Event> events;
  std::map<std::string, CFrac> labels;  // divisor key -> continued fraction label

  std::vector<const Event*> find(const std::string& kind, const std::string& rule = "") const;
};

struct Options {
  int max_depth = 64;
};

// Reads TANLIM_MAX_DEPTH when set.
Options default_options();

struct Decision {
  LimitVerdict verdict;
  Trace trace;
};

// Logarithmic limit of tangents at p for the divisor made of the given
// coordinate planes (one plane: smooth N; two planes: crossing point).
Decision decide(const MPoly& f, const std::vector<Rat>& p, const std::vector<std::size_t>& divisor,
                const Options& opt = default_options());

struct Pencil {
  ProjPoint direction;
  std::vector<MPoly> forms;  // two linear forms cutting out the line
  std::string line_str() const;
};

struct ClassicalLimit {
  std::vector<ProjPoint> dual_points;
  std::vector<Pencil> pencils;
  bool full = false;
  std::vector<std::string> unresolved;
  std::string describe() const;
};

struct ClassicalResult {
  ClassicalLimit limit;
  Trace trace;
};

ClassicalResult classical_limit(const MPoly& f, const std::vector<Rat>& o, const Options& opt = default_options());

// Is the curve G(v, w) = 0 on E^(alpha) well behaved? The chart is the one where
// the exceptional coordinate u and N_s = {v = 0} are visible (index 2), or its
// neighbour over N_b (index 1). nullopt when the test cannot decide.
std::optional<bool> well_behaved(const MPoly& g, std::size_t v, std::size_t w, const CFrac& alpha, int chart = 2);

struct Candidates {
  std::vector<std::vector<Rat>> points;
  std::vector<std::string> unresolved;
};

// Points of S on the exceptional plane {x_e = 0} where the discriminant
// cofactor of a compatible projection vanishes.
Candidates candidate_points(const MPoly& f, std::size_t e,
                            const std::function<bool(const std::vector<Rat>&)>& keep = {});

// Runs the first sequence at crossing points of {x_a = 0} and {x_b = 0} in a standalone trace.
Decision first_sequence(const MPoly& f, std::size_t a, std::size_t b, const std::vector<Rat>& third_values,
                        const Options& opt = default_options());

std::string point_str(const std::vector<Rat>& p);

}  // namespace tanlim
