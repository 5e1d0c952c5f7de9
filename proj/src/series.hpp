#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "tanlim/geometry.hpp"

namespace tanlim::series {

// Truncated power series in one variable: coefficients of t^0 .. t^K.
using Series = std::vector<Rat>;

inline Series mul(const Series& a, const Series& b) {
  std::size_t K = std::min(a.size(), b.size());
  Series r(K, 0);
  for (std::size_t i = 0; i < K; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < K; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

inline Series add(Series a, const Series& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) a[i] += b[i];
  return a;
}

// 1 / a for a(0) != 0.
inline Series inverse(const Series& a) {
  Series r(a.size(), 0);
  r[0] = 1 / a[0];
  for (std::size_t k = 1; k < a.size(); ++k) {
    Rat s = 0;
    for (std::size_t j = 1; j <= k; ++j) s += a[j] * r[k - j];
    r[k] = -s / a[0];
  }
  return r;
}

inline bool is_zero(const Series& a) {
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

// Index of the first nonzero coefficient, or size() when zero to this precision.
inline std::size_t order(const Series& a) {
  std::size_t i = 0;
  while (i < a.size() && a[i] == 0) ++i;
  return i;
}

// f(n) as a series; f may only involve n.
inline Series of(const MPoly& f, std::size_t n, std::size_t K) {
  Series s(K, 0);
  for (const auto& [e, c] : f.terms())
    if (static_cast<std::size_t>(e[n]) < K) s[e[n]] += c;
  return s;
}

inline MPoly to_poly(const Series& s, std::size_t n, const std::vector<std::string>& vars) {
  MPoly r(vars);
  for (std::size_t i = 0; i < s.size(); ++i) {
    Exponent e(vars.size(), 0);
    e[n] = static_cast<int>(i);
    r.add_term(e, s[i]);
  }
  return r;
}

// Coefficients of f in `var` (var != n; npos sums everything into one series),
// with n -> t and every variable listed in `curve` replaced by its series.
inline std::vector<Series> coefficients_along(const MPoly& f, std::size_t var, std::size_t n,
                                              const std::vector<std::pair<std::size_t, Series>>& curve,
                                              std::size_t K) {
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  int d = var == none ? 0 : std::max(f.degree(var), 0);
  std::vector<Series> out(static_cast<std::size_t>(d) + 1, Series(K, 0));
  std::vector<std::vector<Series>> powers(curve.size());
  for (const auto& [e, c] : f.terms()) {
    if (static_cast<std::size_t>(e[n]) >= K) continue;
    Series term(K, 0);
    term[e[n]] = c;
    for (std::size_t i = 0; i < curve.size(); ++i) {
      auto& pw = powers[i];
      std::size_t k = static_cast<std::size_t>(e[curve[i].first]);
      if (pw.empty()) {
        Series one(K, 0);
        one[0] = 1;
        pw.push_back(std::move(one));
      }
      while (pw.size() <= k) pw.push_back(mul(pw.back(), curve[i].second));
      if (k) term = mul(term, pw[k]);
    }
    std::size_t slot = var == none ? 0 : static_cast<std::size_t>(e[var]);
    out[slot] = add(std::move(out[slot]), term);
  }
  return out;
}

// f along the curve n -> t, curve[i].first -> curve[i].second.
inline Series along(const MPoly& f, std::size_t n, const std::vector<std::pair<std::size_t, Series>>& curve,
                    std::size_t K) {
  return coefficients_along(f, static_cast<std::size_t>(-1), n, curve, K)[0];
}

}  // namespace tanlim::series

namespace tanlim {

// Truncation order used for the curve's series.
std::size_t curve_precision(const MPoly& G, const CurveParam& c);

}  // namespace tanlim
