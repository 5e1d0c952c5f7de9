#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tanlim {

// A non-negative rational (or infinity) together with one of its continued
// fraction expansions [a0, a1, ..., ag].
struct CFrac {
  std::vector<std::int64_t> digits;
  std::int64_t n = 0;  // numerator
  std::int64_t d = 1;  // denominator, 0 for infinity

  static CFrac infinity();
  static CFrac zero();
  static CFrac integer(std::int64_t a);
  // Canonical expansion (last digit >= 2, or a single digit).
  static CFrac of(std::int64_t num, std::int64_t den);
  static CFrac from_digits(std::vector<std::int64_t> digits);

  bool is_infinite() const { return d == 0; }
  bool is_integer() const { return d == 1; }
  std::int64_t e() const { return n + d; }
  CFrac canonical() const;
  std::string str() const;
  std::string value_str() const;

  friend bool operator==(const CFrac& a, const CFrac& b) { return a.n == b.n && a.d == b.d; }
};

std::pair<std::int64_t, std::int64_t> eval_digits(const std::vector<std::int64_t>& digits);

// Both expansions of a positive rational: canonical first, sibling second.
std::pair<CFrac, CFrac> from_rational(std::int64_t num, std::int64_t den);

std::int64_t length(const CFrac& a);
CFrac omega(const CFrac& a);
CFrac pi_op(const CFrac& a);
CFrac succ_s(const CFrac& a);
CFrac succ_b(const CFrac& a);
CFrac mediant(const CFrac& a, const CFrac& b);

// Parses "[a0,a1,...]" or "p/q".
CFrac parse_cfrac(const std::string& text);

}  // namespace tanlim
