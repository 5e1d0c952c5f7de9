#include "tanlim/cfrac.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tanlim {

std::pair<std::int64_t, std::int64_t> eval_digits(const std::vector<std::int64_t>& digits) {
  if (digits.empty()) throw std::domain_error("empty continued fraction");
  std::int64_t num = digits.back(), den = 1;
  for (std::size_t i = digits.size() - 1; i-- > 0;) {
    std::int64_t t = digits[i] * num + den;
    den = num;
    num = t;
  }
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

CFrac CFrac::infinity() { return CFrac{{0, 0}, 1, 0}; }
CFrac CFrac::zero() { return CFrac{{0}, 0, 1}; }
CFrac CFrac::integer(std::int64_t a) { return of(a, 1); }

CFrac CFrac::of(std::int64_t num, std::int64_t den) {
  if (den == 0) return infinity();
  if (num < 0 || den < 0) throw std::domain_error("negative rational");
  std::int64_t g = std::gcd(num, den);
  if (g == 0) throw std::domain_error("0/0");
  num /= g;
  den /= g;
  CFrac c;
  c.n = num;
  c.d = den;
  std::int64_t a = num, b = den;
  while (b != 0) {
    c.digits.push_back(a / b);
    std::int64_t r = a % b;
    a = b;
    b = r;
  }
  return c;
}

CFrac CFrac::from_digits(std::vector<std::int64_t> digits) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] < 0) throw std::domain_error("negative continued fraction digit");
    if (i > 0 && digits[i] == 0 && !(digits.size() == 2 && i == 1))
      throw std::domain_error("zero digit after the first position");
  }
  auto [num, den] = eval_digits(digits);
  CFrac c;
  c.digits = std::move(digits);
  c.n = num;
  c.d = den;
  return c;
}

CFrac CFrac::canonical() const { return of(n, d); }

std::string CFrac::str() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < digits.size(); ++i) out << (i ? "," : "") << digits[i];
  out << "]";
  return out.str();
}

std::string CFrac::value_str() const {
  if (is_infinite()) return "1/0";
  return std::to_string(n) + "/" + std::to_string(d);
}

std::pair<CFrac, CFrac> from_rational(std::int64_t num, std::int64_t den) {
  if (num <= 0 || den <= 0) throw std::domain_error("from_rational expects a positive rational");
  CFrac c = CFrac::of(num, den);
  std::vector<std::int64_t> sib = c.digits;
  sib.back() -= 1;
  sib.push_back(1);
  return {c, CFrac::from_digits(sib)};
}

std::int64_t length(const CFrac& a) {
  CFrac c = a.canonical();
  return std::accumulate(c.digits.begin(), c.digits.end(), std::int64_t{0});
}

namespace {

// (omega, pi) by the parity rule on the canonical expansion
std::pair<CFrac, CFrac> neighbours(const CFrac& a) {
  if (a.is_infinite() || a.n == 0) throw std::domain_error("omega/pi need a positive finite rational");
  CFrac c = a.canonical();
  if (c.is_integer()) return {CFrac::integer(c.n - 1), CFrac::infinity()};
  std::size_t g = c.digits.size() - 1;
  std::vector<std::int64_t> dec = c.digits, drop = c.digits;
  dec.back() -= 1;
  drop.pop_back();
  CFrac x = CFrac::from_digits(dec), y = CFrac::from_digits(drop);
  if (g % 2 == 0) return {x, y};
  return {y, x};
}

}  // namespace

CFrac omega(const CFrac& a) { return neighbours(a).first; }
CFrac pi_op(const CFrac& a) { return neighbours(a).second; }

CFrac mediant(const CFrac& a, const CFrac& b) { return CFrac::of(a.n + b.n, a.d + b.d); }

CFrac succ_s(const CFrac& a) { return mediant(a, omega(a)); }
CFrac succ_b(const CFrac& a) { return mediant(a, pi_op(a)); }

CFrac parse_cfrac(const std::string& text) {
  auto bad = [&] { return std::invalid_argument("bad continued fraction: " + text); };
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') {
    std::vector<std::int64_t> digits;
    std::stringstream ss(text.substr(1, text.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        digits.push_back(std::stoll(item, &used));
        if (item.find_first_not_of(" \t", used) != std::string::npos) throw bad();
      } catch (const std::logic_error&) {
        throw bad();
      }
    }
    if (digits.empty()) throw bad();
    return CFrac::from_digits(std::move(digits));
  }
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return CFrac::of(std::stoll(text), 1);
    return CFrac::of(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw bad();
  }
}

}  // namespace tanlim
