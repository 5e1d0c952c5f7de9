#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tanlim {

using Rat = mpq_class;
using Int = mpz_class;
using Exponent = std::vector<int>;

// Raised when operands live over different variable lists or a variable is unknown.
struct StructuralError : std::logic_error {
  using std::logic_error::logic_error;
};

// Raised for inputs outside an operation's domain (both operands free of the
// eliminated variable, order of the zero polynomial, ...).
struct DegenerateInput : std::domain_error {
  using std::domain_error::domain_error;
};

// Graded lexicographic order, largest first. Ties are broken by the
// position of variables in the owning polynomial's variable list.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class MPoly {
 public:
  using TermMap = std::map<Exponent, Rat, GrlexGreater>;

  MPoly() = default;
  explicit MPoly(std::vector<std::string> vars);

  static MPoly constant(const std::vector<std::string>& vars, const Rat& c);
  static MPoly variable(const std::vector<std::string>& vars, const std::string& name);
  static MPoly variable(const std::vector<std::string>& vars, std::size_t index);
  static MPoly monomial(const std::vector<std::string>& vars, Exponent e, const Rat& c = 1);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_term() const;
  Rat coeff(const Exponent& e) const;

  // Leading term in grlex order. Undefined for zero.
  const Exponent& leading_exponent() const { return terms_.begin()->first; }
  const Rat& leading_coeff() const { return terms_.begin()->second; }

  int total_degree() const;
  int degree(std::size_t var) const;
  int degree(const std::string& var) const { return degree(index_of(var)); }
  bool involves(std::size_t var) const;

  std::size_t index_of(const std::string& name) const;
  std::optional<std::size_t> find_var(const std::string& name) const;

  void add_term(const Exponent& e, const Rat& c);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rat& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
  friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);

  Rat eval(const std::vector<Rat>& point) const;

  // Canonical text: grlex terms, largest first.
  std::string str() const;

 private:
  void require_same_vars(const MPoly& o) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

MPoly add(const MPoly& a, const MPoly& b);
MPoly mul(const MPoly& a, const MPoly& b);
MPoly pow(const MPoly& a, unsigned k);

// Replace variables by polynomials over `target`. Unbound variables of f are
// carried over by name and must exist in `target`.
MPoly substitute(const MPoly& f, const std::map<std::string, MPoly>& bindings,
                 const std::vector<std::string>& target);
MPoly substitute(const MPoly& f, const std::map<std::string, MPoly>& bindings);

// Re-express f over another variable list (by name).
MPoly with_vars(const MPoly& f, const std::vector<std::string>& target);

MPoly partial(const MPoly& f, std::size_t var);
MPoly partial(const MPoly& f, const std::string& var);

// f = sum_i coeffs[i] * var^i; coefficients keep the full variable list.
std::vector<MPoly> coefficients_in(const MPoly& f, std::size_t var);
MPoly from_coefficients(const std::vector<MPoly>& coeffs, std::size_t var);
MPoly leading_coeff_in(const MPoly& f, std::size_t var);

// Fix one variable to a rational value (result keeps the variable list).
MPoly specialize(const MPoly& f, std::size_t var, const Rat& value);

std::optional<MPoly> divide_exact(const MPoly& f, const MPoly& g);
MPoly pseudo_remainder(const MPoly& a, const MPoly& b, std::size_t var);

// Integer-primitive with positive leading coefficient; zero stays zero.
MPoly normalize(const MPoly& f);
Rat rational_content(const MPoly& f);

MPoly gcd(const MPoly& f, const MPoly& g);
MPoly content_in(const MPoly& f, std::size_t var);
MPoly primitive_part_in(const MPoly& f, std::size_t var);
MPoly squarefree_part(const MPoly& f);

MPoly resultant(const MPoly& f, const MPoly& g, std::size_t var);
MPoly resultant(const MPoly& f, const MPoly& g, const std::string& var);
// Fraction-free determinant of the Sylvester matrix; slow reference path.
MPoly resultant_sylvester(const MPoly& f, const MPoly& g, std::size_t var);
MPoly determinant(std::vector<std::vector<MPoly>> m, const std::vector<std::string>& vars);

// k-th subresultant S_k(f, g) as a polynomial in var (deg_var S_k <= k),
// and its principal coefficient (coefficient of var^k).
MPoly subresultant(const MPoly& f, const MPoly& g, std::size_t var, int k);

int order_at_origin(const MPoly& f);
MPoly homogeneous_part(const MPoly& f, int d);
MPoly translate(const MPoly& f, const std::vector<Rat>& p);

// Rational roots of a polynomial in a single variable (other variables absent).
std::vector<Rat> rational_roots(const MPoly& f, std::size_t var);
int root_multiplicity(const MPoly& f, std::size_t var, const Rat& r);

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int column);
  int line;
  int column;
};

MPoly parse_poly(const std::string& text, const std::vector<std::string>& vars);

std::string to_string(const Rat& r);

}  // namespace tanlim
