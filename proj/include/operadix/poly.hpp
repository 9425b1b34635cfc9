#pragma once

#include "operadix/rational.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace operadix {

inline constexpr std::size_t kMaxVariables = 32;

/// Ordered, named variables of a polynomial ring over Q.
class ParameterRing {
 public:
  explicit ParameterRing(std::vector<std::string> names);

  /// The sixteen ansatz parameters, spelled a1..a4 b1..b4 g1..g4 d1..d4
  /// for alpha, beta, gamma, delta.
  static ParameterRing ansatz_parameters();

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const ParameterRing&) const = default;

 private:
  std::vector<std::string> names_;
};

/// Exponent vector. Unused trailing slots stay zero, so monomials from rings
/// of different sizes compare consistently.
struct Monomial {
  std::array<std::uint8_t, kMaxVariables> exponents{};
  std::uint32_t degree = 0;

  static Monomial variable(std::size_t index, unsigned power = 1);

  bool is_one() const { return degree == 0; }
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires `b.divides(a)`.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  /// Lexicographic with variable 0 largest. Used for canonical storage.
  auto operator<=>(const Monomial& o) const { return exponents <=> o.exponents; }
  bool operator==(const Monomial& o) const { return exponents == o.exponents; }
};

enum class MonomialOrder { lex, grevlex };

std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder order);
std::string to_string(MonomialOrder order);
MonomialOrder parse_monomial_order(std::string_view name);

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept sorted by descending lexicographic monomial with no zero
/// coefficients, so structural equality is polynomial equality.
class MultiPoly {
 public:
  struct Term {
    Monomial monomial;
    Rational coeff;
    bool operator==(const Term&) const = default;
  };

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT: constants convert implicitly
  MultiPoly(int c) : MultiPoly(Rational(c)) {}
  static MultiPoly variable(std::size_t index);
  static MultiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial, nullopt otherwise.
  std::optional<Rational> constant_value() const;
  std::uint32_t total_degree() const;
  const Term& leading_term(MonomialOrder order) const;

  Rational evaluate(std::span<const Rational> point) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  /// Multiply by a scalar times a monomial.
  MultiPoly scaled(const Rational& c, const Monomial& m) const;

  bool operator==(const MultiPoly&) const = default;

 private:
  std::vector<Term> terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

/// Text form `3*a1^2 - 2/5*b3*d2 + 1`.
MultiPoly parse_poly(std::string_view text, const ParameterRing& ring);
std::string to_string(const MultiPoly& p, const ParameterRing& ring);

/// One polynomial per non-empty line; `#` starts a comment.
std::vector<MultiPoly> parse_poly_list(std::string_view text, const ParameterRing& ring);

/// Scales so the leading coefficient (in `order`) is one. Zero stays zero.
MultiPoly make_monic(const MultiPoly& p, MonomialOrder order);

}  // namespace operadix
