#pragma once

#include "operadix/poly.hpp"
#include "operadix/rational.hpp"
#include "operadix/tree.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace operadix {

/// Finite linear combination of trees of a single arity with coefficients in
/// Rational or MultiPoly. No zero coefficients are stored.
template <class Coeff>
class LinearCombination {
 public:
  using Map = std::map<Tree, Coeff>;

  LinearCombination() = default;
  static LinearCombination monomial(const Tree& t, const Coeff& c = Coeff(1)) {
    LinearCombination e;
    e.add(t, c);
    return e;
  }

  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Arity shared by all monomials, 0 for the zero element.
  int arity() const { return terms_.empty() ? 0 : terms_.begin()->first.arity(); }

  Coeff coefficient(const Tree& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add(const Tree& t, const Coeff& c) {
    if (operadix::is_zero(c)) return;
    if (!terms_.empty() && terms_.begin()->first.arity() != t.arity())
      throw std::invalid_argument("linear combination must be homogeneous in arity");
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (operadix::is_zero(it->second)) terms_.erase(it);
    }
  }

  void erase(const Tree& t) { terms_.erase(t); }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& [t, c] : o.terms_) add(t, Coeff(-c));
    return *this;
  }
  LinearCombination& operator*=(const Coeff& s) {
    if (operadix::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    Map scaled;
    for (auto& [t, c] : terms_) {
      Coeff v = c * s;
      if (!operadix::is_zero(v)) scaled.emplace(t, std::move(v));
    }
    terms_ = std::move(scaled);
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(LinearCombination a, const Coeff& s) { return a *= s; }
  friend LinearCombination operator*(const Coeff& s, LinearCombination a) { return a *= s; }

  bool operator==(const LinearCombination&) const = default;

  /// Applies `f` to every coefficient, dropping zeros.
  template <class F>
  auto map_coefficients(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const Coeff&>()))>;
    LinearCombination<Out> out;
    for (const auto& [t, c] : terms_) out.add(t, f(c));
    return out;
  }

 private:
  Map terms_;
};

template <class Coeff>
using OperadElement = LinearCombination<Coeff>;

/// Specialises a parametric element at a rational point.
inline OperadElement<Rational> evaluate(const OperadElement<MultiPoly>& e, std::span<const Rational> point) {
  return e.map_coefficients([&](const MultiPoly& p) { return p.evaluate(point); });
}

/// Text form `(c1) T1 + (c2) T2 ...` with trees in prefix notation.
template <class Coeff, class CoeffPrinter>
std::string to_text(const LinearCombination<Coeff>& e, std::span<const std::string> names, CoeffPrinter&& print) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : e.terms()) {
    if (!first) out += " + ";
    first = false;
    out += "(" + print(c) + ") " + to_text(t, names);
  }
  return out;
}

}  // namespace operadix
