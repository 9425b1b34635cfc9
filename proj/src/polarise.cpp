#include "operadix/polarise.hpp"

#include <map>

namespace operadix {

namespace {

using Combination = std::map<Tree, Rational>;

void accumulate(Combination& acc, const Tree& t, const Rational& c) {
  auto& slot = acc[t];
  slot += c;
  if (is_zero(slot)) acc.erase(t);
}

/// Maps each binary vertex of `term` through `expand`, which turns a pair of
/// already-expanded children into a combination.
template <class Expand>
Combination expand_term(const Tree& term, std::size_t i, Expand&& expand) {
  if (term.is_leaf(i)) return {{Tree::leaf(term.label(i)), Rational(1)}};
  auto kids = term.children(i);
  Combination left = expand_term(term, kids[0], expand);
  Combination right = expand_term(term, kids[1], expand);
  Combination out;
  for (const auto& [a, ca] : left)
    for (const auto& [b, cb] : right)
      for (const auto& [t, c] : expand(term.gen(i), a, b)) accumulate(out, t, ca * cb * c);
  return out;
}

MultilinearExpr rebuild(const Signature& sig, const Combination& acc) {
  std::vector<std::pair<Rational, Tree>> terms;
  for (const auto& [t, c] : acc) terms.push_back({c, t});
  return make_expr(sig, terms);
}

}  // namespace

Signature polarised_signature() {
  return Signature({{".", 2, Symmetry::commutative}, {"^", 2, Symmetry::anticommutative}});
}

MultilinearExpr polarise(const MultilinearExpr& e) {
  const auto& ops = e.signature.operations();
  if (ops.size() != 1 || ops[0].arity != 2 || ops[0].symmetry != Symmetry::none)
    throw std::invalid_argument("polarise expects exactly one symmetry-free binary operation");
  const Signature out_sig = polarised_signature();
  const Rational half(1, 2);
  Combination acc;
  for (const auto& [t, c] : e.terms.terms()) {
    auto expanded = expand_term(t, 0, [&](int, const Tree& a, const Tree& b) {
      return std::vector<std::pair<Tree, Rational>>{{Tree::binary(0, a, b), half}, {Tree::binary(1, a, b), half}};
    });
    for (const auto& [u, q] : expanded) accumulate(acc, u, c * q);
  }
  // make_expr canonicalises, which merges x.y/y.x and x^y/-y^x.
  return rebuild(out_sig, acc);
}

MultilinearExpr depolarise(const MultilinearExpr& e, const std::string& product_symbol) {
  const auto& ops = e.signature.operations();
  int comm = -1, anti = -1;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].arity != 2) throw std::invalid_argument("depolarise expects binary operations");
    if (ops[i].symmetry == Symmetry::commutative && comm < 0) comm = static_cast<int>(i);
    else if (ops[i].symmetry == Symmetry::anticommutative && anti < 0) anti = static_cast<int>(i);
    else throw std::invalid_argument("depolarise expects one commutative and one anticommutative operation, got '" +
                                     ops[i].symbol + "'");
  }
  if (comm < 0 || anti < 0)
    throw std::invalid_argument("depolarise expects one commutative and one anticommutative operation");
  const Signature out_sig({{product_symbol, 2, Symmetry::none}});
  Combination acc;
  for (const auto& [t, c] : e.terms.terms()) {
    auto expanded = expand_term(t, 0, [&](int gen, const Tree& a, const Tree& b) {
      Rational sign = gen == anti ? -1 : 1;
      return std::vector<std::pair<Tree, Rational>>{{Tree::binary(0, a, b), Rational(1)},
                                                     {Tree::binary(0, b, a), sign}};
    });
    for (const auto& [u, q] : expanded) accumulate(acc, u, c * q);
  }
  return rebuild(out_sig, acc);
}

}  // namespace operadix
