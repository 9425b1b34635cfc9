#include "operadix/ansatz.hpp"

#include "operadix/polarise.hpp"

#include <stdexcept>

namespace operadix {

namespace {

struct RuleShape {
  char letter;
  bool antisymmetric;
};

std::array<RuleShape, 4> shapes(AnsatzConvention c) {
  if (c == AnsatzConvention::matrix) return {{{'a', false}, {'b', true}, {'d', false}, {'g', true}}};
  return {{{'a', false}, {'b', true}, {'g', false}, {'d', true}}};
}

/// Signs on (chain[4+2k], chain[5+2k]) for an antisymmetric rule.
std::pair<int, int> antisymmetric_signs(AnsatzConvention c) {
  return c == AnsatzConvention::matrix ? std::pair{-1, 1} : std::pair{1, -1};
}

std::string parameter_name(char letter, int k) { return std::string(1, letter) + std::to_string(k + 1); }

}  // namespace

RewriteSystem<MultiPoly> GenericAnsatz::system() const {
  return {shuffle_signature, order, {rules.begin(), rules.end()}, 0, false};
}

MultiPoly GenericAnsatz::parameter(std::string_view name) const {
  auto i = ring.index_of(name);
  if (!i) throw std::invalid_argument("unknown parameter '" + std::string(name) + "'");
  return MultiPoly::variable(*i);
}

GenericAnsatz build_ansatz(AnsatzConvention convention) {
  GenericAnsatz a;
  a.signature = polarised_signature();
  a.shuffle_signature = ShuffleSignature::from(a.signature);
  a.order = OrderSpec{OrderKind::reverse_graded_pathlex, {}};
  a.convention = convention;
  a.chain = enumerate_monomials(a.shuffle_signature, 3, a.order);
  const auto [neg, pos] = antisymmetric_signs(convention);
  const auto shape = shapes(convention);
  for (std::size_t i = 0; i < 4; ++i) {
    RewriteRule<MultiPoly> r{a.chain[i], {}};
    for (int k = 0; k < 4; ++k) {
      const MultiPoly p = a.parameter(parameter_name(shape[i].letter, k));
      const auto& first = a.chain[static_cast<std::size_t>(4 + 2 * k)];
      const auto& second = a.chain[static_cast<std::size_t>(5 + 2 * k)];
      if (shape[i].antisymmetric) {
        r.tail.add(first, p * Rational(neg));
        r.tail.add(second, p * Rational(pos));
      } else {
        r.tail.add(first, p);
        r.tail.add(second, p);
      }
    }
    a.rules[i] = std::move(r);
  }
  return a;
}

namespace {

PolyMatrix rows_in_chain(const GenericAnsatz& a, const std::array<OperadElement<MultiPoly>, 4>& elems) {
  PolyMatrix m(4, a.chain.size());
  for (std::size_t i = 0; i < 4; ++i) {
    std::size_t seen = 0;
    for (std::size_t j = 0; j < a.chain.size(); ++j) {
      m(i, j) = elems[i].coefficient(a.chain[j]);
      if (!m(i, j).is_zero()) ++seen;
    }
    if (seen != elems[i].size()) throw std::logic_error("element leaves the arity-3 monomial basis");
  }
  return m;
}

std::array<OperadElement<MultiPoly>, 4> negated_elements(const GenericAnsatz& a) {
  std::array<OperadElement<MultiPoly>, 4> out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = a.rules[i].tail - OperadElement<MultiPoly>::monomial(a.rules[i].lead);
  return out;
}

}  // namespace

PolyMatrix arity3_matrix(const GenericAnsatz& a) { return rows_in_chain(a, negated_elements(a)); }

PolyMatrix transposed_block(const GenericAnsatz& a) {
  auto elems = negated_elements(a);
  const std::function<int(int)> swap12 = [](int v) { return v == 1 ? 2 : v == 2 ? 1 : v; };
  for (auto& e : elems) e = permute_leaves(e, swap12, a.signature, a.shuffle_signature);
  return rows_in_chain(a, elems);
}

std::vector<MultiPoly> arity3_constraints(const GenericAnsatz& a) {
  const PolyMatrix residual = eliminate_unit_pivots(arity3_matrix(a).stacked(transposed_block(a)), 4);
  std::vector<MultiPoly> out;
  for (std::size_t r = 0; r < residual.rows(); ++r)
    for (std::size_t c = 0; c < residual.cols(); ++c) out.push_back(residual(r, c));
  return out;
}

Degree4Constraints degree4_constraints(const GenericAnsatz& a) {
  Degree4Constraints d;
  const auto& lead = a.rules[0].lead;  // a1.(a2.a3)
  const int dot = lead.gen(0);
  d.multiple = Tree::binary(dot, Tree::leaf(1), Tree::binary(dot, Tree::leaf(2), Tree::binary(dot, Tree::leaf(3), Tree::leaf(4))));
  auto occs = find_divisors(d.multiple, lead);
  if (occs.size() != 2) throw std::logic_error("expected two occurrences of the leading right comb");
  const auto sys = a.system();
  d.root_first = reduce(rewrite_at(d.multiple, occs[0], a.rules[0]), sys);
  d.inner_first = reduce(rewrite_at(d.multiple, occs[1], a.rules[0]), sys);
  const auto diff = d.root_first - d.inner_first;
  for (const auto& t : enumerate_monomials(a.shuffle_signature, 4, a.order))
    if (is_left_comb(t)) d.left_combs.push_back(t);
  std::size_t covered = 0;
  for (const auto& t : d.left_combs) {
    d.coefficients.push_back(diff.coefficient(t));
    if (!d.coefficients.back().is_zero()) ++covered;
  }
  if (covered != diff.size()) throw std::logic_error("normal form contains a monomial that is not a left comb");
  const int star = a.rules[3].lead.gen(0);
  auto x = [](int i) { return Tree::leaf(i); };
  auto comb = [&](int g1, int l2, int g2, int l3, int g3, int l4) {
    return Tree::binary(g3, Tree::binary(g2, Tree::binary(g1, x(1), x(l2)), x(l3)), x(l4));
  };
  d.selected_monomials = {comb(dot, 2, dot, 3, dot, 4), comb(dot, 2, dot, 3, star, 4), comb(dot, 3, dot, 4, dot, 2),
                          comb(dot, 3, star, 4, dot, 2), comb(dot, 2, star, 3, dot, 4)};
  for (const auto& t : d.selected_monomials) d.selected.push_back(diff.coefficient(t));
  return d;
}

std::optional<std::vector<Rational>> parameters_from_relations(const GenericAnsatz& a,
                                                               std::span<const OperadElement<Rational>> relations) {
  auto basis = linear_basis(relations, a.order);
  if (basis.size() != 4) return std::nullopt;
  const auto [neg, pos] = antisymmetric_signs(a.convention);
  const auto shape = shapes(a.convention);
  std::vector<Rational> values(a.ring.size());
  for (std::size_t i = 0; i < 4; ++i) {
    if (max_monomial(basis[i], a.order) != a.chain[i]) return std::nullopt;
    for (int k = 0; k < 4; ++k) {
      // The tail is minus the non-leading part of the monic element.
      Rational t1 = -basis[i].coefficient(a.chain[static_cast<std::size_t>(4 + 2 * k)]);
      Rational t2 = -basis[i].coefficient(a.chain[static_cast<std::size_t>(5 + 2 * k)]);
      Rational value;
      if (shape[i].antisymmetric) {
        if (t1 * pos != t2 * neg) return std::nullopt;
        value = t2 * pos;
      } else {
        if (t1 != t2) return std::nullopt;
        value = t1;
      }
      values[*a.ring.index_of(parameter_name(shape[i].letter, k))] = value;
    }
  }
  return values;
}

std::optional<std::vector<Rational>> parameters_from_raw(const GenericAnsatz& a, const RawTwoVarietyIdentities& raw) {
  std::vector<OperadElement<Rational>> relations;
  for (const auto& e : raw.expressions())
    for (auto& r : orbit_relations(polarise(e), a.order)) relations.push_back(std::move(r));
  return parameters_from_relations(a, relations);
}

std::array<OperadElement<Rational>, 4> rule_elements_at(const GenericAnsatz& a, std::span<const Rational> point) {
  std::array<OperadElement<Rational>, 4> out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = evaluate(a.rules[i].element(), point);
  return out;
}

}  // namespace operadix
