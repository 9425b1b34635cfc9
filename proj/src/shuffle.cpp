#include "operadix/shuffle.hpp"

#include <algorithm>
#include <numeric>

namespace operadix {

namespace {

/// Index of the first shuffle generator of each operation, as laid out by
/// ShuffleSignature::from.
std::vector<int> first_generators(const Signature& sig) {
  std::vector<int> first;
  int next = 0;
  for (const auto& op : sig.operations()) {
    if (op.arity != 2) throw std::invalid_argument("only binary operations are supported (operation '" + op.symbol + "')");
    first.push_back(next);
    next += op.symmetry == Symmetry::none ? 2 : 1;
  }
  return first;
}

std::pair<int, Tree> convert(const Tree& term, std::size_t i, const Signature& sig, const std::vector<int>& first,
                             const std::vector<int>& mins) {
  if (term.is_leaf(i)) return {1, Tree::leaf(term.label(i))};
  auto kids = term.children(i);
  auto [sa, a] = convert(term, kids[0], sig, first, mins);
  auto [sb, b] = convert(term, kids[1], sig, first, mins);
  const auto op = static_cast<std::size_t>(term.gen(i));
  const int g = first[op];
  int sign = sa * sb;
  const bool ordered = mins[kids[0]] < mins[kids[1]];
  switch (sig.operation(op).symmetry) {
    case Symmetry::none:
      return ordered ? std::pair{sign, Tree::binary(g, a, b)} : std::pair{sign, Tree::binary(g + 1, b, a)};
    case Symmetry::commutative:
      return {sign, ordered ? Tree::binary(g, a, b) : Tree::binary(g, b, a)};
    case Symmetry::anticommutative:
      return {ordered ? sign : -sign, ordered ? Tree::binary(g, a, b) : Tree::binary(g, b, a)};
  }
  return {sign, Tree()};
}

Tree relabel_to_range(const Tree& t) {
  auto seq = t.leaf_sequence();
  std::sort(seq.begin(), seq.end());
  return t.relabeled([&](int v) { return static_cast<int>(std::lower_bound(seq.begin(), seq.end(), v) - seq.begin()) + 1; });
}

}  // namespace

std::pair<int, Tree> shuffle_monomial(const Tree& term, const Signature& sig) {
  return convert(term, 0, sig, first_generators(sig), term.min_leaves());
}

std::pair<int, Tree> term_of_shuffle(const Tree& monomial, const ShuffleSignature& shuffle_sig) {
  if (monomial.is_leaf(0)) return {1, monomial};
  auto kids = monomial.children(0);
  auto [sa, a] = term_of_shuffle(monomial.subtree(kids[0]), shuffle_sig);
  auto [sb, b] = term_of_shuffle(monomial.subtree(kids[1]), shuffle_sig);
  const auto& g = shuffle_sig.generator(static_cast<std::size_t>(monomial.gen(0)));
  if (g.operation < 0) throw std::invalid_argument("generator '" + g.name + "' has no symmetric counterpart");
  if (g.reversed) return {sa * sb, Tree::binary(g.operation, b, a)};
  return {sa * sb, Tree::binary(g.operation, a, b)};
}

OperadElement<Rational> to_shuffle_unnormalised(const MultilinearExpr& e) {
  const auto first = first_generators(e.signature);
  OperadElement<Rational> out;
  for (const auto& [t, c] : e.terms.terms()) {
    Tree term = relabel_to_range(t);
    auto [s, m] = convert(term, 0, e.signature, first, term.min_leaves());
    out.add(m, s > 0 ? c : Rational(-c));
  }
  return out;
}

OperadElement<Rational> normalised(const OperadElement<Rational>& e, const OrderSpec& spec) {
  if (e.is_zero()) return e;
  Rational lead = e.coefficient(max_monomial(e, spec));
  return e * Rational(1 / lead);
}

OperadElement<Rational> to_shuffle(const MultilinearExpr& e, const OrderSpec& spec) {
  return normalised(to_shuffle_unnormalised(e), spec);
}

std::vector<OperadElement<Rational>> orbit_relations(const MultilinearExpr& e, const OrderSpec& spec) {
  std::vector<OperadElement<Rational>> out;
  if (e.is_zero()) return out;
  const auto vars = e.variables();
  std::vector<int> image = vars;
  do {
    auto permuted = permute_variables(e, [&](int v) {
      return image[static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin())];
    });
    auto s = to_shuffle(permuted, spec);
    if (!s.is_zero() && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

std::vector<OperadElement<Rational>> linear_basis(std::span<const OperadElement<Rational>> elems, const OrderSpec& spec) {
  // Keyed by leading monomial order key; each basis element is fully reduced
  // against the others at the end.
  std::vector<OperadElement<Rational>> basis;
  for (const auto& input : elems) {
    OperadElement<Rational> r = input;
    bool changed = true;
    while (changed && !r.is_zero()) {
      changed = false;
      for (const auto& b : basis) {
        const Tree& lead = max_monomial(b, spec);
        Rational c = r.coefficient(lead);
        if (!is_zero(c)) {
          r -= b * c;
          changed = true;
        }
      }
    }
    if (r.is_zero()) continue;
    r = normalised(r, spec);
    const Tree lead = max_monomial(r, spec);
    for (auto& b : basis) {
      Rational c = b.coefficient(lead);
      if (!is_zero(c)) b -= r * c;
    }
    basis.push_back(std::move(r));
  }
  std::sort(basis.begin(), basis.end(), [&](const auto& a, const auto& b) {
    return order_key(max_monomial(a, spec), spec) > order_key(max_monomial(b, spec), spec);
  });
  return basis;
}

std::size_t span_rank(std::span<const OperadElement<Rational>> elems, const OrderSpec& spec) {
  return linear_basis(elems, spec).size();
}

std::array<MultilinearExpr, 2> RawTwoVarietyIdentities::expressions(const std::string& symbol) const {
  const Signature sig({{symbol, 2, Symmetry::none}});
  auto x = [](int i) { return Tree::leaf(i); };
  auto p = [](const Tree& a, const Tree& b) { return Tree::binary(0, a, b); };
  // The eight right-hand monomials shared by both identities.
  const std::array<Tree, 8> rhs{p(p(x(3), x(1)), x(2)), p(p(x(1), x(3)), x(2)), p(x(2), p(x(3), x(1))),
                                p(x(2), p(x(1), x(3))), p(p(x(3), x(2)), x(1)), p(p(x(2), x(3)), x(1)),
                                p(x(1), p(x(3), x(2))), p(x(1), p(x(2), x(3)))};
  std::array<MultilinearExpr, 2> out;
  for (int k = 0; k < 2; ++k) {
    const auto& coeffs = k == 0 ? lambda : rho;
    std::vector<std::pair<Rational, Tree>> terms{
        {Rational(1), k == 0 ? p(p(x(1), x(2)), x(3)) : p(x(3), p(x(1), x(2)))}};
    for (std::size_t i = 0; i < 8; ++i) terms.push_back({Rational(-coeffs[i]), rhs[i]});
    out[static_cast<std::size_t>(k)] = make_expr(sig, terms);
  }
  return out;
}

}  // namespace operadix
