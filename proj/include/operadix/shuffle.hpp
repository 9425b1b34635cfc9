#pragma once

#include "operadix/expr.hpp"
#include "operadix/monomial_order.hpp"

#include <functional>
#include <vector>

namespace operadix {

/// Signed shuffle monomial of one term tree; leaves must already be 1..n.
std::pair<int, Tree> shuffle_monomial(const Tree& term, const Signature& sig);

/// Inverse of shuffle_monomial: the symmetric term tree, up to the sign.
std::pair<int, Tree> term_of_shuffle(const Tree& monomial, const ShuffleSignature& shuffle_sig);

/// Shuffle image of an expression. Variables are relabelled to 1..n in
/// increasing order and the result is scaled to leading coefficient +1 under
/// `spec` (zero stays zero).
OperadElement<Rational> to_shuffle(const MultilinearExpr& e, const OrderSpec& spec = {});
/// Same, without the final rescaling.
OperadElement<Rational> to_shuffle_unnormalised(const MultilinearExpr& e);

/// Shuffle images of all permuted copies of `e`, each with leading
/// coefficient 1, with duplicates removed.
std::vector<OperadElement<Rational>> orbit_relations(const MultilinearExpr& e, const OrderSpec& spec = {});

/// Acts on a shuffle element by the leaf relabelling i -> perm(i), going
/// through symmetric terms so that swapped arguments pick up partner
/// generators and signs. Requires generators built by ShuffleSignature::from.
template <class Coeff>
OperadElement<Coeff> permute_leaves(const OperadElement<Coeff>& e, const std::function<int(int)>& perm,
                                    const Signature& sig, const ShuffleSignature& shuffle_sig) {
  OperadElement<Coeff> out;
  for (const auto& [t, c] : e.terms()) {
    auto [s1, term] = term_of_shuffle(t, shuffle_sig);
    auto [s2, image] = shuffle_monomial(term.relabeled(perm), sig);
    out.add(image, s1 * s2 > 0 ? c : Coeff(-c));
  }
  return out;
}

/// Scales a nonzero element to leading coefficient 1.
OperadElement<Rational> normalised(const OperadElement<Rational>& e, const OrderSpec& spec);

/// Row-reduced basis of the span, each with leading coefficient 1 and
/// distinct leading monomials, sorted by decreasing leading monomial.
std::vector<OperadElement<Rational>> linear_basis(std::span<const OperadElement<Rational>> elems, const OrderSpec& spec);
std::size_t span_rank(std::span<const OperadElement<Rational>> elems, const OrderSpec& spec = {});

/// The two identities characterising 2-varieties, as relations over one
/// symmetry-free product, with the lambda and rho coefficients.
struct RawTwoVarietyIdentities {
  std::array<Rational, 8> lambda{};
  std::array<Rational, 8> rho{};

  /// lambda(1..8) and rho(1..8) as written with 1-based subscripts.
  Rational& l(int i) { return lambda.at(static_cast<std::size_t>(i - 1)); }
  Rational& r(int i) { return rho.at(static_cast<std::size_t>(i - 1)); }

  /// (x1x2)x3 - sum lambda_i T_i and x3(x1x2) - sum rho_i T_i.
  std::array<MultilinearExpr, 2> expressions(const std::string& symbol = "*") const;
};

}  // namespace operadix
