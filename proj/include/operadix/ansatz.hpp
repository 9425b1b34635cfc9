#pragma once

#include "operadix/poly_matrix.hpp"
#include "operadix/rewriting.hpp"
#include "operadix/shuffle.hpp"

#include <array>
#include <optional>
#include <vector>

namespace operadix {

/// Two parametrisations of the four right-comb rules over {., ^}.
///
/// `matrix`: a1.(a2^a3) and a1^(a2^a3) carry the antisymmetric pattern
/// -m5 + m6 (in chain numbering), and the rule for a1^(a2.a3) uses the d
/// parameters while a1^(a2^a3) uses the g ones. With it the elimination
/// reproduces the tabulated arity-3 and arity-4 polynomials verbatim.
///
/// `displayed`: antisymmetric pattern m5 - m6, g for a1^(a2.a3), d for
/// a1^(a2^a3). Same family up to renaming and sign changes of parameters.
enum class AnsatzConvention { matrix, displayed };

struct GenericAnsatz {
  ParameterRing ring = ParameterRing::ansatz_parameters();
  Signature signature;
  ShuffleSignature shuffle_signature;
  OrderSpec order;
  AnsatzConvention convention = AnsatzConvention::matrix;
  /// The twelve arity-3 monomials, largest first.
  std::vector<Tree> chain;
  /// Rules with leads chain[0..3], the right combs.
  std::array<RewriteRule<MultiPoly>, 4> rules;

  RewriteSystem<MultiPoly> system() const;
  /// Coefficient of the parameter named `name` as a polynomial.
  MultiPoly parameter(std::string_view name) const;
};

GenericAnsatz build_ansatz(AnsatzConvention convention = AnsatzConvention::matrix);

/// Row i holds the coefficients of (tail_i - lead_i) in chain order.
PolyMatrix arity3_matrix(const GenericAnsatz& a);

/// Rows of arity3_matrix acted on by the transposition of leaves 1 and 2.
PolyMatrix transposed_block(const GenericAnsatz& a);

/// Residual 4x8 block after clearing the first four columns of the stacked
/// 8x12 matrix, read row by row: 32 polynomials.
std::vector<MultiPoly> arity3_constraints(const GenericAnsatz& a);

struct Degree4Constraints {
  /// Monomial rewritten in two ways.
  Tree multiple;
  /// Normal forms after rewriting first at the root and first at the inner vertex.
  OperadElement<MultiPoly> root_first;
  OperadElement<MultiPoly> inner_first;
  /// The 48 left combs of arity 4, largest first, and the coefficients of
  /// root_first - inner_first on them.
  std::vector<Tree> left_combs;
  std::vector<MultiPoly> coefficients;
  /// Left combs ((1.2).3).4, ((1.2).3)^4, ((1.3).4).2, ((1.3)^4).2,
  /// ((1.2)^3).4 and their coefficients.
  std::vector<Tree> selected_monomials;
  std::vector<MultiPoly> selected;
};

Degree4Constraints degree4_constraints(const GenericAnsatz& a);

/// Reads the sixteen parameters (ring order) off four relations over
/// {., ^} spanning a space whose row-reduced basis has leads exactly the
/// four right combs and the expected symmetry pattern. Nullopt otherwise.
std::optional<std::vector<Rational>> parameters_from_relations(const GenericAnsatz& a,
                                                               std::span<const OperadElement<Rational>> relations);

/// Polarises the two identities, takes their full orbits and applies
/// parameters_from_relations. Nullopt when the orbit does not have the
/// four-rule shape (for instance when it spans more than four dimensions).
std::optional<std::vector<Rational>> parameters_from_raw(const GenericAnsatz& a, const RawTwoVarietyIdentities& raw);

/// The rules specialised at a parameter point.
std::array<OperadElement<Rational>, 4> rule_elements_at(const GenericAnsatz& a, std::span<const Rational> point);

}  // namespace operadix
