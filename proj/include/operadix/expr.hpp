#pragma once

#include "operadix/linear_combination.hpp"
#include "operadix/rational.hpp"
#include "operadix/signature.hpp"
#include "operadix/tree.hpp"

#include <string>
#include <functional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace operadix {

inline constexpr int kMaxIdentityVariables = 8;

/// Formal Q-linear combination of multilinear term trees over a signature.
/// Internal vertices carry operation indices, leaves carry variable indices
/// (x3 is leaf 3). Products of (anti)commutative operations are stored with
/// the argument of smaller minimal variable first.
struct MultilinearExpr {
  Signature signature;
  LinearCombination<Rational> terms;

  bool is_zero() const { return terms.is_zero(); }
  /// Sorted variable indices used by the terms.
  std::vector<int> variables() const;
  bool operator==(const MultilinearExpr&) const = default;
};

/// Error with the 1-based column where parsing failed.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t column)
      : std::invalid_argument(what + " (column " + std::to_string(column) + ")"), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Parses an identity such as `(x1*x2)*x3 + 1/2 (x2*x3)*x1`. Products of
/// sums expand bilinearly; chained products need explicit parentheses.
MultilinearExpr parse_identity(std::string_view text, const Signature& sig);

/// Text form accepted by parse_identity.
std::string to_text(const MultilinearExpr& e);

/// Sign and canonical form of a term tree under the operations' symmetries.
std::pair<int, Tree> canonical_term(const Tree& term, const Signature& sig);

/// Renames variable i to perm(i) in every term, re-canonicalising.
MultilinearExpr permute_variables(const MultilinearExpr& e, const std::function<int(int)>& perm);

/// Builds an expression from (coefficient, term) pairs, validating multilinearity.
MultilinearExpr make_expr(const Signature& sig, const std::vector<std::pair<Rational, Tree>>& terms);

/// Parses `rel <expr>` lines; `#` comments.
std::vector<MultilinearExpr> parse_relations(std::string_view text, const Signature& sig);

}  // namespace operadix
