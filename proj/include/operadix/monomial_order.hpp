#pragma once

#include "operadix/linear_combination.hpp"
#include "operadix/shuffle_tree.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace operadix {

enum class OrderKind { reverse_graded_pathlex, graded_pathlex };

std::string to_string(OrderKind kind);
/// Accepts `revpathlex` and `pathlex`.
OrderKind parse_order_kind(std::string_view name);

struct OrderSpec {
  OrderKind kind = OrderKind::reverse_graded_pathlex;
  /// ranking[g] is the position of generator g, 0 being the largest.
  /// Empty means generator index order.
  std::vector<int> ranking;

  int rank(int gen) const { return ranking.empty() ? gen : ranking.at(static_cast<std::size_t>(gen)); }
  bool operator==(const OrderSpec&) const = default;
};

/// Per leaf 1..n, the generators met on the way from the root.
struct PathFingerprint {
  std::vector<std::vector<int>> words;
  bool operator==(const PathFingerprint&) const = default;
  auto operator<=>(const PathFingerprint&) const = default;
};

PathFingerprint path_fingerprint(const Tree& t);

/// Integer vector whose lexicographic order is the monomial order: weight,
/// then the path words leaf by leaf, then the planar leaf sequence.
/// The last part only matters when path words coincide, which happens from
/// arity 4 on, e.g. for (12)(34), (13)(24) and (14)(23) over one generator.
std::vector<int> order_key(const Tree& t, const OrderSpec& spec);

/// Order comparison of two monomials with the same leaf set.
std::strong_ordering compare(const Tree& a, const Tree& b, const OrderSpec& spec);

/// Trees from enumerate_trees, sorted by the order, largest first.
std::vector<Tree> enumerate_monomials(const ShuffleSignature& sig, int n, const OrderSpec& spec,
                                      int max_arity = kMaxEnumerationArity);

/// The order-largest monomial in the support.
template <class Coeff>
const Tree& max_monomial(const LinearCombination<Coeff>& e, const OrderSpec& spec) {
  if (e.is_zero()) throw std::invalid_argument("max_monomial of the zero element");
  const Tree* best = nullptr;
  std::vector<int> best_key;
  for (const auto& [t, c] : e.terms()) {
    auto key = order_key(t, spec);
    if (!best || key > best_key) {
      best = &t;
      best_key = std::move(key);
    }
  }
  return *best;
}

}  // namespace operadix
