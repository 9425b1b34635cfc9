#pragma once

#include "operadix/signature.hpp"
#include "operadix/tree.hpp"

#include <span>
#include <vector>

namespace operadix {

inline constexpr int kMaxEnumerationArity = 9;

/// True iff every internal vertex has its generator's arity, the leaves are
/// labelled 1..n, and child minimal leaves increase left to right.
bool validate(const Tree& t, const ShuffleSignature& sig);

/// ((l1 g0 l2) g1 l3) ... ; `labels` is a permutation of 1..n starting at 1,
/// `gens[k]` decorates the vertex that attaches labels[k+1].
Tree left_comb(std::span<const int> labels, std::span<const int> gens);
/// 1 g0 (2 g1 (3 ... )); leaf labels are forced to 1..n.
Tree right_comb(std::span<const int> gens);
bool is_left_comb(const Tree& t);
bool is_right_comb(const Tree& t);

/// All shuffle trees with leaves {1..n} over the (binary) generators, in a
/// fixed structural order. Use the overload in monomial_order.hpp for the
/// order-sorted list.
std::vector<Tree> enumerate_trees(const ShuffleSignature& sig, int n, int max_arity = kMaxEnumerationArity);

/// All left combs of arity n over the generators.
std::vector<Tree> enumerate_left_combs(const ShuffleSignature& sig, int n);

/// An embedding of a pattern in a host. `vertices[k]` is the host vertex
/// matched to the k-th internal vertex of the pattern in preorder, and
/// `hanging[j-1]` the host subtree plugged into pattern leaf j.
struct Occurrence {
  std::size_t root = 0;
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> hanging;
  bool operator==(const Occurrence&) const = default;
};

/// All occurrences of `pattern` in `host`, ordered by host root vertex.
std::vector<Occurrence> find_divisors(const Tree& host, const Tree& pattern);
bool divides(const Tree& pattern, const Tree& host);

/// Replaces the occurrence region by `replacement`, grafting the hanging
/// subtrees at the replacement's leaves.
Tree substitute(const Tree& host, const Occurrence& occ, const Tree& replacement);

/// Collapse of a connected vertex set (`region` holds host preorder indices
/// with its topmost vertex first): the pattern the region is an occurrence of.
Tree collapse(const Tree& host, std::span<const std::size_t> region);

}  // namespace operadix
