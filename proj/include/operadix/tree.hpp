#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace operadix {

/// Planar rooted tree whose internal vertices carry generator ids and whose
/// leaves carry positive integer labels. Stored as a preorder node list, so
/// structural equality, ordering and hashing are plain vector operations.
///
/// The same type backs term trees of multilinear expressions (operation ids)
/// and shuffle-tree monomials (shuffle generator ids).
class Tree {
 public:
  static constexpr std::int32_t kLeaf = -1;

  struct Node {
    std::int32_t gen;    // kLeaf for a leaf
    std::int32_t value;  // leaf label, or arity of an internal vertex
    auto operator<=>(const Node&) const = default;
  };

  Tree() = default;
  static Tree leaf(int label);
  static Tree node(int gen, std::span<const Tree> children);
  static Tree node(int gen, std::initializer_list<Tree> children) {
    return node(gen, std::span<const Tree>(children.begin(), children.size()));
  }
  static Tree binary(int gen, const Tree& left, const Tree& right) { return node(gen, {left, right}); }
  static Tree from_nodes(std::vector<Node> nodes);

  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }

  bool is_leaf(std::size_t i) const { return nodes_[i].gen == kLeaf; }
  int gen(std::size_t i) const { return nodes_[i].gen; }
  int label(std::size_t i) const { return nodes_[i].value; }
  int child_count(std::size_t i) const { return is_leaf(i) ? 0 : nodes_[i].value; }

  /// One past the last preorder index of the subtree rooted at `i`.
  std::size_t subtree_end(std::size_t i) const;
  /// Preorder indices of the children of vertex `i`, left to right.
  std::vector<std::size_t> children(std::size_t i) const;
  /// Parent index per node (root maps to SIZE_MAX).
  std::vector<std::size_t> parents() const;
  /// Minimal leaf label below each node.
  std::vector<int> min_leaves() const;
  Tree subtree(std::size_t i) const;

  /// Number of leaves.
  int arity() const;
  /// Number of internal vertices.
  int weight() const;
  /// Leaf labels in left-to-right planar order.
  std::vector<int> leaf_sequence() const;

  /// Applies `relabel` to every leaf label (no re-canonicalisation).
  Tree relabeled(const std::function<int(int)>& relabel) const;

  auto operator<=>(const Tree&) const = default;
  bool operator==(const Tree&) const = default;

 private:
  std::vector<Node> nodes_;
};

struct TreeHash {
  std::size_t operator()(const Tree& t) const noexcept;
};

/// Prefix text form such as `u(u(1,3),2)`; `names[g]` spells generator g.
std::string to_text(const Tree& t, std::span<const std::string> names);
/// Inverse of to_text. Generator names are matched longest-first.
Tree parse_tree(std::string_view text, std::span<const std::string> names);

}  // namespace operadix
