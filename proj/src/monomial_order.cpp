#include "operadix/monomial_order.hpp"

#include <algorithm>

namespace operadix {

std::string to_string(OrderKind kind) {
  return kind == OrderKind::reverse_graded_pathlex ? "revpathlex" : "pathlex";
}

OrderKind parse_order_kind(std::string_view name) {
  if (name == "revpathlex") return OrderKind::reverse_graded_pathlex;
  if (name == "pathlex") return OrderKind::graded_pathlex;
  throw std::invalid_argument("unknown order '" + std::string(name) + "' (expected revpathlex|pathlex)");
}

PathFingerprint path_fingerprint(const Tree& t) {
  PathFingerprint fp;
  fp.words.resize(static_cast<std::size_t>(t.arity()));
  std::vector<int> word;
  // Explicit preorder walk carrying the current path.
  struct Frame {
    std::size_t node;
    std::size_t depth;
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    auto [v, depth] = stack.back();
    stack.pop_back();
    word.resize(depth);
    if (t.is_leaf(v)) {
      fp.words.at(static_cast<std::size_t>(t.label(v) - 1)) = word;
      continue;
    }
    word.push_back(t.gen(v));
    auto kids = t.children(v);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back({*it, depth + 1});
  }
  return fp;
}

std::vector<int> order_key(const Tree& t, const OrderSpec& spec) {
  const bool reverse = spec.kind == OrderKind::reverse_graded_pathlex;
  std::vector<int> key;
  key.reserve(t.size() * 3);
  key.push_back(t.weight());
  for (const auto& w : path_fingerprint(t).words) {
    const int len = static_cast<int>(w.size());
    key.push_back(reverse ? -len : len);
    for (int g : w) key.push_back(-spec.rank(g));
  }
  for (int label : t.leaf_sequence()) key.push_back(-label);
  return key;
}

std::strong_ordering compare(const Tree& a, const Tree& b, const OrderSpec& spec) {
  if (a.arity() != b.arity()) throw std::invalid_argument("compared monomials have different leaf sets");
  return order_key(a, spec) <=> order_key(b, spec);
}

std::vector<Tree> enumerate_monomials(const ShuffleSignature& sig, int n, const OrderSpec& spec, int max_arity) {
  auto trees = enumerate_trees(sig, n, max_arity);
  std::vector<std::pair<std::vector<int>, Tree>> keyed;
  keyed.reserve(trees.size());
  for (auto& t : trees) keyed.emplace_back(order_key(t, spec), std::move(t));
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  std::vector<Tree> out;
  out.reserve(keyed.size());
  for (auto& [k, t] : keyed) out.push_back(std::move(t));
  return out;
}

}  // namespace operadix
