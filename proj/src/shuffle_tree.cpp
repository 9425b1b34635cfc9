#include "operadix/shuffle_tree.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace operadix {

bool validate(const Tree& t, const ShuffleSignature& sig) {
  if (t.empty()) return false;
  const auto mins = t.min_leaves();
  std::vector<int> labels;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.is_leaf(i)) {
      labels.push_back(t.label(i));
      continue;
    }
    if (t.gen(i) < 0 || static_cast<std::size_t>(t.gen(i)) >= sig.size()) return false;
    if (sig.generator(static_cast<std::size_t>(t.gen(i))).arity != t.child_count(i)) return false;
    int previous = 0;
    for (auto c : t.children(i)) {
      if (mins[c] <= previous) return false;
      previous = mins[c];
    }
  }
  std::sort(labels.begin(), labels.end());
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] != static_cast<int>(k) + 1) return false;
  return true;
}

Tree left_comb(std::span<const int> labels, std::span<const int> gens) {
  const std::size_t n = labels.size();
  if (n == 0 || labels[0] != 1) throw std::invalid_argument("left comb labels must start with 1");
  std::vector<int> sorted(labels.begin(), labels.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < n; ++k)
    if (sorted[k] != static_cast<int>(k) + 1) throw std::invalid_argument("left comb labels must be a permutation of 1..n");
  if (gens.size() + 1 != n) throw std::invalid_argument("left comb needs n-1 generators");
  Tree t = Tree::leaf(1);
  for (std::size_t k = 1; k < n; ++k) t = Tree::binary(gens[k - 1], t, Tree::leaf(labels[k]));
  return t;
}

Tree right_comb(std::span<const int> gens) {
  const int n = static_cast<int>(gens.size()) + 1;
  Tree t = Tree::leaf(n);
  for (int k = n - 2; k >= 0; --k) t = Tree::binary(gens[static_cast<std::size_t>(k)], Tree::leaf(k + 1), t);
  return t;
}

bool is_left_comb(const Tree& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.is_leaf(i)) continue;
    auto kids = t.children(i);
    for (std::size_t k = 1; k < kids.size(); ++k)
      if (!t.is_leaf(kids[k])) return false;
  }
  return true;
}

bool is_right_comb(const Tree& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.is_leaf(i)) continue;
    auto kids = t.children(i);
    for (std::size_t k = 0; k + 1 < kids.size(); ++k)
      if (!t.is_leaf(kids[k])) return false;
  }
  return true;
}

namespace {

using Mask = std::uint32_t;

// Trees on the label set `mask`, memoised per mask.
const std::vector<Tree>& trees_on(Mask mask, const std::vector<int>& binary_gens, std::map<Mask, std::vector<Tree>>& memo) {
  if (auto it = memo.find(mask); it != memo.end()) return it->second;
  std::vector<Tree> out;
  if ((mask & (mask - 1)) == 0) {
    out.push_back(Tree::leaf(__builtin_ctz(mask) + 1));
  } else {
    const Mask low = mask & (~mask + 1);
    const Mask rest = mask ^ low;
    // Left block contains the minimum; enumerate its other elements.
    for (Mask extra = rest;; extra = (extra - 1) & rest) {
      const Mask left = low | extra;
      const Mask right = mask ^ left;
      if (right != 0) {
        const auto& ls = trees_on(left, binary_gens, memo);
        const auto& rs = trees_on(right, binary_gens, memo);
        for (int g : binary_gens)
          for (const auto& a : ls)
            for (const auto& b : rs) out.push_back(Tree::binary(g, a, b));
      }
      if (extra == 0) break;
    }
  }
  return memo.emplace(mask, std::move(out)).first->second;
}

}  // namespace

std::vector<Tree> enumerate_trees(const ShuffleSignature& sig, int n, int max_arity) {
  if (n < 1) throw std::invalid_argument("arity must be at least 1");
  if (n > max_arity)
    throw std::invalid_argument("arity " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(max_arity));
  std::vector<int> gens;
  for (std::size_t g = 0; g < sig.size(); ++g) {
    if (sig.generator(g).arity != 2) throw std::invalid_argument("only binary generators can be enumerated");
    gens.push_back(static_cast<int>(g));
  }
  std::map<Mask, std::vector<Tree>> memo;
  auto out = trees_on((Mask(1) << n) - 1, gens, memo);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tree> enumerate_left_combs(const ShuffleSignature& sig, int n) {
  std::vector<Tree> out;
  for (auto& t : enumerate_trees(sig, n))
    if (is_left_comb(t)) out.push_back(std::move(t));
  return out;
}

namespace {

bool match(const Tree& host, std::size_t h, const Tree& pattern, std::size_t p, Occurrence& occ) {
  if (pattern.is_leaf(p)) {
    occ.hanging[static_cast<std::size_t>(pattern.label(p) - 1)] = h;
    return true;
  }
  if (host.is_leaf(h) || host.gen(h) != pattern.gen(p) || host.child_count(h) != pattern.child_count(p)) return false;
  occ.vertices.push_back(h);
  auto hk = host.children(h);
  auto pk = pattern.children(p);
  for (std::size_t k = 0; k < pk.size(); ++k)
    if (!match(host, hk[k], pattern, pk[k], occ)) return false;
  return true;
}

}  // namespace

std::vector<Occurrence> find_divisors(const Tree& host, const Tree& pattern) {
  std::vector<Occurrence> out;
  if (pattern.empty() || pattern.is_leaf(0)) return out;
  const auto mins = host.min_leaves();
  const auto k = static_cast<std::size_t>(pattern.arity());
  for (std::size_t v = 0; v < host.size(); ++v) {
    if (host.is_leaf(v) || host.gen(v) != pattern.gen(0)) continue;
    Occurrence occ{v, {}, std::vector<std::size_t>(k)};
    if (!match(host, v, pattern, 0, occ)) continue;
    bool increasing = true;
    for (std::size_t j = 1; j < k && increasing; ++j) increasing = mins[occ.hanging[j - 1]] < mins[occ.hanging[j]];
    if (increasing) out.push_back(std::move(occ));
  }
  return out;
}

bool divides(const Tree& pattern, const Tree& host) { return !find_divisors(host, pattern).empty(); }

Tree substitute(const Tree& host, const Occurrence& occ, const Tree& replacement) {
  if (replacement.arity() != static_cast<int>(occ.hanging.size()))
    throw std::invalid_argument("replacement leaf count differs from the pattern's");
  std::vector<Tree::Node> nodes(host.nodes().begin(), host.nodes().begin() + static_cast<std::ptrdiff_t>(occ.root));
  for (const auto& n : replacement.nodes()) {
    if (n.gen != Tree::kLeaf) {
      nodes.push_back(n);
      continue;
    }
    const std::size_t h = occ.hanging.at(static_cast<std::size_t>(n.value - 1));
    nodes.insert(nodes.end(), host.nodes().begin() + static_cast<std::ptrdiff_t>(h),
                 host.nodes().begin() + static_cast<std::ptrdiff_t>(host.subtree_end(h)));
  }
  nodes.insert(nodes.end(), host.nodes().begin() + static_cast<std::ptrdiff_t>(host.subtree_end(occ.root)),
               host.nodes().end());
  return Tree::from_nodes(std::move(nodes));
}

Tree collapse(const Tree& host, std::span<const std::size_t> region) {
  const auto mins = host.min_leaves();
  auto in_region = [&](std::size_t v) { return std::find(region.begin(), region.end(), v) != region.end(); };
  std::vector<Tree::Node> nodes;
  std::vector<int> leaf_mins;
  // Preorder walk of the region; anything outside it becomes a leaf.
  std::vector<std::size_t> stack{region.front()};
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    if (!in_region(v)) {
      nodes.push_back({Tree::kLeaf, mins[v]});
      leaf_mins.push_back(mins[v]);
      continue;
    }
    nodes.push_back(host.nodes()[v]);
    auto kids = host.children(v);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  std::sort(leaf_mins.begin(), leaf_mins.end());
  for (auto& n : nodes)
    if (n.gen == Tree::kLeaf)
      n.value = static_cast<int>(std::lower_bound(leaf_mins.begin(), leaf_mins.end(), n.value) - leaf_mins.begin()) + 1;
  return Tree::from_nodes(std::move(nodes));
}

}  // namespace operadix
