#include "operadix/tree.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <stdexcept>

namespace operadix {

Tree Tree::leaf(int label) {
  Tree t;
  t.nodes_.push_back({kLeaf, label});
  return t;
}

Tree Tree::node(int gen, std::span<const Tree> children) {
  if (gen < 0) throw std::invalid_argument("generator id must be nonnegative");
  if (children.empty()) throw std::invalid_argument("internal vertex needs children");
  Tree t;
  t.nodes_.push_back({gen, static_cast<std::int32_t>(children.size())});
  for (const auto& c : children) {
    if (c.empty()) throw std::invalid_argument("empty child tree");
    t.nodes_.insert(t.nodes_.end(), c.nodes_.begin(), c.nodes_.end());
  }
  return t;
}

Tree Tree::from_nodes(std::vector<Node> nodes) {
  // Validate that the preorder list describes exactly one tree.
  std::size_t pending = 1;
  for (const auto& n : nodes) {
    if (pending == 0) throw std::invalid_argument("trailing nodes after a complete tree");
    --pending;
    if (n.gen != kLeaf) {
      if (n.value <= 0) throw std::invalid_argument("internal vertex with nonpositive arity");
      pending += static_cast<std::size_t>(n.value);
    }
  }
  if (pending != 0 || nodes.empty()) throw std::invalid_argument("incomplete preorder tree");
  Tree t;
  t.nodes_ = std::move(nodes);
  return t;
}

std::size_t Tree::subtree_end(std::size_t i) const {
  std::size_t pending = 1;
  std::size_t j = i;
  while (pending > 0) {
    --pending;
    if (nodes_[j].gen != kLeaf) pending += static_cast<std::size_t>(nodes_[j].value);
    ++j;
  }
  return j;
}

std::vector<std::size_t> Tree::children(std::size_t i) const {
  std::vector<std::size_t> out;
  if (is_leaf(i)) return out;
  std::size_t c = i + 1;
  for (int k = 0; k < nodes_[i].value; ++k) {
    out.push_back(c);
    c = subtree_end(c);
  }
  return out;
}

std::vector<std::size_t> Tree::parents() const {
  std::vector<std::size_t> parent(nodes_.size(), SIZE_MAX);
  // Stack of (vertex, remaining children).
  std::vector<std::pair<std::size_t, int>> stack;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!stack.empty()) {
      parent[i] = stack.back().first;
      if (--stack.back().second == 0) stack.pop_back();
    }
    if (!is_leaf(i)) stack.push_back({i, nodes_[i].value});
  }
  return parent;
}

std::vector<int> Tree::min_leaves() const {
  std::vector<int> mins(nodes_.size(), INT_MAX);
  auto parent = parents();
  for (std::size_t i = nodes_.size(); i-- > 0;) {
    if (is_leaf(i)) mins[i] = nodes_[i].value;
    if (parent[i] != SIZE_MAX) mins[parent[i]] = std::min(mins[parent[i]], mins[i]);
  }
  return mins;
}

Tree Tree::subtree(std::size_t i) const {
  Tree t;
  t.nodes_.assign(nodes_.begin() + static_cast<std::ptrdiff_t>(i),
                  nodes_.begin() + static_cast<std::ptrdiff_t>(subtree_end(i)));
  return t;
}

int Tree::arity() const {
  return static_cast<int>(std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.gen == kLeaf; }));
}

int Tree::weight() const { return static_cast<int>(nodes_.size()) - arity(); }

std::vector<int> Tree::leaf_sequence() const {
  std::vector<int> out;
  for (const auto& n : nodes_)
    if (n.gen == kLeaf) out.push_back(n.value);
  return out;
}

Tree Tree::relabeled(const std::function<int(int)>& relabel) const {
  Tree t = *this;
  for (auto& n : t.nodes_)
    if (n.gen == kLeaf) n.value = relabel(n.value);
  return t;
}

std::size_t TreeHash::operator()(const Tree& t) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (const auto& n : t.nodes()) {
    h ^= static_cast<std::size_t>(n.gen + 7) * 0x9E3779B97F4A7C15ull + static_cast<std::size_t>(n.value);
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

void emit(const Tree& t, std::size_t i, std::span<const std::string> names, std::string& out) {
  if (t.is_leaf(i)) {
    out += std::to_string(t.label(i));
    return;
  }
  auto g = static_cast<std::size_t>(t.gen(i));
  if (g >= names.size()) throw std::out_of_range("no name for generator " + std::to_string(g));
  out += names[g];
  out += '(';
  bool first = true;
  for (auto c : t.children(i)) {
    if (!first) out += ',';
    first = false;
    emit(t, c, names, out);
  }
  out += ')';
}

class TreeParser {
 public:
  TreeParser(std::string_view text, std::span<const std::string> names) : text_(text), names_(names) {}

  Tree parse() {
    std::vector<Tree::Node> nodes;
    parse_into(nodes);
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return Tree::from_nodes(std::move(nodes));
  }

 private:
  void parse_into(std::vector<Tree::Node>& nodes) {
    skip_ws();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      nodes.push_back({Tree::kLeaf, std::stoi(std::string(text_.substr(start, pos_ - start)))});
      return;
    }
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t g = 0; g < names_.size(); ++g) {
      const auto& n = names_[g];
      if (n.size() > best_len && text_.substr(pos_, n.size()) == n) {
        best = static_cast<int>(g);
        best_len = n.size();
      }
    }
    if (best < 0) fail("expected leaf label or generator name");
    pos_ += best_len;
    skip_ws();
    expect('(');
    std::size_t self = nodes.size();
    nodes.push_back({best, 0});
    int count = 0;
    while (true) {
      parse_into(nodes);
      ++count;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      expect(')');
      break;
    }
    nodes[self].value = count;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("tree parse error at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  std::string_view text_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_text(const Tree& t, std::span<const std::string> names) {
  std::string out;
  if (!t.empty()) emit(t, 0, names, out);
  return out;
}

Tree parse_tree(std::string_view text, std::span<const std::string> names) { return TreeParser(text, names).parse(); }

}  // namespace operadix
