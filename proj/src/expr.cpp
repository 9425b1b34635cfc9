#include "operadix/expr.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>

namespace operadix {

std::vector<int> MultilinearExpr::variables() const {
  if (terms.is_zero()) return {};
  auto seq = terms.terms().begin()->first.leaf_sequence();
  std::sort(seq.begin(), seq.end());
  return seq;
}

std::pair<int, Tree> canonical_term(const Tree& term, const Signature& sig) {
  if (term.is_leaf(0)) return {1, term};
  auto kids = term.children(0);
  int sign = 1;
  std::vector<Tree> canon;
  std::vector<int> mins;
  for (auto c : kids) {
    auto [s, t] = canonical_term(term.subtree(c), sig);
    sign *= s;
    mins.push_back(t.min_leaves()[0]);
    canon.push_back(std::move(t));
  }
  const auto& op = sig.operation(static_cast<std::size_t>(term.gen(0)));
  if (op.symmetry != Symmetry::none && mins[0] > mins[1]) {
    std::swap(canon[0], canon[1]);
    if (op.symmetry == Symmetry::anticommutative) sign = -sign;
  }
  return {sign, Tree::node(term.gen(0), canon)};
}

MultilinearExpr make_expr(const Signature& sig, const std::vector<std::pair<Rational, Tree>>& terms) {
  MultilinearExpr e{sig, {}};
  std::vector<int> vars;
  bool first = true;
  for (const auto& [c, t] : terms) {
    auto seq = t.leaf_sequence();
    std::sort(seq.begin(), seq.end());
    if (std::adjacent_find(seq.begin(), seq.end()) != seq.end())
      throw std::invalid_argument("non-multilinear term: a variable is repeated");
    if (first) {
      vars = seq;
      first = false;
    } else if (seq != vars) {
      throw std::invalid_argument("terms use different variable sets");
    }
    for (const auto& n : t.nodes()) {
      if (n.gen == Tree::kLeaf) continue;
      if (static_cast<std::size_t>(n.gen) >= sig.size()) throw std::invalid_argument("undeclared operation id");
      if (sig.operation(static_cast<std::size_t>(n.gen)).arity != n.value)
        throw std::invalid_argument("operation applied with the wrong number of arguments");
    }
    auto [s, canon] = canonical_term(t, sig);
    e.terms.add(canon, s > 0 ? c : Rational(-c));
  }
  return e;
}

namespace {

using Combination = std::vector<std::pair<Rational, Tree>>;

Combination collect(const Combination& c) {
  std::map<Tree, Rational> acc;
  for (const auto& [q, t] : c) acc[t] += q;
  Combination out;
  for (auto& [t, q] : acc)
    if (!is_zero(q)) out.push_back({q, t});
  return out;
}

class IdentityParser {
 public:
  IdentityParser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {
    for (std::size_t i = 0; i < sig.size(); ++i) symbols_.push_back({sig.operation(i).symbol, i});
    std::sort(symbols_.begin(), symbols_.end(),
              [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
  }

  Combination parse() {
    Combination c = sum();
    skip_ws();
    if (!at_end()) fail("unexpected character '" + std::string(1, peek()) + "'");
    return c;
  }

 private:
  // sum := ['+'|'-'] term (('+'|'-') term)*
  Combination sum() {
    Combination out;
    skip_ws();
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      first = false;
      for (auto& [q, t] : term()) out.push_back({sign * q, std::move(t)});
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
    }
    return collect(out);
  }

  // term := [rational] product
  Combination term() {
    skip_ws();
    Rational coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (peek() == '/') {
        ++pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
      try {
        coeff = parse_rational(text_.substr(start, pos_ - start));
      } catch (const std::invalid_argument& e) {
        fail(e.what(), start);
      }
    }
    Combination c = product();
    for (auto& [q, t] : c) q *= coeff;
    return c;
  }

  // product := primary [op primary]
  Combination product() {
    Combination left = primary();
    skip_ws();
    auto op = match_operator();
    if (!op) return left;
    Combination right = primary();
    skip_ws();
    if (match_operator(/*consume=*/false))
      fail("ambiguous chained product; add parentheses");
    Combination out;
    for (const auto& [qa, ta] : left)
      for (const auto& [qb, tb] : right) out.push_back({qa * qb, Tree::binary(static_cast<int>(*op), ta, tb)});
    return collect(out);
  }

  // primary := 'x' digits | '(' sum ')'
  Combination primary() {
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      Combination inner = sum();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (peek() == 'x') {
      std::size_t start = pos_;
      ++pos_;
      std::size_t digits = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (digits == pos_) fail("expected variable index after 'x'", start);
      int index = std::stoi(std::string(text_.substr(digits, pos_ - digits)));
      if (index < 1) fail("variable indices start at 1", start);
      if (index > kMaxIdentityVariables)
        fail("variable x" + std::to_string(index) + " exceeds the arity cap of " +
                 std::to_string(kMaxIdentityVariables),
             start);
      return {{Rational(1), Tree::leaf(index)}};
    }
    if (at_end()) fail("unexpected end of input");
    // Anything else that looks like an operator is undeclared.
    fail("unexpected character '" + std::string(1, peek()) + "' (undeclared operation symbol?)");
  }

  std::optional<std::size_t> match_operator(bool consume = true) {
    for (const auto& [sym, idx] : symbols_) {
      if (text_.substr(pos_, sym.size()) == sym) {
        if (sig_.operation(idx).arity != 2) fail("operation '" + sym + "' is not binary");
        if (consume) pos_ += sym.size();
        return idx;
      }
    }
    if (!at_end() && !std::isspace(static_cast<unsigned char>(peek())) && peek() != '+' && peek() != '-' &&
        peek() != ')')
      fail("undeclared operation symbol at '" + std::string(text_.substr(pos_, 1)) + "'");
    return std::nullopt;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw ParseError("identity parse error: " + what, at + 1);
  }

  std::string_view text_;
  const Signature& sig_;
  std::vector<std::pair<std::string, std::size_t>> symbols_;
  std::size_t pos_ = 0;
};

void print_term(const Tree& t, std::size_t i, const Signature& sig, std::string& out) {
  if (t.is_leaf(i)) {
    out += "x" + std::to_string(t.label(i));
    return;
  }
  auto kids = t.children(i);
  for (std::size_t k = 0; k < kids.size(); ++k) {
    if (k > 0) out += sig.operation(static_cast<std::size_t>(t.gen(i))).symbol;
    bool wrap = !t.is_leaf(kids[k]);
    if (wrap) out += "(";
    print_term(t, kids[k], sig, out);
    if (wrap) out += ")";
  }
}

}  // namespace

MultilinearExpr parse_identity(std::string_view text, const Signature& sig) {
  IdentityParser parser(text, sig);
  Combination c = parser.parse();
  try {
    return make_expr(sig, c);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("identity: ") + e.what(), 1);
  }
}

std::string to_text(const MultilinearExpr& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : e.terms.terms()) {
    Rational q = c;
    if (first) {
      if (sgn(q) < 0) out += "-";
    } else {
      out += sgn(q) < 0 ? " - " : " + ";
    }
    first = false;
    q = abs(q);
    if (q != 1) out += to_string(q) + " ";
    print_term(t, 0, e.signature, out);
  }
  return out;
}

MultilinearExpr permute_variables(const MultilinearExpr& e, const std::function<int(int)>& perm) {
  std::vector<std::pair<Rational, Tree>> terms;
  for (const auto& [t, c] : e.terms.terms()) terms.push_back({c, t.relabeled(perm)});
  return make_expr(e.signature, terms);
}

std::vector<MultilinearExpr> parse_relations(std::string_view text, const Signature& sig) {
  std::vector<MultilinearExpr> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line.compare(start, 4, "rel ") != 0 && line.compare(start, 4, "rel\t") != 0)
      throw std::invalid_argument("relations line " + std::to_string(lineno) + ": expected 'rel <expr>'");
    try {
      out.push_back(parse_identity(std::string_view(line).substr(start + 4), sig));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("relations line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace operadix
