#include "operadix/signature.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace operadix {

std::string to_string(Symmetry s) {
  switch (s) {
    case Symmetry::none: return "none";
    case Symmetry::commutative: return "comm";
    case Symmetry::anticommutative: return "anticomm";
  }
  return "none";
}

Symmetry parse_symmetry(std::string_view text) {
  if (text == "none") return Symmetry::none;
  if (text == "comm") return Symmetry::commutative;
  if (text == "anticomm") return Symmetry::anticommutative;
  throw std::invalid_argument("unknown symmetry '" + std::string(text) + "' (expected none|comm|anticomm)");
}

namespace {

bool reserved_symbol_char(char c) {
  return c == '(' || c == ')' || c == '+' || c == '-' || c == '/' || c == '#' || c == ',' ||
         (c >= '0' && c <= '9') || c == ' ' || c == '\t';
}

}  // namespace

Signature::Signature(std::vector<Operation> ops) : ops_(std::move(ops)) {
  std::set<std::string> seen;
  for (const auto& op : ops_) {
    if (op.symbol.empty()) throw std::invalid_argument("empty operation symbol");
    for (char c : op.symbol)
      if (reserved_symbol_char(c)) throw std::invalid_argument("operation symbol '" + op.symbol + "' uses a reserved character");
    if (op.symbol[0] == 'x') throw std::invalid_argument("operation symbol '" + op.symbol + "' may not start with 'x'");
    if (!seen.insert(op.symbol).second) throw std::invalid_argument("duplicate operation symbol '" + op.symbol + "'");
    if (op.arity < 2) throw std::invalid_argument("operation '" + op.symbol + "' must have arity >= 2");
    if (op.symmetry != Symmetry::none && op.arity != 2)
      throw std::invalid_argument("(anti)commutativity is only defined for binary operations");
  }
}

std::optional<std::size_t> Signature::find(std::string_view symbol) const {
  for (std::size_t i = 0; i < ops_.size(); ++i)
    if (ops_[i].symbol == symbol) return i;
  return std::nullopt;
}

Signature parse_signature(std::string_view text) {
  std::vector<Operation> ops;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> w;
    for (std::string s; words >> s;) w.push_back(s);
    if (w.empty()) continue;
    auto where = "signature line " + std::to_string(lineno) + ": ";
    if (w.size() != 6 || w[0] != "op" || w[2] != "arity" || w[4] != "symmetry")
      throw std::invalid_argument(where + "expected 'op <symbol> arity <k> symmetry <none|comm|anticomm>'");
    Operation op;
    op.symbol = w[1];
    try {
      op.arity = std::stoi(w[3]);
      op.symmetry = parse_symmetry(w[5]);
    } catch (const std::exception& e) {
      throw std::invalid_argument(where + e.what());
    }
    ops.push_back(op);
  }
  if (ops.empty()) throw std::invalid_argument("signature declares no operations");
  try {
    return Signature(std::move(ops));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("signature: ") + e.what());
  }
}

std::string to_text(const Signature& sig) {
  std::string out;
  for (const auto& op : sig.operations())
    out += "op " + op.symbol + " arity " + std::to_string(op.arity) + " symmetry " + to_string(op.symmetry) + "\n";
  return out;
}

// ---------------------------------------------------------------------------

ShuffleSignature::ShuffleSignature(std::vector<ShuffleGenerator> gens) : gens_(std::move(gens)) {
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    if (g.name.empty() || !seen.insert(g.name).second)
      throw std::invalid_argument("shuffle generator names must be distinct and nonempty");
    if (g.arity < 2) throw std::invalid_argument("shuffle generators must have arity >= 2");
    names_.push_back(g.name);
  }
}

ShuffleSignature ShuffleSignature::from(const Signature& sig) {
  std::vector<ShuffleGenerator> gens;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    const auto& op = sig.operation(i);
    if (op.arity != 2) throw std::invalid_argument("only binary operations are supported (operation '" + op.symbol + "')");
    const int self = static_cast<int>(gens.size());
    switch (op.symmetry) {
      case Symmetry::none:
        gens.push_back({op.symbol, 2, int(i), false, op.symmetry, self + 1, 1});
        gens.push_back({op.symbol + "'", 2, int(i), true, op.symmetry, self, 1});
        break;
      case Symmetry::commutative:
        gens.push_back({op.symbol, 2, int(i), false, op.symmetry, self, 1});
        break;
      case Symmetry::anticommutative:
        gens.push_back({op.symbol, 2, int(i), false, op.symmetry, self, -1});
        break;
    }
  }
  return ShuffleSignature(std::move(gens));
}

ShuffleSignature ShuffleSignature::bare(std::vector<std::string> names) {
  std::vector<ShuffleGenerator> gens;
  for (auto& n : names) gens.push_back({std::move(n), 2, -1, false, Symmetry::none, -1, 1});
  return ShuffleSignature(std::move(gens));
}

std::optional<std::size_t> ShuffleSignature::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

}  // namespace operadix
