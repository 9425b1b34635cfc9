#include "operadix/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace operadix {

ParameterRing::ParameterRing(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVariables)
    throw std::invalid_argument("too many variables (max " + std::to_string(kMaxVariables) + ")");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
}

ParameterRing ParameterRing::ansatz_parameters() {
  std::vector<std::string> names;
  for (char family : {'a', 'b', 'g', 'd'})
    for (int i = 1; i <= 4; ++i) names.push_back(std::string(1, family) + std::to_string(i));
  return ParameterRing(std::move(names));
}

std::optional<std::size_t> ParameterRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Monomial Monomial::variable(std::size_t index, unsigned power) {
  if (index >= kMaxVariables) throw std::out_of_range("variable index out of range");
  if (power > 255) throw std::overflow_error("exponent overflow");
  Monomial m;
  m.exponents[index] = static_cast<std::uint8_t>(power);
  m.degree = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree > other.degree) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exponents[i] > other.exponents[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exponents[i] != 0 && other.exponents[i] != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned e = unsigned(a.exponents[i]) + b.exponents[i];
    if (e > 255) throw std::overflow_error("exponent overflow");
    r.exponents[i] = static_cast<std::uint8_t>(e);
  }
  r.degree = a.degree + b.degree;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exponents[i] = a.exponents[i] - b.exponents[i];
  r.degree = a.degree - b.degree;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exponents[i] = std::max(a.exponents[i], b.exponents[i]);
    r.degree += r.exponents[i];
  }
  return r;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order == MonomialOrder::lex) return a.exponents <=> b.exponents;
  if (a.degree != b.degree) return a.degree <=> b.degree;
  for (std::size_t i = kMaxVariables; i-- > 0;) {
    if (a.exponents[i] != b.exponents[i]) return b.exponents[i] <=> a.exponents[i];
  }
  return std::strong_ordering::equal;
}

std::string to_string(MonomialOrder order) { return order == MonomialOrder::lex ? "lex" : "grevlex"; }

MonomialOrder parse_monomial_order(std::string_view name) {
  if (name == "lex") return MonomialOrder::lex;
  if (name == "grevlex") return MonomialOrder::grevlex;
  throw std::invalid_argument("unknown monomial order '" + std::string(name) + "' (expected lex|grevlex)");
}

// ---------------------------------------------------------------------------

MultiPoly::MultiPoly(const Rational& c) {
  if (!operadix::is_zero(c)) terms_.push_back({Monomial{}, c});
}

MultiPoly MultiPoly::variable(std::size_t index) {
  MultiPoly p;
  p.terms_.push_back({Monomial::variable(index), Rational(1)});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::map<Monomial, Rational, std::greater<>> acc;
  for (auto& t : terms) acc[t.monomial] += t.coeff;
  MultiPoly p;
  for (auto& [m, c] : acc)
    if (!operadix::is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

std::optional<Rational> MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].monomial.is_one()) return terms_[0].coeff;
  return std::nullopt;
}

std::uint32_t MultiPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree);
  return d;
}

const MultiPoly::Term& MultiPoly::leading_term(MonomialOrder order) const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  if (order == MonomialOrder::lex) return terms_.front();
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (compare(t.monomial, best->monomial, order) > 0) best = &t;
  return *best;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      for (unsigned e = 0; e < t.monomial.exponents[i]; ++e) {
        if (i >= point.size()) throw std::out_of_range("evaluation point too short");
        v *= point[i];
      }
    }
    sum += v;
  }
  return sum;
}

namespace {

// Merge of two descending-sorted term lists with the second scaled by `sign`.
std::vector<MultiPoly::Term> merge(const std::vector<MultiPoly::Term>& a,
                                   const std::vector<MultiPoly::Term>& b, int sign) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].monomial > b[j].monomial)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].monomial > a[i].monomial) {
      out.push_back({b[j].monomial, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (!operadix::is_zero(c)) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  terms_ = merge(terms_, o.terms_, +1);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (operadix::is_zero(c)) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::map<Monomial, Rational, std::greater<>> acc;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.monomial * t.monomial] += s.coeff * t.coeff;
  MultiPoly p;
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!operadix::is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

MultiPoly MultiPoly::scaled(const Rational& c, const Monomial& m) const {
  MultiPoly p;
  if (operadix::is_zero(c)) return p;
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves lex order.
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coeff * c});
  return p;
}

MultiPoly make_monic(const MultiPoly& p, MonomialOrder order) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading_term(order).coeff;
  return p * inv;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const ParameterRing& ring) : text_(text), ring_(ring) {}

  MultiPoly parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    MultiPoly p = sum();
    if (!at_end()) fail(peek() == ')' ? "unbalanced ')'" : "expected '+' or '-'");
    return p;
  }

 private:
  // sum := [+|-] product {(+|-) product}
  MultiPoly sum() {
    MultiPoly acc;
    bool first = true;
    while (!at_end() && peek() != ')') {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      MultiPoly t = product();
      if (sign < 0) acc -= t;
      else acc += t;
      first = false;
    }
    if (first) fail("expected term");
    return acc;
  }

  // product := power {* power}
  MultiPoly product() {
    MultiPoly acc = power();
    while (peek() == '*') {
      ++pos_;
      skip_ws();
      acc *= power();
    }
    return acc;
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    std::size_t s = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (s == pos_) fail("expected exponent");
    const auto e = std::stoul(std::string(text_.substr(s, pos_ - s)));
    if (e > 255) fail("exponent too large");
    skip_ws();
    MultiPoly out(1);
    for (unsigned long k = 0; k < e; ++k) out *= base;
    return out;
  }

  MultiPoly atom() {
    if (peek() == '(') {
      ++pos_;
      skip_ws();
      MultiPoly inner = sum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      skip_ws();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Rational c = number();
      skip_ws();
      return MultiPoly(c);
    }
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    if (start == pos_) fail("expected variable");
    std::string_view name = text_.substr(start, pos_ - start);
    auto idx = ring_.index_of(name);
    if (!idx) fail("unknown variable '" + std::string(name) + "'");
    skip_ws();
    return MultiPoly::variable(*idx);
  }

  Rational number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  std::string_view text_;
  const ParameterRing& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const ParameterRing& ring) {
  return PolyParser(text, ring).parse();
}

std::vector<MultiPoly> parse_poly_list(std::string_view text, const ParameterRing& ring) {
  std::vector<MultiPoly> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_poly(line, ring));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::string to_string(const MultiPoly& p, const ParameterRing& ring) {
  if (p.is_zero()) return "0";
  // Print in grevlex-descending order; it reads more naturally than lex.
  std::vector<const MultiPoly::Term*> order;
  for (const auto& t : p.terms()) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
    return compare(a->monomial, b->monomial, MonomialOrder::grevlex) > 0;
  });
  std::string out;
  bool first = true;
  for (const auto* t : order) {
    Rational c = t->coeff;
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    c = abs(c);
    first = false;
    bool unit = c == 1;
    if (!unit || t->monomial.is_one()) out += to_string(c);
    bool need_star = !unit;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      unsigned e = t->monomial.exponents[i];
      if (e == 0) continue;
      if (i >= ring.size()) throw std::out_of_range("monomial uses a variable outside the ring");
      if (need_star) out += "*";
      out += ring.name(i);
      if (e > 1) out += "^" + std::to_string(e);
      need_star = true;
    }
  }
  return out;
}

}  // namespace operadix
