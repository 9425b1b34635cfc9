#pragma once

#include "operadix/monomial_order.hpp"
#include "operadix/poly.hpp"
#include "operadix/shuffle_tree.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace operadix {

/// Raised when a rule would need division by a non-constant coefficient.
class NonMonicRule : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Rational constant_inverse(const Rational& c) {
  if (is_zero(c)) throw NonMonicRule("zero leading coefficient");
  return 1 / c;
}

inline MultiPoly constant_inverse(const MultiPoly& c) {
  auto v = c.constant_value();
  if (!v || is_zero(*v)) throw NonMonicRule("leading coefficient is not a nonzero constant");
  return MultiPoly(Rational(1 / *v));
}

/// Oriented relation lead -> tail, i.e. the element lead - tail, monic.
template <class Coeff>
struct RewriteRule {
  Tree lead;
  OperadElement<Coeff> tail;

  OperadElement<Coeff> element() const {
    auto e = OperadElement<Coeff>::monomial(lead);
    e -= tail;
    return e;
  }
};

/// Orients a nonzero element by its order-maximal monomial and scales it to
/// leading coefficient 1.
template <class Coeff>
RewriteRule<Coeff> make_rule(const OperadElement<Coeff>& e, const OrderSpec& spec) {
  const Tree lead = max_monomial(e, spec);
  const Coeff inv = constant_inverse(e.coefficient(lead));
  RewriteRule<Coeff> r{lead, {}};
  for (const auto& [t, c] : e.terms())
    if (t != lead) r.tail.add(t, Coeff(-(c * inv)));
  return r;
}

template <class Coeff>
struct RewriteSystem {
  ShuffleSignature signature;
  OrderSpec order;
  std::vector<RewriteRule<Coeff>> rules;
  /// Largest arity at which every S-polynomial is known to reduce to zero;
  /// 0 when unknown.
  int complete_up_to = 0;
  /// True when completion ran and added no rules.
  bool quadratic_certified = false;
};

/// The rewriting of `monomial` at `occ` by `rule` (whose lead is the pattern).
template <class Coeff>
OperadElement<Coeff> rewrite_at(const Tree& monomial, const Occurrence& occ, const RewriteRule<Coeff>& rule) {
  OperadElement<Coeff> out;
  for (const auto& [t, c] : rule.tail.terms()) out.add(substitute(monomial, occ, t), c);
  return out;
}

enum class ReductionStrategy { largest_first, smallest_first };

namespace detail {

template <class Coeff>
using KeyedTerms = std::map<std::vector<int>, std::pair<Tree, Coeff>>;

template <class Coeff>
void add_keyed(KeyedTerms<Coeff>& terms, const Tree& t, const Coeff& c, const OrderSpec& spec) {
  if (is_zero(c)) return;
  auto key = order_key(t, spec);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(std::move(key), std::pair<Tree, Coeff>{t, c});
    return;
  }
  it->second.second += c;
  if (is_zero(it->second.second)) terms.erase(it);
}

template <class Coeff>
bool first_divisor(const Tree& m, const std::vector<RewriteRule<Coeff>>& rules, std::size_t& rule, Occurrence& occ) {
  for (std::size_t r = 0; r < rules.size(); ++r) {
    if (rules[r].lead.arity() > m.arity()) continue;
    auto occs = find_divisors(m, rules[r].lead);
    if (!occs.empty()) {
      rule = r;
      occ = std::move(occs.front());
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Normal form of `e`: no monomial of the result is divisible by a rule's
/// leading monomial. Each step rewrites one monomial into smaller ones.
template <class Coeff>
OperadElement<Coeff> reduce(const OperadElement<Coeff>& e, const RewriteSystem<Coeff>& sys,
                            ReductionStrategy strategy = ReductionStrategy::largest_first) {
  detail::KeyedTerms<Coeff> work;
  for (const auto& [t, c] : e.terms()) detail::add_keyed(work, t, c, sys.order);
  OperadElement<Coeff> result;
  std::size_t rule = 0;
  Occurrence occ;
  if (strategy == ReductionStrategy::largest_first) {
    while (!work.empty()) {
      auto top = std::prev(work.end());
      auto [t, c] = std::move(top->second);
      work.erase(top);
      if (!detail::first_divisor(t, sys.rules, rule, occ)) {
        result.add(t, c);
        continue;
      }
      const auto rewritten = rewrite_at(t, occ, sys.rules[rule]);
      for (const auto& [u, d] : rewritten.terms()) detail::add_keyed(work, u, Coeff(c * d), sys.order);
    }
    return result;
  }
  // Smallest reducible monomial first; irreducible monomials stay in `work`
  // since later rewritings may still cancel them.
  while (true) {
    auto it = work.begin();
    for (; it != work.end(); ++it)
      if (detail::first_divisor(it->second.first, sys.rules, rule, occ)) break;
    if (it == work.end()) break;
    auto [t, c] = std::move(it->second);
    work.erase(it);
    const auto rewritten = rewrite_at(t, occ, sys.rules[rule]);
    for (const auto& [u, d] : rewritten.terms()) detail::add_keyed(work, u, Coeff(c * d), sys.order);
  }
  for (auto& [k, tc] : work) result.add(tc.first, tc.second);
  return result;
}

template <class Coeff>
bool is_normal(const Tree& m, const std::vector<RewriteRule<Coeff>>& rules) {
  std::size_t r = 0;
  Occurrence occ;
  return !detail::first_divisor(m, rules, r, occ);
}

/// A common multiple of two leading monomials and the difference of its two
/// one-step rewritings.
template <class Coeff>
struct SPolynomial {
  Tree multiple;
  std::size_t first_rule = 0, second_rule = 0;
  OperadElement<Coeff> value;
};

namespace detail {

inline bool overlap_covers(const Tree& m, const Occurrence& a, const Occurrence& b) {
  bool meet = false;
  for (auto v : a.vertices)
    if (std::find(b.vertices.begin(), b.vertices.end(), v) != b.vertices.end()) meet = true;
  if (!meet) return false;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m.is_leaf(v)) continue;
    if (std::find(a.vertices.begin(), a.vertices.end(), v) == a.vertices.end() &&
        std::find(b.vertices.begin(), b.vertices.end(), v) == b.vertices.end())
      return false;
  }
  return true;
}

/// S-polynomials among `rules` with common multiples drawn from `monomials`.
/// With `new_from` set, only pairs involving a rule of index >= new_from.
template <class Coeff>
std::vector<SPolynomial<Coeff>> s_polynomials_over(const std::vector<Tree>& monomials,
                                                   const std::vector<RewriteRule<Coeff>>& rules,
                                                   std::size_t new_from = 0) {
  std::vector<SPolynomial<Coeff>> out;
  for (const auto& m : monomials) {
    std::vector<std::pair<std::size_t, Occurrence>> occs;
    for (std::size_t r = 0; r < rules.size(); ++r)
      for (auto& o : find_divisors(m, rules[r].lead)) occs.emplace_back(r, std::move(o));
    for (std::size_t i = 0; i < occs.size(); ++i)
      for (std::size_t j = i + 1; j < occs.size(); ++j) {
        const auto& [ri, oi] = occs[i];
        const auto& [rj, oj] = occs[j];
        if (std::max(ri, rj) < new_from) continue;
        if (!overlap_covers(m, oi, oj)) continue;
        auto value = rewrite_at(m, oi, rules[ri]) - rewrite_at(m, oj, rules[rj]);
        out.push_back({m, ri, rj, std::move(value)});
      }
  }
  return out;
}

}  // namespace detail

/// S-polynomials of two rules at every common multiple of weight at most
/// `max_weight`, found by scanning all monomials with a double-divisibility
/// filter: occurrence vertex sets must meet and cover the monomial.
template <class Coeff>
std::vector<SPolynomial<Coeff>> s_polynomials(const RewriteRule<Coeff>& f, const RewriteRule<Coeff>& g,
                                              const ShuffleSignature& sig, const OrderSpec& spec, int max_weight) {
  std::vector<RewriteRule<Coeff>> pair{f, g};
  const bool same = f.lead == g.lead && f.tail == g.tail;
  if (same) pair.pop_back();
  std::vector<SPolynomial<Coeff>> out;
  const int lo = std::max(f.lead.weight(), g.lead.weight());
  const int hi = std::min(max_weight, f.lead.weight() + g.lead.weight() - 1);
  for (int w = lo; w <= hi; ++w) {
    auto monomials = enumerate_monomials(sig, w + 1, spec);
    for (auto& s : detail::s_polynomials_over(monomials, pair)) {
      // Keep only genuine f/g overlaps, oriented as f-rewrite minus g-rewrite.
      if (!same && s.first_rule == s.second_rule) continue;
      if (!same && s.first_rule == 1) {
        s.value = OperadElement<Coeff>() - s.value;
        std::swap(s.first_rule, s.second_rule);
      }
      out.push_back(std::move(s));
    }
  }
  return out;
}

struct CompletionConfig {
  int max_arity = 6;
  /// Worker threads for S-polynomial reduction; results do not depend on it.
  unsigned threads = 1;
};

/// Arity-by-arity Buchberger completion over Q. Nonzero normal forms of
/// S-polynomials at each arity are row-reduced and added as rules.
RewriteSystem<Rational> complete(std::vector<OperadElement<Rational>> relations, const ShuffleSignature& sig,
                                 const OrderSpec& spec, const CompletionConfig& config = {});

/// Rules of a system with the given leading monomials and zero tails; only
/// the leading terms matter for counting normal forms.
RewriteSystem<Rational> leading_term_system(const std::vector<Tree>& leads, const ShuffleSignature& sig,
                                            const OrderSpec& spec);

struct NormalFormCount {
  std::uint64_t count = 0;
  /// False when the system is not known to be complete at this arity, so the
  /// count is only an upper bound on the dimension.
  bool exact = false;
};

/// Number of arity-n monomials divisible by no leading monomial.
template <class Coeff>
NormalFormCount dim_normal_forms(const RewriteSystem<Coeff>& sys, int n) {
  NormalFormCount out;
  for (const auto& m : enumerate_trees(sys.signature, n))
    if (is_normal(m, sys.rules)) ++out.count;
  out.exact = sys.complete_up_to >= n;
  return out;
}

/// k^(n-1) (n-1)!; throws std::overflow_error past 64 bits.
std::uint64_t ns_lower_bound(std::uint64_t k, int n);

}  // namespace operadix
