#include "operadix/rewriting.hpp"

#include "operadix/shuffle.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace operadix {

namespace {

std::vector<OperadElement<Rational>> reduce_all(const std::vector<OperadElement<Rational>>& elems,
                                                const RewriteSystem<Rational>& sys, unsigned threads) {
  std::vector<OperadElement<Rational>> out(elems.size());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(elems.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < elems.size(); ++i) out[i] = reduce(elems[i], sys);
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < elems.size(); i += threads) out[i] = reduce(elems[i], sys);
    });
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace

RewriteSystem<Rational> complete(std::vector<OperadElement<Rational>> relations, const ShuffleSignature& sig,
                                 const OrderSpec& spec, const CompletionConfig& config) {
  if (config.max_arity < 2 || config.max_arity > kMaxEnumerationArity)
    throw std::invalid_argument("completion arity bound must lie in 2.." + std::to_string(kMaxEnumerationArity));
  RewriteSystem<Rational> sys{sig, spec, {}, 0, false};
  bool added_by_overlap = false;
  int max_rule_arity = 0;
  for (int n = 2; n <= config.max_arity; ++n) {
    std::vector<OperadElement<Rational>> candidates;
    for (const auto& r : relations)
      if (r.arity() == n) candidates.push_back(r);
    const std::size_t from_relations = candidates.size();
    // Two rules of arities a, b overlap in arity at most a + b - 2.
    if (!sys.rules.empty() && 2 * max_rule_arity - 2 >= n) {
      auto monomials = enumerate_monomials(sig, n, spec);
      for (auto& s : detail::s_polynomials_over(monomials, sys.rules)) candidates.push_back(std::move(s.value));
    }
    if (candidates.empty()) continue;
    auto reduced = reduce_all(candidates, sys, config.threads);
    std::vector<OperadElement<Rational>> nonzero;
    bool overlap_survived = false;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      if (reduced[i].is_zero()) continue;
      if (i >= from_relations) overlap_survived = true;
      nonzero.push_back(std::move(reduced[i]));
    }
    auto basis = linear_basis(nonzero, spec);
    if (overlap_survived) {
      // Survivors may already lie in the span of the relations of this arity.
      std::vector<OperadElement<Rational>> rel_only;
      for (std::size_t i = 0; i < from_relations; ++i)
        if (!reduced[i].is_zero()) rel_only.push_back(reduced[i]);
      if (linear_basis(rel_only, spec).size() < basis.size()) added_by_overlap = true;
    }
    for (const auto& b : basis) sys.rules.push_back(make_rule(b, spec));
    if (!basis.empty()) max_rule_arity = std::max(max_rule_arity, n);
  }
  for (const auto& r : relations)
    if (r.arity() > config.max_arity)
      throw std::invalid_argument("a relation has arity above the completion bound");
  sys.complete_up_to = config.max_arity;
  sys.quadratic_certified = !added_by_overlap;
  return sys;
}

RewriteSystem<Rational> leading_term_system(const std::vector<Tree>& leads, const ShuffleSignature& sig,
                                            const OrderSpec& spec) {
  RewriteSystem<Rational> sys{sig, spec, {}, 0, false};
  for (const auto& t : leads) sys.rules.push_back({t, {}});
  return sys;
}

std::uint64_t ns_lower_bound(std::uint64_t k, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("ns_lower_bound needs k >= 1 and n >= 1");
  std::uint64_t out = 1;
  for (int i = 1; i < n; ++i) {
    if (__builtin_mul_overflow(out, k, &out) || __builtin_mul_overflow(out, static_cast<std::uint64_t>(i), &out))
      throw std::overflow_error("ns_lower_bound exceeds 64 bits");
  }
  return out;
}

}  // namespace operadix
