#include "operadix/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace operadix {

namespace {

struct IntTerm {
  Monomial monomial;
  Integer coeff;
};

// Terms sorted by descending monomial in the active order.
using IntPoly = std::vector<IntTerm>;

class Engine {
 public:
  explicit Engine(const GroebnerOptions& options) : options_(options) {}

  IntPoly from_rational(const MultiPoly& p) const {
    Integer den = 1;
    for (const auto& t : p.terms()) den = lcm(den, Integer(t.coeff.get_den()));
    IntPoly out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
      Rational scaled = t.coeff * den;
      out.push_back({t.monomial, scaled.get_num()});
    }
    sort(out);
    make_primitive(out);
    return out;
  }

  MultiPoly to_monic_rational(const IntPoly& p) const {
    std::vector<MultiPoly::Term> terms;
    terms.reserve(p.size());
    const Integer& lc = p.front().coeff;
    for (const auto& t : p) {
      Rational c(t.coeff, lc);
      c.canonicalize();
      terms.push_back({t.monomial, c});
    }
    return MultiPoly::from_terms(std::move(terms));
  }

  void sort(IntPoly& p) const {
    std::sort(p.begin(), p.end(), [&](const IntTerm& a, const IntTerm& b) { return greater(a.monomial, b.monomial); });
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b, options_.order) > 0; }

  static void make_primitive(IntPoly& p) {
    if (p.empty()) return;
    Integer g = 0;
    for (const auto& t : p) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
      if (g == 1) break;
    }
    if (sgn(p.front().coeff) < 0) g = -g;
    if (g != 1)
      for (auto& t : p) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
  }

  // a*p[from..] - b*m*q[1..], both inputs sorted; result sorted.
  IntPoly combine(const IntPoly& p, std::size_t from, const Integer& a, const IntPoly& q, const Integer& b,
                  const Monomial& m) const {
    IntPoly out;
    out.reserve(p.size() - from + q.size());
    std::size_t i = from, j = 1;
    Integer tmp;
    while (i < p.size() || j < q.size()) {
      if (j == q.size()) {
        out.push_back({p[i].monomial, a * p[i].coeff});
        ++i;
        continue;
      }
      Monomial qm = q[j].monomial * m;
      if (i == p.size() || greater(qm, p[i].monomial)) {
        out.push_back({qm, -(b * q[j].coeff)});
        ++j;
      } else if (greater(p[i].monomial, qm)) {
        out.push_back({p[i].monomial, a * p[i].coeff});
        ++i;
      } else {
        tmp = a * p[i].coeff - b * q[j].coeff;
        if (sgn(tmp) != 0) out.push_back({p[i].monomial, tmp});
        ++i;
        ++j;
      }
    }
    return out;
  }

  const IntPoly* find_divisor(const Monomial& m, std::size_t skip = SIZE_MAX) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (!active_[k] || k == skip) continue;
      if (basis_[k].front().monomial.divides(m)) return &basis_[k];
    }
    return nullptr;
  }

  // Full normal form up to a nonzero integer factor; primitive on return.
  IntPoly normal_form(IntPoly p, std::size_t skip = SIZE_MAX, bool keep_lead = false) const {
    IntPoly rest;
    std::size_t head = 0;
    std::size_t steps = 0;
    if (keep_lead && !p.empty()) {
      rest.push_back(p.front());
      head = 1;
    }
    while (head < p.size()) {
      const IntTerm& lead = p[head];
      const IntPoly* g = find_divisor(lead.monomial, skip);
      if (!g) {
        rest.push_back(lead);
        ++head;
        continue;
      }
      Integer d = gcd(g->front().coeff, lead.coeff);
      Integer a = g->front().coeff / d;
      Integer b = lead.coeff / d;
      Monomial m = lead.monomial / g->front().monomial;
      p = combine(p, head + 1, a, *g, b, m);
      head = 0;
      if (a != 1)
        for (auto& t : rest) t.coeff *= a;
      if (++steps % 8 == 0) remove_joint_content(rest, p);
    }
    rest.reserve(rest.size());
    make_primitive(rest);
    return rest;
  }

  static void remove_joint_content(IntPoly& a, IntPoly& b) {
    Integer g = 0;
    for (auto* p : {&a, &b}) {
      for (const auto& t : *p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
        if (g == 1) return;
      }
    }
    if (g == 0 || g == 1) return;
    for (auto* p : {&a, &b})
      for (auto& t : *p) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
  }

  IntPoly s_polynomial(const IntPoly& f, const IntPoly& g) const {
    Monomial l = lcm(f.front().monomial, g.front().monomial);
    Integer d = gcd(f.front().coeff, g.front().coeff);
    Integer a = g.front().coeff / d;  // multiplies f
    Integer b = f.front().coeff / d;  // multiplies g
    IntPoly fm;
    fm.reserve(f.size());
    Monomial mf = l / f.front().monomial;
    for (const auto& t : f) fm.push_back({t.monomial * mf, t.coeff});
    return combine(fm, 1, a, g, b, l / g.front().monomial);
  }

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };

  struct PairLess {
    const Engine* engine;
    bool operator()(const Pair& x, const Pair& y) const {
      if (x.lcm.degree != y.lcm.degree) return x.lcm.degree < y.lcm.degree;
      auto c = compare(x.lcm, y.lcm, engine->options_.order);
      if (c != 0) return c < 0;
      return std::tie(x.i, x.j) < std::tie(y.i, y.j);
    }
  };

  // Gebauer–Möller installation of a new basis element.
  void insert(IntPoly h) {
    const std::size_t hi = basis_.size();
    const Monomial& lh = h.front().monomial;
    std::vector<Pair> fresh;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) fresh.push_back({k, hi, lcm(basis_[k].front().monomial, lh)});

    std::vector<Pair> kept;
    std::vector<char> coprime;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      bool is_coprime = basis_[fresh[a].i].front().monomial.coprime(lh);
      bool keep = is_coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < fresh.size() && keep; ++b)
          if (fresh[b].lcm.divides(fresh[a].lcm)) keep = false;
        for (std::size_t b = 0; b < kept.size() && keep; ++b)
          if (kept[b].lcm.divides(fresh[a].lcm)) keep = false;
      }
      if (keep) {
        kept.push_back(fresh[a]);
        coprime.push_back(is_coprime);
      } else {
        ++stats_.pairs_discarded;
      }
    }

    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Monomial& l = it->lcm;
      if (lh.divides(l) && lcm(basis_[it->i].front().monomial, lh) != l &&
          lcm(basis_[it->j].front().monomial, lh) != l) {
        it = pairs_.erase(it);
        ++stats_.pairs_discarded;
      } else {
        ++it;
      }
    }
    for (std::size_t a = 0; a < kept.size(); ++a) {
      if (coprime[a]) {
        ++stats_.pairs_discarded;
      } else {
        pairs_.insert(kept[a]);
      }
    }

    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k] && lh.divides(basis_[k].front().monomial)) active_[k] = 0;
    basis_.push_back(std::move(h));
    active_.push_back(1);
    std::size_t live = std::count(active_.begin(), active_.end(), char(1));
    stats_.max_basis_size = std::max(stats_.max_basis_size, live);
  }

  GroebnerResult run(std::span<const MultiPoly> generators) {
    GroebnerResult result;
    result.order = options_.order;
    for (const auto& f : generators) {
      if (f.is_zero()) continue;
      IntPoly h = normal_form(from_rational(f));
      if (h.empty()) continue;
      if (h.front().monomial.is_one() && options_.stop_on_unit) return unit_result();
      insert(std::move(h));
    }
    while (!pairs_.empty()) {
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if (++stats_.pairs_reduced > options_.max_pairs)
        throw ResourceLimitExceeded("Buchberger pair budget of " + std::to_string(options_.max_pairs) +
                                    " exceeded (basis size " + std::to_string(basis_.size()) + ")");
      IntPoly h = normal_form(s_polynomial(basis_[p.i], basis_[p.j]));
      if (h.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      if (h.front().monomial.is_one() && options_.stop_on_unit) return unit_result();
      insert(std::move(h));
    }

    // Minimal basis is the active set; reduce tails against it.
    std::vector<std::size_t> live;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) live.push_back(k);
    std::vector<MultiPoly> reduced;
    for (std::size_t k : live) {
      IntPoly r = normal_form(basis_[k], k, /*keep_lead=*/true);
      reduced.push_back(to_monic_rational(r));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
      return greater(a.leading_term(options_.order).monomial, b.leading_term(options_.order).monomial);
    });
    result.basis = std::move(reduced);
    result.stats = stats_;
    return result;
  }

 private:
  GroebnerResult unit_result() const {
    GroebnerResult r;
    r.order = options_.order;
    r.basis.push_back(MultiPoly(1));
    r.stats = stats_;
    return r;
  }

  GroebnerOptions options_;
  std::vector<IntPoly> basis_;
  std::vector<char> active_;
  std::set<Pair, PairLess> pairs_{PairLess{this}};
  GroebnerStats stats_;
};

}  // namespace

GroebnerResult buchberger(std::span<const MultiPoly> generators, const GroebnerOptions& options) {
  Engine engine(options);
  return engine.run(generators);
}

MultiPoly poly_reduce(const MultiPoly& f, std::span<const MultiPoly> divisors, MonomialOrder order) {
  struct Desc {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b, order) > 0; }
  };
  std::vector<std::pair<MultiPoly::Term, const MultiPoly*>> leads;
  for (const auto& g : divisors)
    if (!g.is_zero()) leads.push_back({g.leading_term(order), &g});

  std::map<Monomial, Rational, Desc> work(Desc{order});
  for (const auto& t : f.terms()) work.emplace(t.monomial, t.coeff);
  std::vector<MultiPoly::Term> remainder;
  while (!work.empty()) {
    auto top = work.begin();
    const MultiPoly::Term* hit = nullptr;
    const MultiPoly* divisor = nullptr;
    for (const auto& [lt, g] : leads) {
      if (lt.monomial.divides(top->first)) {
        hit = &lt;
        divisor = g;
        break;
      }
    }
    if (!hit) {
      remainder.push_back({top->first, top->second});
      work.erase(top);
      continue;
    }
    Rational factor = top->second / hit->coeff;
    Monomial shift = top->first / hit->monomial;
    for (const auto& t : divisor->terms()) {
      Monomial m = t.monomial * shift;
      auto [it, inserted] = work.try_emplace(m, 0);
      it->second -= factor * t.coeff;
      if (is_zero(it->second)) work.erase(it);
    }
  }
  return MultiPoly::from_terms(std::move(remainder));
}

UnitIdealCertificate is_unit_ideal(std::span<const MultiPoly> generators, MonomialOrder order, std::size_t max_pairs) {
  GroebnerOptions options;
  options.order = order;
  options.max_pairs = max_pairs;
  options.stop_on_unit = true;
  UnitIdealCertificate cert;
  cert.groebner = buchberger(generators, options);
  cert.unit = cert.groebner.is_unit();
  return cert;
}

namespace {

struct IndependentSetSearch {
  std::vector<std::uint64_t> supports;
  std::size_t variable_count = 0;
  std::uint64_t best = 0;
  int best_size = -1;

  bool independent(std::uint64_t set) const {
    for (auto s : supports)
      if ((s & ~set) == 0) return false;
    return true;
  }

  void search(std::size_t var, std::uint64_t set, int size) {
    if (size + int(variable_count - var) <= best_size) return;
    if (var == variable_count) {
      best = set;
      best_size = size;
      return;
    }
    std::uint64_t with = set | (std::uint64_t{1} << var);
    if (independent(with)) search(var + 1, with, size + 1);
    search(var + 1, set, size);
  }
};

}  // namespace

std::vector<std::size_t> maximal_independent_set(std::span<const MultiPoly> groebner_basis, std::size_t variable_count,
                                                 MonomialOrder order) {
  if (variable_count > kMaxVariables) throw std::invalid_argument("too many variables");
  IndependentSetSearch search;
  search.variable_count = variable_count;
  for (const auto& g : groebner_basis) {
    if (g.is_zero()) continue;
    const Monomial& m = g.leading_term(order).monomial;
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (m.exponents[i]) s |= std::uint64_t{1} << i;
    search.supports.push_back(s);
  }
  if (!search.independent(0)) return {};
  search.search(0, 0, 0);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < variable_count; ++i)
    if (search.best >> i & 1) out.push_back(i);
  return out;
}

int krull_dimension(std::span<const MultiPoly> groebner_basis, std::size_t variable_count, MonomialOrder order) {
  for (const auto& g : groebner_basis)
    if (!g.is_zero() && g.is_constant()) return -1;
  return static_cast<int>(maximal_independent_set(groebner_basis, variable_count, order).size());
}

}  // namespace operadix
