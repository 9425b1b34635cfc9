#include "oracles.hpp"

#include "operadix/fixtures.hpp"
#include "operadix/groebner.hpp"
#include "operadix/poly_matrix.hpp"

#include <doctest.h>

using namespace operadix;

namespace {

const ParameterRing kXyz({"x", "y", "z"});

MultiPoly P(std::string_view text, const ParameterRing& ring = kXyz) { return parse_poly(text, ring); }

MultiPoly random_poly(std::mt19937_64& rng, std::size_t vars, int terms, unsigned max_degree) {
  std::vector<MultiPoly::Term> out;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    for (std::size_t v = 0; v < vars; ++v) {
      const auto e = static_cast<std::uint8_t>(rng() % (max_degree + 1));
      m.exponents[v] = e;
      m.degree += e;
    }
    out.push_back({m, oracle::random_nonzero(rng, 5)});
  }
  return MultiPoly::from_terms(out);
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, MonomialOrder order) {
  const auto& lf = f.leading_term(order);
  const auto& lg = g.leading_term(order);
  const Monomial l = lcm(lf.monomial, lg.monomial);
  return f.scaled(1 / lf.coeff, l / lf.monomial) - g.scaled(1 / lg.coeff, l / lg.monomial);
}

std::vector<MultiPoly> shipped(const char* name) {
  return load_polys(default_data_dir() / name, ParameterRing::ansatz_parameters());
}

}  // namespace

TEST_CASE("polynomial arithmetic and parsing") {
  const auto p = P("x^2 - 2*x*y + 1/3");
  CHECK(to_string(p, kXyz) == to_string(P("1/3 + x^2 - 2*x*y"), kXyz));
  CHECK(P("(x+y)*(x-y)") == P("x^2 - y^2"));
  CHECK(P("(x+y)^2 - 2*(x*y)") == P("x^2 + y^2"));
  CHECK(P("-(x - 1)") == P("1 - x"));
  CHECK_THROWS(P("(x + y"));
  CHECK_THROWS(P("x + y)"));
  CHECK(P("x - x").is_zero());
  CHECK(P("5").constant_value() == Rational(5));
  CHECK_FALSE(P("x").constant_value().has_value());
  const std::vector<Rational> pt{Rational(2), Rational(3), Rational(0)};
  CHECK(p.evaluate(pt) == Rational(4 - 12) + Rational(1, 3));
  CHECK_THROWS(P("w + 1"));
  for (const auto& t : p.terms()) CHECK(sgn(t.coeff) != 0);
}

TEST_CASE("poly_reduce examples") {
  const std::vector<MultiPoly> gx{P("x")};
  CHECK(poly_reduce(P("x^2"), gx, MonomialOrder::grevlex).is_zero());
  const auto f = shipped("appendix_a1.poly");
  REQUIRE(f.size() == 32);
  // Members reduce to zero against themselves and against a basis of the ideal.
  const auto gb = buchberger(f).basis;
  for (const auto& fi : f) {
    CHECK(poly_reduce(fi, std::vector<MultiPoly>{fi}, MonomialOrder::grevlex).is_zero());
    CHECK(poly_reduce(fi, gb, MonomialOrder::grevlex).is_zero());
  }
}

TEST_CASE("division remainder lies in the ideal") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 40; ++k) {
    std::vector<MultiPoly> g;
    for (int i = 0; i < 3; ++i) g.push_back(random_poly(rng, 3, 3, 2));
    const auto gb = buchberger(g, {MonomialOrder::grevlex, 100000, false});
    for (int j = 0; j < 5; ++j) {
      const auto f = random_poly(rng, 3, 5, 3);
      for (auto order : {MonomialOrder::grevlex, MonomialOrder::lex}) {
        const auto r = poly_reduce(f, g, order);
        // No remainder term is divisible by a leading monomial of g.
        for (const auto& t : r.terms())
          for (const auto& gi : g) CHECK_FALSE(gi.leading_term(order).monomial.divides(t.monomial));
      }
      CHECK(poly_reduce(f - poly_reduce(f, g, MonomialOrder::grevlex), gb.basis, MonomialOrder::grevlex).is_zero());
    }
  }
}

TEST_CASE("buchberger examples") {
  const std::vector<MultiPoly> one{P("1")};
  const auto r1 = buchberger(one);
  CHECK(r1.is_unit());
  CHECK(r1.basis == std::vector<MultiPoly>{P("1")});

  const std::vector<MultiPoly> lin{P("x - y"), P("y - z")};
  const auto r2 = buchberger(lin, {MonomialOrder::lex, 1000, true});
  CHECK(r2.basis == std::vector<MultiPoly>{P("x - z"), P("y - z")});

  const std::vector<MultiPoly> unit{P("x"), P("x - 1")};
  CHECK(is_unit_ideal(unit).unit);
  CHECK(is_unit_ideal(unit, MonomialOrder::lex).unit);
}

TEST_CASE("resource cap is reported") {
  std::mt19937_64 rng(12);
  std::vector<MultiPoly> g;
  for (int i = 0; i < 4; ++i) g.push_back(random_poly(rng, 3, 4, 3));
  CHECK_THROWS_AS(buchberger(g, {MonomialOrder::grevlex, 1, false}), ResourceLimitExceeded);
}

TEST_CASE("reduced basis is unique and closed under S-pairs") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 25; ++k) {
    std::vector<MultiPoly> g;
    for (int i = 0; i < 3; ++i) g.push_back(random_poly(rng, 3, 3, 1));
    for (auto order : {MonomialOrder::grevlex, MonomialOrder::lex}) {
      const GroebnerOptions opts{order, 200000, false};
      const auto gb = buchberger(g, opts);
      auto shuffled = g;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      CHECK(buchberger(shuffled, opts).basis == gb.basis);
      for (std::size_t i = 0; i < gb.basis.size(); ++i) {
        CHECK(gb.basis[i].leading_term(order).coeff == Rational(1));
        for (std::size_t j = i + 1; j < gb.basis.size(); ++j)
          CHECK(poly_reduce(s_polynomial(gb.basis[i], gb.basis[j], order), gb.basis, order).is_zero());
      }
      for (const auto& gi : g) CHECK(poly_reduce(gi, gb.basis, order).is_zero());
    }
  }
}

TEST_CASE("krull dimension conventions") {
  CHECK(krull_dimension({}, 16, MonomialOrder::grevlex) == 16);
  const std::vector<MultiPoly> one{P("1")};
  CHECK(krull_dimension(one, 3, MonomialOrder::grevlex) == -1);
  const std::vector<MultiPoly> g{P("x*y"), P("x*z")};
  const auto gb = buchberger(g);
  CHECK(krull_dimension(gb.basis, 3, MonomialOrder::grevlex) == 2);
  const std::vector<MultiPoly> h{P("x - y"), P("y - z")};
  CHECK(krull_dimension(buchberger(h).basis, 3, MonomialOrder::grevlex) == 1);
}

TEST_CASE("shipped constraint ideals") {
  const auto f = shipped("appendix_a1.poly");
  const auto g = shipped("appendix_a2.poly");
  REQUIRE(g.size() == 5);
  const auto cert = is_unit_ideal(f);
  CHECK_FALSE(cert.unit);
  CHECK(krull_dimension(cert.groebner.basis, 16, MonomialOrder::grevlex) == 5);

  auto fg = f;
  fg.insert(fg.end(), g.begin(), g.end());
  CHECK(is_unit_ideal(fg).unit);

  // Shuffled generators give the same reduced basis.
  std::mt19937_64 rng(4);
  auto shuffled = f;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  CHECK(buchberger(shuffled, {MonomialOrder::grevlex, 2'000'000, false}).basis == cert.groebner.basis);
}

TEST_CASE("unit ideal result does not depend on the order") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 30; ++k) {
    std::vector<MultiPoly> g;
    for (int i = 0; i < 3; ++i) g.push_back(random_poly(rng, 3, 3, 1));
    CHECK(is_unit_ideal(g, MonomialOrder::lex).unit == is_unit_ideal(g, MonomialOrder::grevlex).unit);
  }
  const std::vector<MultiPoly> small{P("x^2 - y"), P("y^2 - z"), P("x*z - 1")};
  CHECK(is_unit_ideal(small, MonomialOrder::lex).unit == is_unit_ideal(small, MonomialOrder::grevlex).unit);
  const std::vector<MultiPoly> empty_variety{P("x^2 - y"), P("x - y"), P("y^2 - 2")};
  CHECK(is_unit_ideal(empty_variety, MonomialOrder::lex).unit);
  CHECK(is_unit_ideal(empty_variety, MonomialOrder::grevlex).unit);
}

TEST_CASE("eliminate_unit_pivots examples") {
  const ParameterRing ring({"a", "b", "c"});
  const auto m = PolyMatrix::from_rows({{P("-1", ring), P("a", ring)}, {P("b", ring), P("c", ring)}});
  const auto r = eliminate_unit_pivots(m, 1);
  REQUIRE(r.rows() == 1);
  REQUIRE(r.cols() == 1);
  CHECK(r(0, 0) == P("c + a*b", ring));

  const auto z = PolyMatrix::from_rows({{P("-1", ring), P("0", ring), P("a", ring)},
                                        {P("0", ring), P("1", ring), P("b", ring)},
                                        {P("0", ring), P("0", ring), P("c", ring)}});
  CHECK(eliminate_unit_pivots(z, 2)(0, 0) == P("c", ring));

  const auto bad = PolyMatrix::from_rows({{P("a", ring), P("1", ring)}, {P("b", ring), P("c", ring)}});
  CHECK_THROWS(eliminate_unit_pivots(bad, 1));
}

TEST_CASE("pivot elimination preserves the row space") {
  std::mt19937_64 rng(31);
  const ParameterRing ring({"p", "q"});
  for (int k = 0; k < 100; ++k) {
    const std::size_t piv = 1 + rng() % 3, extra = 1 + rng() % 3, cols = piv + 1 + rng() % 4;
    PolyMatrix m(piv + extra, cols);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        if (r < piv && c < piv) {
          m(r, c) = r == c ? MultiPoly(rng() % 2 ? -1 : 1) : MultiPoly();
          continue;
        }
        m(r, c) = random_poly(rng, 2, 2, 1);
      }
    const auto res = eliminate_unit_pivots(m, piv);
    const std::vector<Rational> pt{oracle::random_rational(rng), oracle::random_rational(rng)};
    const auto full = m.evaluate(pt);
    auto reduced = std::vector<std::vector<Rational>>(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(piv));
    for (std::size_t r = 0; r < extra; ++r) {
      std::vector<Rational> row(cols);
      for (std::size_t c = 0; c < res.cols(); ++c) row[piv + c] = res(r, c).evaluate(pt);
      reduced.push_back(row);
    }
    CHECK(oracle::dense_rank(full) == oracle::dense_rank(reduced));
    auto both = full;
    both.insert(both.end(), reduced.begin() + static_cast<std::ptrdiff_t>(piv), reduced.end());
    CHECK(oracle::dense_rank(both) == oracle::dense_rank(full));
    CHECK(rank(full) == oracle::dense_rank(full));
  }
}
