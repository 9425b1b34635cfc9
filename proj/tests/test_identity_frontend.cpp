#include "oracles.hpp"

#include "operadix/polarise.hpp"
#include "operadix/shuffle.hpp"

#include <doctest.h>

using namespace operadix;

namespace {

Signature single(Symmetry s) { return Signature({{"*", 2, s}}); }

Tree L(int i) { return Tree::leaf(i); }
Tree B(int g, const Tree& a, const Tree& b) { return Tree::binary(g, a, b); }

}  // namespace

TEST_CASE("parse mock-Lie identity") {
  const auto e = parse_identity("(x1*x2)*x3 + (x2*x3)*x1 + (x3*x1)*x2", single(Symmetry::none));
  CHECK(e.terms.size() == 3);
  for (const auto& [t, c] : e.terms.terms()) CHECK(c == Rational(1));
  CHECK(e.variables() == std::vector<int>{1, 2, 3});
}

TEST_CASE("parse cancellation and rational literals") {
  CHECK(parse_identity("x1*x2 - x1*x2", single(Symmetry::none)).is_zero());
  const auto e = parse_identity("1/2 (x1*x2) + 1/2 (x2*x1)", single(Symmetry::none));
  CHECK(e.terms.size() == 2);
  for (const auto& [t, c] : e.terms.terms()) CHECK(c == Rational(1, 2));
  // A commutative product collects both into one term.
  const auto c = parse_identity("1/2 (x1*x2) + 1/2 (x2*x1)", single(Symmetry::commutative));
  CHECK(c.terms.size() == 1);
  CHECK(c.terms.coefficient(B(0, L(1), L(2))) == Rational(1));
}

TEST_CASE("parse errors") {
  const auto sig = single(Symmetry::none);
  CHECK_THROWS_AS(parse_identity("(x1*x2", sig), ParseError);
  CHECK_THROWS_AS(parse_identity("x1 # x2", sig), ParseError);
  CHECK_THROWS_AS(parse_identity("x1*x1", sig), std::invalid_argument);
  CHECK_THROWS_AS(parse_identity("x1*x2 + x1*x3", sig), std::invalid_argument);
  CHECK_THROWS_AS(parse_identity("x1*x9", sig), std::invalid_argument);
  try {
    parse_identity("x1*x2 + ", sig);
    FAIL("expected a parse error");
  } catch (const ParseError& err) {
    CHECK(err.column() >= 8);
  }
}

TEST_CASE("parse and print round trip") {
  std::mt19937_64 rng(11);
  for (auto sym : {Symmetry::none, Symmetry::commutative, Symmetry::anticommutative}) {
    const auto sig = single(sym);
    for (int k = 0; k < 200; ++k) {
      const int n = 2 + static_cast<int>(rng() % 4);
      const auto e = oracle::random_expr(rng, sig, n, 1 + static_cast<int>(rng() % 6));
      CHECK(parse_identity(to_text(e), sig) == e);
    }
  }
}

TEST_CASE("polarise examples") {
  const auto sig = single(Symmetry::none);
  const auto dot = polarise(parse_identity("x1*x2 + x2*x1", sig));
  CHECK(to_text(dot) == "x1.x2");
  const auto star = polarise(parse_identity("x1*x2 - x2*x1", sig));
  CHECK(to_text(star) == "x1^x2");
  const auto p = polarised_signature();
  CHECK(to_text(depolarise(parse_identity("x1.x2", p))) == to_text(parse_identity("x1*x2 + x2*x1", sig)));
  CHECK(to_text(depolarise(parse_identity("x1^x2", p))) == to_text(parse_identity("x1*x2 - x2*x1", sig)));
  const auto jacobi = parse_identity("(x1*x2)*x3 + (x2*x3)*x1 + (x3*x1)*x2", sig);
  CHECK(depolarise(polarise(jacobi)) == jacobi);
}

TEST_CASE("polarise input validation") {
  CHECK_THROWS_AS(polarise(parse_identity("x1*x2", single(Symmetry::commutative))), std::invalid_argument);
  CHECK_THROWS_AS(depolarise(parse_identity("x1*x2", single(Symmetry::none))), std::invalid_argument);
}

TEST_CASE("polarise round trip on random expressions") {
  std::mt19937_64 rng(2024);
  const auto sig = single(Symmetry::none);
  const auto pol = polarised_signature();
  int checked = 0;
  for (int k = 0; k < 1000; ++k) {
    const int n = 2 + k % 4;
    const auto e = oracle::random_expr(rng, sig, n, 1 + static_cast<int>(rng() % 10));
    REQUIRE(depolarise(polarise(e)) == e);
    const auto f = oracle::random_expr(rng, pol, n, 1 + static_cast<int>(rng() % 10));
    REQUIRE(polarise(depolarise(f)) == f);
    ++checked;
  }
  // Spec example: ten-term arity-4 expressions.
  for (int k = 0; k < 100; ++k) {
    const auto e = oracle::random_expr(rng, sig, 4, 10);
    REQUIRE(depolarise(polarise(e)) == e);
  }
  CHECK(checked == 1000);
}

TEST_CASE("to_shuffle examples") {
  const auto jacobi = "(x1*x2)*x3 + (x2*x3)*x1 + (x3*x1)*x2";
  OperadElement<Rational> lie;
  lie.add(B(0, L(1), B(0, L(2), L(3))), Rational(1));
  lie.add(B(0, B(0, L(1), L(2)), L(3)), Rational(-1));
  lie.add(B(0, B(0, L(1), L(3)), L(2)), Rational(1));
  CHECK(to_shuffle(parse_identity(jacobi, single(Symmetry::anticommutative))) == lie);

  OperadElement<Rational> mock;
  mock.add(B(0, L(1), B(0, L(2), L(3))), Rational(1));
  mock.add(B(0, B(0, L(1), L(2)), L(3)), Rational(1));
  mock.add(B(0, B(0, L(1), L(3)), L(2)), Rational(1));
  CHECK(to_shuffle(parse_identity(jacobi, single(Symmetry::commutative))) == mock);

  const auto sig = single(Symmetry::none);
  CHECK(to_shuffle(parse_identity("x1*x2", sig)) == OperadElement<Rational>::monomial(B(0, L(1), L(2))));
  CHECK(to_shuffle(parse_identity("x2*x1", sig)) == OperadElement<Rational>::monomial(B(1, L(1), L(2))));
}

TEST_CASE("to_shuffle preserves dimension at arity 3") {
  // Every symmetric monomial maps to a distinct shuffle monomial up to sign.
  auto count_images = [](Symmetry s) {
    const auto sig = single(s);
    std::set<Tree> images;
    std::vector<int> p{1, 2, 3};
    do {
      for (bool left : {true, false}) {
        Tree t = left ? B(0, B(0, L(p[0]), L(p[1])), L(p[2])) : B(0, L(p[0]), B(0, L(p[1]), L(p[2])));
        auto [sign, canon] = canonical_term(t, sig);
        images.insert(shuffle_monomial(canon, sig).second);
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return images.size();
  };
  CHECK(count_images(Symmetry::none) == 12);
  CHECK(count_images(Symmetry::commutative) == 3);
  CHECK(count_images(Symmetry::anticommutative) == 3);
}

TEST_CASE("orbit_relations examples") {
  const auto jacobi = parse_identity("(x1*x2)*x3 + (x2*x3)*x1 + (x3*x1)*x2", single(Symmetry::anticommutative));
  const auto orbit = orbit_relations(jacobi);
  CHECK(orbit.size() == 1);
  CHECK(span_rank(orbit) == 1);

  const auto zero = parse_identity("x1*x2 - x1*x2", single(Symmetry::none));
  CHECK(orbit_relations(zero).empty());
}

TEST_CASE("orbit of a generic first two-variety identity against a symmetric-side rank oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    RawTwoVarietyIdentities raw;
    for (int i = 1; i <= 8; ++i) raw.l(i) = oracle::random_nonzero(rng);
    const auto e = raw.expressions()[0];
    const auto orbit = orbit_relations(e);
    CHECK(orbit.size() == 6);

    // Oracle: coefficient vectors of the six permuted identities over the
    // twelve symmetric monomials, permuting leaf labels directly.
    std::vector<Tree> basis;
    std::vector<int> p{1, 2, 3};
    do {
      basis.push_back(B(0, B(0, L(p[0]), L(p[1])), L(p[2])));
      basis.push_back(B(0, L(p[0]), B(0, L(p[1]), L(p[2]))));
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::vector<Rational>> rows;
    p = {1, 2, 3};
    do {
      std::vector<Rational> row(basis.size());
      for (const auto& [t, c] : e.terms.terms()) {
        const Tree moved = t.relabeled([&](int i) { return p[static_cast<std::size_t>(i - 1)]; });
        const auto at = std::find(basis.begin(), basis.end(), moved) - basis.begin();
        row[static_cast<std::size_t>(at)] += c;
      }
      rows.push_back(row);
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(span_rank(orbit) == oracle::dense_rank(rows));
    CHECK(oracle::dense_rank(rows) == 6);
  }
}

TEST_CASE("orbit span is stable under permuting variables") {
  std::mt19937_64 rng(99);
  for (auto sym : {Symmetry::none, Symmetry::commutative, Symmetry::anticommutative}) {
    const auto sig = single(sym);
    for (int k = 0; k < 30; ++k) {
      const auto e = oracle::random_expr(rng, sig, 3, 1 + static_cast<int>(rng() % 4));
      if (e.is_zero()) continue;
      std::vector<int> perm{1, 2, 3};
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto f = permute_variables(e, [&](int i) { return perm[static_cast<std::size_t>(i - 1)]; });
      auto a = orbit_relations(e);
      const auto b = orbit_relations(f);
      const auto ra = span_rank(a);
      CHECK(span_rank(b) == ra);
      a.insert(a.end(), b.begin(), b.end());
      CHECK(span_rank(a) == ra);
    }
  }
}

TEST_CASE("relations file parsing") {
  const auto sig = parse_signature("# c\nop * arity 2 symmetry anticomm\n");
  const auto rels = parse_relations("# Jacobi\nrel (x1*x2)*x3 + (x2*x3)*x1 + (x3*x1)*x2\n\n", sig);
  REQUIRE(rels.size() == 1);
  CHECK(rels[0].terms.size() == 3);
}
