#include "oracles.hpp"

#include "operadix/shuffle_tree.hpp"

#include <doctest.h>

using namespace operadix;

namespace {

Tree L(int i) { return Tree::leaf(i); }
Tree B(int g, const Tree& a, const Tree& b) { return Tree::binary(g, a, b); }

std::set<std::pair<std::size_t, std::vector<std::size_t>>> as_set(const std::vector<Occurrence>& occs) {
  std::set<std::pair<std::size_t, std::vector<std::size_t>>> out;
  for (const auto& o : occs) {
    auto v = o.vertices;
    std::sort(v.begin(), v.end());
    out.insert({o.root, v});
  }
  return out;
}

std::uint64_t double_factorial(int k) {
  std::uint64_t r = 1;
  for (int i = k; i > 1; i -= 2) r *= static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

TEST_CASE("validate examples") {
  const auto sig = ShuffleSignature::bare({"u"});
  CHECK(validate(B(0, L(1), B(0, L(2), L(3))), sig));
  CHECK_FALSE(validate(B(0, L(2), B(0, L(1), L(3))), sig));
  CHECK(validate(L(1), sig));
  CHECK_FALSE(validate(B(1, L(1), L(2)), sig));
  CHECK_FALSE(validate(B(0, L(1), L(3)), sig));
}

TEST_CASE("text form round trip") {
  const auto sig = ShuffleSignature::bare({"u", "v"});
  const Tree t = parse_tree("u(u(1,3),2)", sig.names());
  CHECK(t == B(0, B(0, L(1), L(3)), L(2)));
  CHECK(to_text(t, sig.names()) == "u(u(1,3),2)");
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const Tree r = oracle::random_shuffle_tree(rng, 2 + k % 6, 2);
    CHECK(parse_tree(to_text(r, sig.names()), sig.names()) == r);
  }
}

TEST_CASE("combs") {
  const auto one = ShuffleSignature::bare({"u"});
  const auto two = ShuffleSignature::bare({"u", "v"});
  auto right_count = [](const ShuffleSignature& s, int n) {
    std::size_t c = 0;
    for (const auto& t : enumerate_trees(s, n)) c += is_right_comb(t);
    return c;
  };
  CHECK(enumerate_left_combs(one, 3).size() == 2);
  CHECK(right_count(one, 3) == 1);
  CHECK(enumerate_left_combs(two, 4).size() == 48);
  const std::vector<int> labels{1, 2}, gens{0};
  CHECK(left_comb(labels, gens) == right_comb(gens));
  CHECK(left_comb(labels, gens) == B(0, L(1), L(2)));
  const std::vector<int> l3{1, 3, 2}, g2{1, 0};
  CHECK(left_comb(l3, g2) == B(0, B(1, L(1), L(3)), L(2)));
  CHECK(right_comb(g2) == B(1, L(1), B(0, L(2), L(3))));
  const std::vector<int> bad{2, 1, 3};
  CHECK_THROWS(left_comb(bad, g2));
  for (const auto& t : enumerate_left_combs(two, 4)) {
    CHECK(is_left_comb(t));
    CHECK(validate(t, two));
  }
}

TEST_CASE("enumeration counts") {
  const auto one = ShuffleSignature::bare({"u"});
  const auto two = ShuffleSignature::bare({"u", "v"});
  for (int n = 2; n <= 7; ++n) CHECK(enumerate_trees(one, n).size() == double_factorial(2 * n - 3));
  CHECK(enumerate_trees(one, 3).size() == 3);
  CHECK(enumerate_trees(two, 3).size() == 12);
  CHECK(enumerate_trees(one, 4).size() == 15);
  CHECK(enumerate_trees(two, 4).size() == 120);
  // n! Catalan(n-1) planar monomials of one symmetric operation equal the
  // shuffle count with two generators.
  std::uint64_t fact = 1, catalan = 1;
  for (int n = 2; n <= 5; ++n) {
    fact *= static_cast<std::uint64_t>(n);
    catalan = n == 2 ? 1 : catalan * 2 * (2 * static_cast<std::uint64_t>(n) - 3) / static_cast<std::uint64_t>(n);
    CHECK(enumerate_trees(two, n).size() == fact * catalan);
  }
  CHECK_THROWS(enumerate_trees(one, 10));
  for (int n = 2; n <= 5; ++n)
    for (const auto& t : enumerate_trees(two, n)) {
      CHECK(validate(t, two));
      CHECK(t.arity() == n);
    }
}

TEST_CASE("every non-left comb is divisible by a right comb") {
  const auto two = ShuffleSignature::bare({"u", "v"});
  std::vector<Tree> rights;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const std::vector<int> g{a, b};
      rights.push_back(right_comb(g));
    }
  for (int n = 3; n <= 5; ++n)
    for (const auto& t : enumerate_trees(two, n)) {
      const bool divisible = std::any_of(rights.begin(), rights.end(), [&](const Tree& r) { return divides(r, t); });
      CHECK(divisible == !is_left_comb(t));
    }
}

TEST_CASE("find_divisors examples") {
  const Tree rc = B(0, L(1), B(0, L(2), L(3)));
  const Tree left4 = B(0, B(0, B(0, L(1), L(2)), L(3)), L(4));
  CHECK(find_divisors(left4, rc).empty());
  const Tree right4 = B(0, L(1), B(0, L(2), B(0, L(3), L(4))));
  const auto occs = find_divisors(right4, rc);
  CHECK(occs.size() == 2);
  CHECK(as_set(occs) == oracle::brute_force_occurrences(right4, rc));
}

TEST_CASE("find_divisors agrees with the exhaustive subset oracle") {
  const auto two = ShuffleSignature::bare({"u", "v"});
  std::vector<Tree> patterns;
  for (int n = 2; n <= 4; ++n)
    for (const auto& t : enumerate_trees(two, n)) patterns.push_back(t);
  std::size_t compared = 0, hits = 0;
  for (int n = 2; n <= 5; ++n)
    for (const auto& host : enumerate_trees(two, n)) {
      for (const auto& pattern : patterns) {
        if (pattern.weight() > host.weight()) continue;
        const auto found = find_divisors(host, pattern);
        const auto expected = oracle::brute_force_occurrences(host, pattern);
        REQUIRE(as_set(found) == expected);
        CHECK(divides(pattern, host) == !expected.empty());
        hits += expected.size();
        ++compared;
      }
      // Whole-tree pattern.
      REQUIRE(find_divisors(host, host).size() == 1);
    }
  CHECK(compared > 100000);
  CHECK(hits > 0);
}

TEST_CASE("substitute examples") {
  const Tree rc = B(0, L(1), B(0, L(2), L(3)));
  const auto whole = find_divisors(rc, rc);
  REQUIRE(whole.size() == 1);
  CHECK(substitute(rc, whole[0], B(0, B(0, L(1), L(2)), L(3))) == B(0, B(0, L(1), L(2)), L(3)));

  const Tree host = B(0, L(1), B(0, L(2), B(0, L(3), L(4))));
  const auto occs = find_divisors(host, rc);
  const auto root = std::find_if(occs.begin(), occs.end(), [](const Occurrence& o) { return o.root == 0; });
  REQUIRE(root != occs.end());
  CHECK(substitute(host, *root, B(0, B(0, L(1), L(3)), L(2))) == B(0, B(0, L(1), B(0, L(3), L(4))), L(2)));
  CHECK_THROWS(substitute(host, *root, B(0, L(1), L(2))));
}

TEST_CASE("substitute preserves validity and arity") {
  const auto two = ShuffleSignature::bare({"u", "v"});
  std::mt19937_64 rng(17);
  std::vector<Tree> patterns;
  for (int n = 2; n <= 3; ++n)
    for (const auto& t : enumerate_trees(two, n)) patterns.push_back(t);
  std::size_t done = 0;
  for (int k = 0; k < 3000; ++k) {
    const Tree host = oracle::random_shuffle_tree(rng, 3 + static_cast<int>(rng() % 4), 2);
    const Tree& pattern = patterns[rng() % patterns.size()];
    for (const auto& occ : find_divisors(host, pattern)) {
      const auto& same = enumerate_trees(two, pattern.arity());
      const Tree& replacement = same[rng() % same.size()];
      const Tree out = substitute(host, occ, replacement);
      REQUIRE(validate(out, two));
      CHECK(out.arity() == host.arity());
      CHECK(out.weight() == host.weight());
      ++done;
    }
  }
  CHECK(done > 1000);
}
