#include "oracles.hpp"

#include "operadix/ansatz.hpp"
#include "operadix/fixtures.hpp"
#include "operadix/groebner.hpp"
#include "operadix/report.hpp"
#include "operadix/theorem.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <unistd.h>

using namespace operadix;

namespace {

Tree L(int i) { return Tree::leaf(i); }
Tree B(int g, const Tree& a, const Tree& b) { return Tree::binary(g, a, b); }

MultiPoly var(const GenericAnsatz& a, std::string_view name) { return a.parameter(name); }

// p with variable i replaced by images[i].
MultiPoly substitute_vars(const MultiPoly& p, const std::vector<MultiPoly>& images) {
  MultiPoly out;
  for (const auto& t : p.terms()) {
    MultiPoly term(t.coeff);
    for (std::size_t v = 0; v < images.size(); ++v)
      for (unsigned e = 0; e < t.monomial.exponents[v]; ++e) term *= images[v];
    out += term;
  }
  return out;
}

// Displayed-convention parameters in terms of matrix-convention ones:
// b -> -b, g -> d, d -> -g.
std::vector<MultiPoly> displayed_to_matrix(const GenericAnsatz& m) {
  std::vector<MultiPoly> images;
  for (int k = 1; k <= 4; ++k) images.push_back(var(m, "a" + std::to_string(k)));
  for (int k = 1; k <= 4; ++k) images.push_back(-var(m, "b" + std::to_string(k)));
  for (int k = 1; k <= 4; ++k) images.push_back(var(m, "d" + std::to_string(k)));
  for (int k = 1; k <= 4; ++k) images.push_back(-var(m, "g" + std::to_string(k)));
  return images;
}

std::vector<Rational> random_point(std::mt19937_64& rng) {
  std::vector<Rational> p;
  for (int i = 0; i < 16; ++i) p.push_back(oracle::random_rational(rng, 4));
  return p;
}

// alpha1 = -1, beta2 = -1, delta3 = 1, gamma4 = 1, everything else zero.
std::vector<Rational> variety_point() {
  std::vector<Rational> p(16);
  p[0] = -1;
  p[5] = -1;
  p[14] = 1;
  p[11] = 1;
  return p;
}

std::vector<MultiPoly> fixture(const char* name) {
  return load_polys(default_data_dir() / name, ParameterRing::ansatz_parameters());
}

const CheckRecord& check(const TheoremReport& r, int id) {
  for (const auto& c : r.checks)
    if (c.id == id) return c;
  throw std::logic_error("missing check");
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("operadix-test-" + std::to_string(std::random_device{}()) + "-" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
    for (const auto& e : std::filesystem::directory_iterator(default_data_dir()))
      std::filesystem::copy_file(e.path(), path / e.path().filename());
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path / name) << text; }
  void reseal() const {
    std::string sums;
    for (const auto& e : verify_checksums(path)) sums += sha256_hex(read_file(path / e.file)) + "  " + e.file + "\n";
    write("SHA256SUMS", sums);
  }
};

}  // namespace

TEST_CASE("displayed rules") {
  const auto a = build_ansatz(AnsatzConvention::displayed);
  const Tree dot13_2 = B(0, B(0, L(1), L(3)), L(2));
  CHECK(a.rules[0].tail.coefficient(dot13_2) == var(a, "a1"));
  CHECK(a.rules[1].tail.coefficient(dot13_2) == var(a, "b1"));
  CHECK(a.rules[3].tail.coefficient(B(1, B(0, L(1), L(2)), L(3))) == -var(a, "d3"));
  for (const auto conv : {AnsatzConvention::matrix, AnsatzConvention::displayed}) {
    const auto z = build_ansatz(conv);
    const std::vector<Rational> zero(16);
    const auto rules = rule_elements_at(z, zero);
    for (std::size_t i = 0; i < 4; ++i) CHECK(rules[i] == OperadElement<Rational>::monomial(z.chain[i]));
  }
}

TEST_CASE("the two conventions differ by a change of parameters") {
  const auto m = build_ansatz(AnsatzConvention::matrix);
  const auto d = build_ansatz(AnsatzConvention::displayed);
  CHECK(m.chain == d.chain);
  std::mt19937_64 rng(2);
  for (int k = 0; k < 20; ++k) {
    const auto p = random_point(rng);
    std::vector<Rational> q;
    for (const auto& img : displayed_to_matrix(m)) q.push_back(img.evaluate(p));
    CHECK(rule_elements_at(d, q) == rule_elements_at(m, p));
  }
}

TEST_CASE("arity-3 matrix and its transposed block") {
  const auto a = build_ansatz();
  const auto m = arity3_matrix(a);
  REQUIRE(m.rows() == 4);
  REQUIRE(m.cols() == 12);
  const std::vector<MultiPoly> row1{-1, 0, 0, 0, var(a, "a1"), var(a, "a1"), var(a, "a2"), var(a, "a2"),
                                    var(a, "a3"), var(a, "a3"), var(a, "a4"), var(a, "a4")};
  for (std::size_t c = 0; c < 12; ++c) CHECK(m(0, c) == row1[c]);
  CHECK(m(1, 4) == -var(a, "b1"));
  const std::vector<Rational> zero(16);
  const auto at0 = m.evaluate(zero);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 12; ++c) CHECK(at0[r][c] == Rational(c == r ? -1 : 0));

  const auto t = transposed_block(a);
  const std::vector<MultiPoly> trow1{var(a, "a1"), var(a, "a2"), -var(a, "a3"), -var(a, "a4"), -1, var(a, "a1"),
                                     0, -var(a, "a2"), 0, var(a, "a3"), 0, -var(a, "a4")};
  for (std::size_t c = 0; c < 12; ++c) CHECK(t(0, c) == trow1[c]);
  CHECK(t(2, 8) == MultiPoly(1));

  // Applying the transposition again gives back the original rows.
  for (std::size_t r = 0; r < 4; ++r) {
    OperadElement<MultiPoly> e;
    for (std::size_t c = 0; c < 12; ++c) e.add(a.chain[c], t(r, c));
    const auto back = permute_leaves(e, [](int i) { return i == 1 ? 2 : i == 2 ? 1 : i; }, a.signature,
                                     a.shuffle_signature);
    for (std::size_t c = 0; c < 12; ++c) CHECK(back.coefficient(a.chain[c]) == m(r, c));
  }
}

TEST_CASE("arity-3 constraints match the tabulated polynomials") {
  const auto a = build_ansatz();
  const auto f = arity3_constraints(a);
  CHECK(f.size() == 32);
  const auto f1 = parse_poly("a1^2 - a2*b1 + a4*g1 - a3*d1 - 1", a.ring);
  CHECK(std::any_of(f.begin(), f.end(), [&](const MultiPoly& p) { return p == f1 || p == -f1; }));
  CHECK(match_up_to_sign(f, fixture("appendix_a1.poly")).matched);
}

TEST_CASE("rank four exactly where the constraints vanish") {
  const auto a = build_ansatz();
  const auto f = arity3_constraints(a);
  const auto stacked = arity3_matrix(a).stacked(transposed_block(a));
  std::mt19937_64 rng(13);
  auto agree = [&](const std::vector<Rational>& p) {
    const bool vanish = std::all_of(f.begin(), f.end(), [&](const MultiPoly& q) { return is_zero(q.evaluate(p)); });
    return (oracle::dense_rank(stacked.evaluate(p)) == 4) == vanish;
  };
  int points = 0, on_variety = 0;
  for (int k = 0; k < 120; ++k) {
    CHECK(agree(random_point(rng)));
    ++points;
  }
  // A point on the variety.
  const auto v = variety_point();
  for (const auto& q : f) CHECK(is_zero(q.evaluate(v)));
  CHECK(oracle::dense_rank(stacked.evaluate(v)) == 4);
  ++on_variety;
  // Sparse points where many parameters vanish hit the variety sometimes.
  for (int k = 0; k < 400; ++k) {
    std::vector<Rational> p(16);
    for (int i = 0; i < 3; ++i) p[rng() % 16] = Rational(static_cast<int>(rng() % 3) - 1);
    CHECK(agree(p));
    const bool vanish = std::all_of(f.begin(), f.end(), [&](const MultiPoly& q) { return is_zero(q.evaluate(p)); });
    on_variety += vanish;
    ++points;
  }
  CHECK(points >= 100);
  CHECK(on_variety >= 1);
}

TEST_CASE("constraint ideal is unchanged by renaming the parameters") {
  const auto m = build_ansatz(AnsatzConvention::matrix);
  const auto d = build_ansatz(AnsatzConvention::displayed);
  const auto images = displayed_to_matrix(m);
  std::vector<MultiPoly> renamed;
  for (const auto& p : arity3_constraints(d)) renamed.push_back(substitute_vars(p, images));
  const GroebnerOptions opts{MonomialOrder::grevlex, 2'000'000, false};
  CHECK(buchberger(renamed, opts).basis == buchberger(arity3_constraints(m), opts).basis);
}

TEST_CASE("degree-4 constraints") {
  const auto a = build_ansatz();
  const auto deg4 = degree4_constraints(a);
  CHECK(deg4.multiple == B(0, L(1), B(0, L(2), B(0, L(3), L(4)))));
  REQUIRE(deg4.left_combs.size() == 48);
  REQUIRE(deg4.coefficients.size() == 48);
  REQUIRE(deg4.selected.size() == 5);
  const auto g = fixture("appendix_a2.poly");
  REQUIRE(g.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(scalar_ratio(deg4.selected[i], g[i]).has_value());
  const auto g1 = parse_poly(
      "a3*d1 + a1^2 - g1*(a4*b2 + a2^2) - d1*(a3*b2 + a1*a2) - a1*(a3*b1 + a1^2) - b1*(a4*b1 + a1*a2)", a.ring);
  CHECK(scalar_ratio(deg4.selected[0], g1).has_value());
  const std::vector<Rational> zero(16);
  for (const auto& c : deg4.coefficients) CHECK(is_zero(c.evaluate(zero)));
  CHECK(deg4.root_first - deg4.inner_first ==
        [&] {
          OperadElement<MultiPoly> e;
          for (std::size_t i = 0; i < 48; ++i) e.add(deg4.left_combs[i], deg4.coefficients[i]);
          return e;
        }());
}

TEST_CASE("degree-4 constraints against numeric double rewriting") {
  const auto a = build_ansatz();
  const auto deg4 = degree4_constraints(a);
  const auto& names = a.shuffle_signature.names();
  std::mt19937_64 rng(101);
  int points = 0;
  for (int k = 0; k < 120; ++k) {
    const auto p = random_point(rng);
    const auto diff = oracle::DoubleRewriter(p).difference();
    std::size_t seen = 0;
    for (std::size_t i = 0; i < 48; ++i) {
      const auto it = diff.find(to_text(deg4.left_combs[i], names));
      const Rational expected = it == diff.end() ? Rational(0) : it->second.second;
      seen += it != diff.end();
      REQUIRE(deg4.coefficients[i].evaluate(p) == expected);
    }
    REQUIRE(seen == diff.size());
    ++points;
  }
  CHECK(points >= 100);
}

TEST_CASE("parameters read back from rule systems") {
  const auto a = build_ansatz();
  std::mt19937_64 rng(55);
  for (int k = 0; k < 50; ++k) {
    const auto p = random_point(rng);
    auto rules = rule_elements_at(a, p);
    std::vector<OperadElement<Rational>> mixed;
    // Invertible upper-triangular mix of the four relations.
    for (std::size_t i = 0; i < 4; ++i) {
      OperadElement<Rational> e = rules[i] * oracle::random_nonzero(rng);
      for (std::size_t j = i + 1; j < 4; ++j) e += rules[j] * oracle::random_rational(rng);
      mixed.push_back(e);
    }
    const auto back = parameters_from_relations(a, mixed);
    REQUIRE(back.has_value());
    CHECK(*back == p);
  }
  // Too few relations.
  const auto rules = rule_elements_at(a, random_point(rng));
  const std::vector<OperadElement<Rational>> three(rules.begin(), rules.begin() + 3);
  CHECK_FALSE(parameters_from_relations(a, three).has_value());
}

TEST_CASE("generic raw identities have no four-rule shape") {
  const auto a = build_ansatz();
  std::mt19937_64 rng(66);
  for (int k = 0; k < 10; ++k) {
    RawTwoVarietyIdentities raw;
    for (int i = 1; i <= 8; ++i) {
      raw.l(i) = oracle::random_rational(rng);
      raw.r(i) = oracle::random_rational(rng);
    }
    CHECK_FALSE(parameters_from_raw(a, raw).has_value());
  }
}

TEST_CASE("full run passes and the report is deterministic") {
  TheoremConfig config;
  config.threads = 2;
  const auto report = run_theorem(config);
  CHECK(report.fixtures_ok());
  REQUIRE(report.checks.size() == 9);
  for (int id = 1; id <= 9; ++id) {
    INFO("check " << id << " " << check(report, id).details.dump());
    CHECK(check(report, id).passed);
  }
  CHECK(report.passed());
  const auto again = run_theorem(config);
  CHECK(to_json(report, false).dump() == to_json(again, false).dump());
  const auto j = to_json(report);
  CHECK(j["overall"] == "pass");
  CHECK(j["checks"].size() == 9);
}

TEST_CASE("corrupted constraint fixture fails check 6") {
  TempDir dir;
  auto text = read_file(dir.path / "appendix_a1.poly");
  const std::string f1 = "a1^2 - a2*b1 - a3*d1 + a4*g1 - 1";
  const auto at = text.find(f1);
  REQUIRE(at != std::string::npos);
  text.replace(at, f1.size(), "a1^2 - a2*b1 - a3*d1 + a4*g1 + 1");
  dir.write("appendix_a1.poly", text);

  TheoremConfig config;
  config.data_dir = dir.path;
  const auto unsealed = run_theorem(config);
  CHECK_FALSE(unsealed.fixtures_ok());
  CHECK_FALSE(unsealed.passed());

  dir.reseal();
  const auto report = run_theorem(config);
  CHECK(report.fixtures_ok());
  const auto& c6 = check(report, 6);
  CHECK_FALSE(c6.passed);
  CHECK(c6.details["set_match_up_to_sign"] == false);
  CHECK(c6.details["ideal_equal"] == false);
  REQUIRE(c6.details["unmatched_expected"].size() == 1);
  const auto& miss = c6.details["unmatched_expected"][0];
  CHECK(miss["index"] == 1);
  CHECK(miss["poly"].get<std::string>().find("+ 1") != std::string::npos);
  CHECK_FALSE(report.passed());
}

TEST_CASE("lower arity bound") {
  TheoremConfig config;
  config.max_arity = 3;
  const auto report = run_theorem(config);
  const auto& c2 = check(report, 2);
  CHECK(c2.passed);
  CHECK(c2.details["complete_up_to"] == 3);
  CHECK(c2.details["dims"].size() == 2);
  const auto& c5 = check(report, 5);
  CHECK(c5.details["complete_up_to"] == 3);
  CHECK(c5.details["dims"].size() == 2);
  config.max_arity = 1;
  CHECK_THROWS_AS(run_theorem(config), std::invalid_argument);
  config.max_arity = 10;
  CHECK_THROWS_AS(run_theorem(config), std::invalid_argument);
}

TEST_CASE("rewrite system JSON round trip") {
  ShuffleSignature sig;
  auto rels = shipped_relations(default_data_dir(), "mocklie", sig);
  const auto sys = complete(rels, sig, OrderSpec{}, {4, 1});
  const auto back = rewrite_system_from_json(to_json(sys));
  CHECK(to_json(back) == to_json(sys));
  REQUIRE(back.rules.size() == sys.rules.size());
  for (std::size_t i = 0; i < sys.rules.size(); ++i) {
    CHECK(back.rules[i].lead == sys.rules[i].lead);
    CHECK(back.rules[i].tail == sys.rules[i].tail);
  }
}

TEST_CASE("fixture checksums") {
  const auto entries = verify_checksums(default_data_dir());
  CHECK(entries.size() >= 5);
  for (const auto& e : entries) CHECK(e.ok());
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
