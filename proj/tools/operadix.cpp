// operadix command-line front end.
#include "operadix/ansatz.hpp"
#include "operadix/fixtures.hpp"
#include "operadix/groebner.hpp"
#include "operadix/polarise.hpp"
#include "operadix/report.hpp"
#include "operadix/rewriting.hpp"
#include "operadix/shuffle.hpp"
#include "operadix/theorem.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <regex>

using namespace operadix;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string sig, rel, in, report, data_dir, order = "revpathlex", poly_order = "grevlex", vars;
  int upto = 6;
  int max_arity = 6;
  unsigned threads = 1;
  bool json = false;
  bool polarise = false;
  bool full_48 = false;
  bool no_timing = false;
};

std::string coeff_text(const Rational& q) { return to_string(q); }

void emit(const Options& o, const json& j, const std::string& human) {
  if (!o.report.empty()) {
    std::ofstream out(o.report);
    if (!out) throw std::runtime_error("cannot write " + o.report);
    out << j.dump(2) << "\n";
  }
  if (o.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << human;
}

std::vector<OperadElement<Rational>> relations_of(const Presentation& p, const OrderSpec& spec) {
  std::vector<OperadElement<Rational>> out;
  for (const auto& r : p.relations)
    for (auto& e : orbit_relations(r, spec)) out.push_back(std::move(e));
  return out;
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw std::invalid_argument(std::string("missing required option ") + flag);
}

void check_arity(int n, const char* flag) {
  if (n < 2 || n > kMaxEnumerationArity)
    throw std::invalid_argument(std::string(flag) + " must lie in 2.." + std::to_string(kMaxEnumerationArity));
}

int cmd_parse(const Options& o) {
  require(o.sig, "--sig");
  require(o.rel, "--rel");
  const auto p = load_presentation(o.sig, o.rel);
  const OrderSpec spec{parse_order_kind(o.order), {}};
  json j = json::array();
  std::string human;
  for (const auto& r : p.relations) {
    json item{{"expr", to_text(r)}};
    human += "rel " + to_text(r) + "\n";
    if (o.polarise) {
      auto pol = polarise(r);
      item["polarised"] = to_text(pol);
      human += "  polarised: " + to_text(pol) + "\n";
      auto sig = ShuffleSignature::from(pol.signature);
      auto sh = to_shuffle(pol, spec);
      item["shuffle"] = to_text(sh, sig.names(), coeff_text);
      human += "  shuffle:   " + to_text(sh, sig.names(), coeff_text) + "\n";
    } else {
      auto sig = ShuffleSignature::from(p.signature);
      auto sh = to_shuffle(r, spec);
      item["shuffle"] = to_text(sh, sig.names(), coeff_text);
      human += "  shuffle: " + to_text(sh, sig.names(), coeff_text) + "\n";
    }
    j.push_back(item);
  }
  emit(o, json{{"relations", j}}, human);
  return kExitOk;
}

RewriteSystem<Rational> completed(const Options& o, int bound) {
  require(o.sig, "--sig");
  require(o.rel, "--rel");
  const auto p = load_presentation(o.sig, o.rel);
  const OrderSpec spec{parse_order_kind(o.order), {}};
  return complete(relations_of(p, spec), ShuffleSignature::from(p.signature), spec, {bound, o.threads});
}

std::string describe(const RewriteSystem<Rational>& sys) {
  std::string out = "order " + to_string(sys.order.kind) + ", complete up to arity " + std::to_string(sys.complete_up_to) +
                    (sys.quadratic_certified ? ", no rules added by completion\n" : ", rules added by completion\n");
  for (const auto& r : sys.rules)
    out += to_text(r.lead, sys.signature.names()) + " -> " + to_text(r.tail, sys.signature.names(), coeff_text) + "\n";
  return out;
}

int cmd_complete(const Options& o) {
  check_arity(o.max_arity, "--max-arity");
  auto sys = completed(o, o.max_arity);
  emit(o, to_json(sys), describe(sys));
  return kExitOk;
}

int cmd_dims(const Options& o) {
  check_arity(o.upto, "--upto");
  RewriteSystem<Rational> sys;
  if (!o.in.empty()) {
    sys = rewrite_system_from_json(json::parse(read_file(o.in)));
  } else {
    sys = completed(o, o.upto);
  }
  json rows = json::array();
  std::string human = "n\tdim\texact\n";
  for (int n = 2; n <= o.upto; ++n) {
    auto d = dim_normal_forms(sys, n);
    rows.push_back({{"n", n}, {"dim", d.count}, {"exact", d.exact}});
    human += std::to_string(n) + "\t" + std::to_string(d.count) + "\t" + (d.exact ? "yes" : "upper bound") + "\n";
  }
  emit(o, json{{"order", to_string(sys.order.kind)}, {"dims", rows}}, human);
  return kExitOk;
}

int cmd_spoly(const Options& o) {
  check_arity(o.max_arity, "--max-arity");
  require(o.sig, "--sig");
  require(o.rel, "--rel");
  const auto p = load_presentation(o.sig, o.rel);
  const OrderSpec spec{parse_order_kind(o.order), {}};
  const auto sig = ShuffleSignature::from(p.signature);
  // Rules of the lowest arities only, so the S-polynomials are those of the input.
  int lowest = kMaxEnumerationArity;
  auto rels = relations_of(p, spec);
  for (const auto& r : rels) lowest = std::min(lowest, r.arity());
  auto sys = complete(rels, sig, spec, {std::max(2, lowest), o.threads});
  json items = json::array();
  std::string human;
  for (std::size_t i = 0; i < sys.rules.size(); ++i)
    for (std::size_t k = i; k < sys.rules.size(); ++k)
      for (const auto& s : s_polynomials(sys.rules[i], sys.rules[k], sig, spec, o.max_arity - 1)) {
        auto nf = reduce(s.value, sys);
        items.push_back({{"rules", {i, k}},
                         {"multiple", to_text(s.multiple, sig.names())},
                         {"normal_form", to_text(nf, sig.names(), coeff_text)}});
        human += "rules " + std::to_string(i) + "," + std::to_string(k) + " at " + to_text(s.multiple, sig.names()) +
                 ": " + to_text(nf, sig.names(), coeff_text) + "\n";
      }
  emit(o, json{{"s_polynomials", items}}, human.empty() ? "no overlaps\n" : human);
  return kExitOk;
}

ParameterRing infer_ring(const std::string& text, const std::string& vars) {
  std::vector<std::string> names;
  if (!vars.empty()) {
    std::string cur;
    for (char c : vars + ",") {
      if (c == ',') {
        if (!cur.empty()) names.push_back(cur);
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        cur += c;
      }
    }
    return ParameterRing(names);
  }
  static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  std::string body;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) body += line.substr(0, line.find('#')) + "\n";
  for (auto it = std::sregex_iterator(body.begin(), body.end(), ident); it != std::sregex_iterator(); ++it)
    if (std::find(names.begin(), names.end(), it->str()) == names.end()) names.push_back(it->str());
  const auto ansatz = ParameterRing::ansatz_parameters();
  bool inside = true;
  for (const auto& n : names) inside = inside && ansatz.index_of(n).has_value();
  if (inside) return ansatz;
  return ParameterRing(names);
}

int cmd_poly_gb(const Options& o) {
  require(o.in, "--in");
  const auto text = read_file(o.in);
  const auto ring = infer_ring(text, o.vars);
  const auto gens = parse_poly_list(text, ring);
  if (gens.empty()) throw std::invalid_argument(o.in + ": no polynomials");
  const auto order = parse_monomial_order(o.poly_order);
  auto gb = buchberger(gens, {order, 2'000'000, false});
  const int dim = krull_dimension(gb.basis, ring.size(), order);
  json basis = json::array();
  std::string human;
  for (const auto& p : gb.basis) {
    basis.push_back(to_string(p, ring));
    human += to_string(p, ring) + "\n";
  }
  human += "# " + std::to_string(gb.basis.size()) + " elements, unit ideal: " + (gb.is_unit() ? "yes" : "no") +
           ", Krull dimension " + std::to_string(dim) + "\n";
  emit(o,
       json{{"order", to_string(order)},
            {"variables", ring.names()},
            {"basis", basis},
            {"unit", gb.is_unit()},
            {"krull_dimension", dim},
            {"pairs_reduced", gb.stats.pairs_reduced}},
       human);
  return kExitOk;
}

int cmd_theorem(const Options& o) {
  check_arity(o.max_arity, "--max-arity");
  TheoremConfig config;
  if (!o.data_dir.empty()) config.data_dir = o.data_dir;
  config.max_arity = o.max_arity;
  config.full_48 = o.full_48;
  config.threads = o.threads;
  const auto report = run_theorem(config);
  const auto j = to_json(report, !o.no_timing);
  std::string human;
  for (const auto& f : report.fixtures)
    if (!f.ok()) human += "fixture " + f.file + ": " + (f.actual.empty() ? "missing" : "checksum mismatch") + "\n";
  for (const auto& c : report.checks) {
    human += std::string(c.passed ? "PASS" : "FAIL") + "  " + std::to_string(c.id) + " " + c.name;
    if (!o.no_timing) human += "  (" + std::to_string(static_cast<long long>(c.elapsed_ms)) + " ms)";
    human += "\n";
    if (!c.passed) human += "      " + c.details.dump() + "\n";
  }
  human += std::string("overall: ") + (report.passed() ? "pass" : "fail") + "\n";
  emit(o, j, human);
  return report.passed() ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"operadix: Groebner bases for shuffle operads and polynomial ideals"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Print JSON only");
    sub->add_option("--report", o.report, "Also write the JSON output to this file");
    sub->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  };
  auto add_presentation = [&](CLI::App* sub) {
    sub->add_option("--sig", o.sig, "Signature file");
    sub->add_option("--rel", o.rel, "Relations file");
    sub->add_option("--order", o.order, "Monomial order")->check(CLI::IsMember({"revpathlex", "pathlex"}));
  };

  auto* parse = app.add_subcommand("parse", "Parse and print identities and their shuffle images");
  add_presentation(parse);
  add_common(parse);
  parse->add_flag("--polarise", o.polarise, "Rewrite in the commutative/anticommutative basis");

  auto* comp = app.add_subcommand("complete", "Complete the relations to a rewriting system");
  add_presentation(comp);
  add_common(comp);
  comp->add_option("--max-arity", o.max_arity, "Arity bound");

  auto* dims = app.add_subcommand("dims", "Dimensions of the operad by arity");
  add_presentation(dims);
  add_common(dims);
  dims->add_option("--upto", o.upto, "Largest arity");
  dims->add_option("--in", o.in, "Rewriting system JSON from `complete`");

  auto* spoly = app.add_subcommand("spoly", "S-polynomials of the input relations and their normal forms");
  add_presentation(spoly);
  add_common(spoly);
  spoly->add_option("--max-arity", o.max_arity, "Largest arity of common multiples");

  auto* gb = app.add_subcommand("poly-gb", "Reduced Groebner basis of a polynomial list");
  add_common(gb);
  gb->add_option("--in", o.in, "Polynomial file, one per line");
  gb->add_option("--order", o.poly_order, "lex or grevlex")->check(CLI::IsMember({"lex", "grevlex"}));
  gb->add_option("--vars", o.vars, "Comma-separated variable order (default: inferred)");

  auto* thm = app.add_subcommand("theorem", "Run the full verification pipeline");
  add_common(thm);
  thm->add_option("--max-arity", o.max_arity, "Arity bound for the dimension tables");
  thm->add_flag("--full-48", o.full_48, "Also certify with all 48 degree-4 constraints");
  thm->add_option("--data-dir", o.data_dir, "Directory with the shipped data files");
  thm->add_flag("--no-timing", o.no_timing, "Report elapsed_ms as 0 for reproducible output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*parse) return cmd_parse(o);
    if (*comp) return cmd_complete(o);
    if (*dims) return cmd_dims(o);
    if (*spoly) return cmd_spoly(o);
    if (*gb) return cmd_poly_gb(o);
    if (*thm) return cmd_theorem(o);
  } catch (const ResourceLimitExceeded& e) {
    std::cerr << "operadix: resource limit: " << e.what() << "\n";
    return kExitFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "operadix: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "operadix: malformed JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "operadix: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
