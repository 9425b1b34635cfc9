#include "operadix/report.hpp"

namespace operadix {

using nlohmann::json;

json to_json(const TheoremReport& report, bool with_timing) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"id", c.id},
                      {"name", c.name},
                      {"status", c.passed ? "pass" : "fail"},
                      {"details", c.details},
                      {"elapsed_ms", with_timing ? c.elapsed_ms : 0.0}});
  }
  json fixtures = json::array();
  for (const auto& f : report.fixtures)
    fixtures.push_back({{"file", f.file}, {"status", f.ok() ? "ok" : f.actual.empty() ? "missing" : "mismatch"}});
  return {{"checks", checks},
          {"fixtures", {{"status", report.fixtures_ok() ? "ok" : "fail"}, {"files", fixtures}}},
          {"overall", report.passed() ? "pass" : "fail"}};
}

json to_json(const RewriteSystem<Rational>& sys) {
  const auto& names = sys.signature.names();
  json gens = json::array();
  for (const auto& g : sys.signature.generators()) {
    gens.push_back({{"name", g.name},
                    {"operation", g.operation},
                    {"reversed", g.reversed},
                    {"symmetry", to_string(g.symmetry)},
                    {"swap_partner", g.swap_partner},
                    {"swap_sign", g.swap_sign}});
  }
  json rules = json::array();
  for (const auto& r : sys.rules) {
    json tail = json::array();
    for (const auto& [t, c] : r.tail.terms()) tail.push_back({to_text(t, names), to_string(c)});
    rules.push_back({{"lead", to_text(r.lead, names)}, {"tail", tail}});
  }
  return {{"order", to_string(sys.order.kind)},
          {"generators", gens},
          {"rules", rules},
          {"complete_up_to", sys.complete_up_to},
          {"quadratic_certified", sys.quadratic_certified}};
}

RewriteSystem<Rational> rewrite_system_from_json(const json& j) {
  std::vector<ShuffleGenerator> gens;
  for (const auto& g : j.at("generators")) {
    ShuffleGenerator sg;
    sg.name = g.at("name").get<std::string>();
    sg.arity = 2;
    sg.operation = g.value("operation", -1);
    sg.reversed = g.value("reversed", false);
    sg.symmetry = parse_symmetry(g.value("symmetry", std::string("none")));
    sg.swap_partner = g.value("swap_partner", -1);
    sg.swap_sign = g.value("swap_sign", 1);
    gens.push_back(std::move(sg));
  }
  RewriteSystem<Rational> sys;
  sys.signature = ShuffleSignature(std::move(gens));
  sys.order.kind = parse_order_kind(j.at("order").get<std::string>());
  const auto& names = sys.signature.names();
  for (const auto& r : j.at("rules")) {
    RewriteRule<Rational> rule{parse_tree(r.at("lead").get<std::string>(), names), {}};
    for (const auto& term : r.at("tail"))
      rule.tail.add(parse_tree(term.at(0).get<std::string>(), names), parse_rational(term.at(1).get<std::string>()));
    sys.rules.push_back(std::move(rule));
  }
  sys.complete_up_to = j.value("complete_up_to", 0);
  sys.quadratic_certified = j.value("quadratic_certified", false);
  return sys;
}

}  // namespace operadix
