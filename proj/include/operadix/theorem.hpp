#pragma once

#include "operadix/fixtures.hpp"
#include "operadix/rewriting.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace operadix {

struct TheoremConfig {
  std::filesystem::path data_dir = default_data_dir();
  /// Arity bound for the Lie certification and the generic dimension table.
  int max_arity = 6;
  /// Also certify the unit ideal with all 48 degree-4 constraints.
  bool full_48 = false;
  unsigned threads = 1;
  std::size_t max_pairs = 2'000'000;
};

struct CheckRecord {
  int id = 0;
  std::string name;
  bool passed = false;
  nlohmann::json details;
  double elapsed_ms = 0;
};

struct TheoremReport {
  /// Checksums of the shipped data files, verified before any check runs.
  std::vector<ChecksumEntry> fixtures;
  std::vector<CheckRecord> checks;

  bool fixtures_ok() const;
  bool passed() const;
};

/// Runs the nine checks in order and records each one.
TheoremReport run_theorem(const TheoremConfig& config = {});

/// Presentation shipped in the data directory as <name>.sig / <name>.rel,
/// turned into shuffle relations (full orbits).
std::vector<OperadElement<Rational>> shipped_relations(const std::filesystem::path& data_dir, const std::string& name,
                                                       ShuffleSignature& shuffle_sig);

/// The six-term arity-4 element left by the commutative Jacobi-shaped identity.
OperadElement<Rational> mock_lie_obstruction(const ShuffleSignature& shuffle_sig, const OrderSpec& spec);

/// `computed` equals `expected` as a multiset up to a sign per element.
/// Unmatched entries are returned in the two lists.
struct SignMatch {
  bool matched = false;
  std::vector<std::size_t> unmatched_computed, unmatched_expected;
};
SignMatch match_up_to_sign(const std::vector<MultiPoly>& computed, const std::vector<MultiPoly>& expected);

/// Nonzero rational c with a = c b, if any.
std::optional<Rational> scalar_ratio(const MultiPoly& a, const MultiPoly& b);

}  // namespace operadix
