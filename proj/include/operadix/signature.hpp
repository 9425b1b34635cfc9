#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace operadix {

enum class Symmetry { none, commutative, anticommutative };

std::string to_string(Symmetry s);
Symmetry parse_symmetry(std::string_view text);

struct Operation {
  std::string symbol;
  int arity = 2;
  Symmetry symmetry = Symmetry::none;
  bool operator==(const Operation&) const = default;
};

/// Structure operations of a variety, in declaration order. Declaration order
/// is the generator ranking: the first operation is the largest.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Operation> ops);

  const std::vector<Operation>& operations() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  const Operation& operation(std::size_t i) const { return ops_.at(i); }
  std::optional<std::size_t> find(std::string_view symbol) const;
  /// 1-based rank with 1 the largest.
  int rank(std::size_t i) const { return static_cast<int>(i) + 1; }

  bool operator==(const Signature&) const = default;

 private:
  std::vector<Operation> ops_;
};

/// Parses `op <symbol> arity <k> symmetry <none|comm|anticomm>` lines; `#` comments.
Signature parse_signature(std::string_view text);
std::string to_text(const Signature& sig);

/// Generator of the free shuffle operad.
struct ShuffleGenerator {
  std::string name;
  int arity = 2;
  /// Operation of the originating Signature, or -1 for a bare generator.
  int operation = -1;
  /// For a symmetry-free binary operation x*y: the second generator encodes y*x.
  bool reversed = false;
  Symmetry symmetry = Symmetry::none;
  /// Generator obtained by swapping the two arguments, with `swap_sign`.
  /// -1 when the permutation action is unknown (bare generators).
  int swap_partner = -1;
  int swap_sign = 1;
};

/// Generators of the shuffle operad obtained by forgetting the symmetric
/// group action. A symmetry-free binary operation `s` yields two generators,
/// `s` (x1 s x2) and `s'` (x2 s x1); a (anti)commutative one yields one.
/// Generator index order is the ranking, index 0 largest.
class ShuffleSignature {
 public:
  ShuffleSignature() = default;
  explicit ShuffleSignature(std::vector<ShuffleGenerator> gens);
  static ShuffleSignature from(const Signature& sig);
  /// Binary generators without symmetric-group information.
  static ShuffleSignature bare(std::vector<std::string> names);

  std::size_t size() const { return gens_.size(); }
  const ShuffleGenerator& generator(std::size_t g) const { return gens_.at(g); }
  const std::vector<ShuffleGenerator>& generators() const { return gens_; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;

 private:
  std::vector<ShuffleGenerator> gens_;
  std::vector<std::string> names_;
};

}  // namespace operadix
