#pragma once

#include "operadix/poly.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace operadix {

/// Raised when a Gröbner computation exceeds its configured pair budget.
class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroebnerOptions {
  MonomialOrder order = MonomialOrder::grevlex;
  /// Upper bound on S-pairs actually reduced.
  std::size_t max_pairs = 2'000'000;
  /// Return {1} as soon as a nonzero constant enters the basis.
  bool stop_on_unit = true;
};

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t pairs_discarded = 0;  // by the product and chain criteria
  std::size_t max_basis_size = 0;
};

struct GroebnerResult {
  /// Reduced Gröbner basis: monic, sorted by descending leading monomial.
  std::vector<MultiPoly> basis;
  MonomialOrder order = MonomialOrder::grevlex;
  GroebnerStats stats;

  bool is_unit() const { return basis.size() == 1 && basis.front().is_constant() && !basis.front().is_zero(); }
  bool is_zero_ideal() const { return basis.empty(); }
};

/// Buchberger's algorithm with the normal selection strategy and the
/// Gebauer–Möller installation of both Buchberger criteria. Internally works
/// with primitive integer polynomials; the result is the reduced basis over Q.
GroebnerResult buchberger(std::span<const MultiPoly> generators, const GroebnerOptions& options = {});

/// Multivariate division over Q: the remainder of `f` modulo `divisors`.
/// No monomial of the result is divisible by a leading monomial of a divisor,
/// and f - result lies in the ideal they generate.
MultiPoly poly_reduce(const MultiPoly& f, std::span<const MultiPoly> divisors, MonomialOrder order);

/// True iff the ideal is the whole ring; the reduced basis is the certificate.
struct UnitIdealCertificate {
  bool unit = false;
  GroebnerResult groebner;
};
UnitIdealCertificate is_unit_ideal(std::span<const MultiPoly> generators,
                                   MonomialOrder order = MonomialOrder::grevlex,
                                   std::size_t max_pairs = GroebnerOptions{}.max_pairs);

/// Dimension of R/I from a Gröbner basis of I: the size of a largest set of
/// variables containing the support of no leading monomial.
/// -1 for the unit ideal, `variable_count` for the zero ideal.
int krull_dimension(std::span<const MultiPoly> groebner_basis, std::size_t variable_count, MonomialOrder order);

/// A maximal independent variable set realising krull_dimension (empty for the unit ideal).
std::vector<std::size_t> maximal_independent_set(std::span<const MultiPoly> groebner_basis,
                                                 std::size_t variable_count, MonomialOrder order);

}  // namespace operadix
