#pragma once

#include "operadix/expr.hpp"

namespace operadix {

/// The commutative `.` (x.y = xy + yx) and anticommutative `^`
/// (x^y = xy - yx) operations, declared in that order so `.` ranks first.
Signature polarised_signature();

/// Rewrites an expression over one symmetry-free binary product in the
/// polarised basis, using xy = 1/2 (x.y + x^y).
MultilinearExpr polarise(const MultilinearExpr& e);

/// Inverse of polarise: x.y -> xy + yx and x^y -> xy - yx. The input must use
/// one commutative and one anticommutative binary operation.
MultilinearExpr depolarise(const MultilinearExpr& e, const std::string& product_symbol = "*");

}  // namespace operadix
