#pragma once

#include <cstdint>
#include <vector>

#include "matschur/scalars.hpp"

namespace matschur {

// Exact dense linear algebra over Q (mpq scalars), Z (mpz scalars) and F_p
// (int64 entries in [0,p) plus an explicit prime modulus).  Everything here
// is a pure function; Bareiss elimination keeps the Z/Q paths fraction-free.

Index rank_of(const MatZ& a);
Index rank_of(const MatQ& a);
Index rank_mod_p(const MatI& a, std::int64_t p);

Int determinant(const MatZ& a);
Rat determinant(const MatQ& a);
std::int64_t determinant_mod_p(const MatI& a, std::int64_t p);

// Columns form a basis of the right kernel; width = cols - rank.
MatQ kernel_basis(const MatQ& a);
MatI kernel_mod_p(const MatI& a, std::int64_t p);

// Column-style Hermite form: A * U = H with U unimodular, H lower-echelon
// by columns, pivots positive, entries right of a pivot reduced mod it.
struct HermiteResult {
  MatZ h;
  MatZ u;
};
HermiteResult hermite_normal_form(const MatZ& a);

// Basis of {x in Z^cols : Ax = 0} spanning a saturated lattice (the columns
// of the Hermite transform sitting over zero columns of H).
MatZ integer_kernel_saturated(const MatZ& a);

std::vector<Int> smith_elementary_divisors(const MatZ& a);

// True when the lattice spanned by the columns is a direct summand of Z^rows.
bool is_saturated_lattice(const MatZ& columns);

// Dimension of the linear span of the given same-shape matrices; with
// closed_under_product, dimension of the unital algebra they generate.
Index span_dimension(const std::vector<MatQ>& gens, bool closed_under_product);

// Dimension of {X : Xg = gX for all g}.
Index centralizer_dimension(const std::vector<MatQ>& ops, Index d);

MatZ clear_denominators(const MatQ& a);  // row-wise lcm scaling, rank-preserving

}  // namespace matschur
