#pragma once

// Exact integer and rational linear algebra on small dense matrices.
// Matrices are row-major lists of rows. Lattice coordinates fit in int64;
// every arithmetic step that could overflow is checked. Anything that can grow
// (determinants, eliminations) goes through GMP.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace fano_toric {

using Int = std::int64_t;
using IntVector = std::vector<Int>;
using IntMatrix = std::vector<IntVector>;
using RationalMatrix = std::vector<std::vector<mpq_class>>;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int to_int(const mpz_class& z);

Int dot(const IntVector& a, const IntVector& b);
IntVector add(const IntVector& a, const IntVector& b);
IntVector subtract(const IntVector& a, const IntVector& b);
IntVector scale(const IntVector& a, Int s);
bool is_zero(const IntVector& v);

Int gcd_of(const IntVector& v);
// Divides out the content; the zero vector is returned unchanged.
IntVector make_primitive(IntVector v);

std::size_t rank(const IntMatrix& rows);
mpz_class determinant(const IntMatrix& square);

// Echelon (Hermite) basis of the lattice spanned by the rows: positive pivots,
// entries above each pivot reduced into [0, pivot). Zero rows are dropped.
IntMatrix hermite_row_basis(IntMatrix rows);

// Integer coefficients c with c * basis == v, or nullopt when v is not in the
// lattice. `basis` must be the output of hermite_row_basis.
std::optional<IntVector> lattice_coordinates(const IntMatrix& basis, IntVector v);

// Reduces v modulo the row lattice of an echelon basis into a canonical coset
// representative.
IntVector reduce_modulo(const IntMatrix& basis, IntVector v);

// Solves X * M = Y for M over the rationals, X square and invertible.
std::optional<RationalMatrix> solve_square(const IntMatrix& x, const IntMatrix& y);

// Integer vectors spanning {x : rows * x = 0} over Q, one per free column.
IntMatrix kernel_basis(const IntMatrix& rows, std::size_t ncols);

// Indices of a maximal linearly independent subset of rows, chosen greedily in order.
std::vector<std::size_t> independent_rows(const IntMatrix& rows);

std::string format_vector(const IntVector& v);

}  // namespace fano_toric
