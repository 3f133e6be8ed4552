#ifndef CONEFUN_EXACT_HPP
#define CONEFUN_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace conefun {

// Exact arithmetic layer.  All cone-level geometry is done over
// arbitrary-precision integers and rationals; floating point only enters in
// the analytic modules.

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row-major

Int gcd(const Int& a, const Int& b);

/// gcd of all entries (nonnegative), 0 for the zero vector.
Int content(const IntVec& v);

/// v / content(v); the zero vector is returned unchanged.
IntVec primitive(const IntVec& v);

bool is_zero(const IntVec& v);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec negate(const IntVec& v);
IntVec scale(const IntVec& v, const Int& c);
Int dot(const IntVec& a, const IntVec& b);

/// Determinant by fraction-free Gaussian elimination (Bareiss).
Int det(const IntMat& m);

/// Rank of an arbitrary integer matrix.
int rank(const IntMat& m);

/// Exact inverse of a square matrix with det = ±1.  Throws Degenerate
/// otherwise.
IntMat inverse_unimodular(const IntMat& m);

IntMat matmul(const IntMat& a, const IntMat& b);
IntVec matvec(const IntMat& a, const IntVec& v);
IntMat transpose(const IntMat& m);
IntMat identity_matrix(int n);

/// Generalized cross product of r-1 vectors in Z^r: the vector N with
/// det[u, v_1, ..., v_{r-1}] = u . N for every u.
IntVec cross_product(const std::vector<IntVec>& vs);

/// Solves x . v = gcd(v) by the extended Euclidean algorithm, v != 0.
IntVec solve_gcd_combination(const IntVec& v);

/// Smith invariant factors (nonzero ones, in divisibility order) of an
/// arbitrary integer matrix.
std::vector<Int> smith_invariants(IntMat m);

/// True iff the rows of m span a saturated sublattice of Z^n, i.e.
/// span_R(rows) ∩ Z^n = span_Z(rows).  Equivalent to all nonzero Smith
/// invariants being 1.
bool rows_saturated(const IntMat& m);

/// Completes the rows of m (k x n, saturated, full row rank) to a matrix in
/// GL_n(Z); the first k rows of the result are the rows of m.  Determinant
/// +1 whenever k < n (an added row absorbs the sign).  Returns std::nullopt
/// when no completion exists.
std::optional<IntMat> complete_to_unimodular(const IntMat& m);

/// Basis of the saturation of the row span: d x n matrix whose rows form a
/// Z-basis of span_R(rows) ∩ Z^n, d = rank(m).
IntMat saturation_basis(const IntMat& m);

/// Solves m * x = rhs exactly over the rationals.  m square nonsingular.
std::vector<Rat> solve_rational(const IntMat& m, const IntVec& rhs);

/// Narrowing to int64 with a range check; throws Error on overflow.
std::int64_t to_i64(const Int& v);
std::vector<std::int64_t> to_i64(const IntVec& v);

IntVec from_i64(const std::vector<std::int64_t>& v);

}  // namespace conefun

#endif  // CONEFUN_EXACT_HPP
