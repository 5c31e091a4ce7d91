/*
 * (C) Copyright 2026 revtri developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef REVTRI_SPACE_HPP
#define REVTRI_SPACE_HPP

#include <utility>
#include <vector>

#include "revtri/types.hpp"

namespace revtri {

/// Inner product <x,y> = sum_j x_j * conj(y_j); conjugate-linear in the
/// second argument.  Throws on dimension mismatch.
Complex inner(const Vec& x, const Vec& y);

/// Euclidean norm sqrt(Re<x,x>).
double norm(const Vec& x);

/// True iff | ||e|| - 1 | <= tol.
bool validate_unit(const Vec& e, double tol);

/// True iff |<e_i,e_j> - delta_ij| <= tol for every pair.  A family larger
/// than the space dimension can never be orthonormal and yields false.
bool validate_orthonormal(const std::vector<Vec>& family, double tol);

/// Modified Gram-Schmidt with one re-orthogonalization pass.  Throws
/// ArgumentError when a vector's residual drops below 1e-12 times its input
/// norm (rank deficiency).
std::vector<Vec> gram_schmidt(const std::vector<Vec>& vectors);

/// Evaluates, independently, the two equivalent membership tests for the
/// closed ball with diameter [z, Z]:
///   first:  Re<Z - x, x - z> >= 0
///   second: ||x - (Z + z)/2|| <= ||Z - z||/2
/// The two components agree in exact arithmetic.
std::pair<bool, bool> ball_quadrant_equiv(const Vec& x, const Vec& z, const Vec& Z);

/// x / ||x||.  Throws when ||x|| == 0.
Vec normalize(const Vec& x);

}  // namespace revtri

#endif  // REVTRI_SPACE_HPP
