#pragma once

#include "vocal/scalar.hpp"

#include <vector>

namespace vocal {

using ScalarVec = std::vector<Scalar>;
using ScalarMat = std::vector<ScalarVec>;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

/// m x n matrix over Q(sqrt 6); row i holds the diagonal entries of ρ(ξ^i).
struct ActionMatrix {
    ScalarMat rows;
    int rowCount() const { return static_cast<int>(rows.size()); }
    int cols() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
};

Scalar dot(const ScalarVec& a, const ScalarVec& b);

/// In-place reduced row echelon form; returns the rank.
int rowReduce(ScalarMat& m);

int rankOf(ScalarMat m);

/// Kernel basis of a matrix over Q(sqrt 6), one vector per free column, in
/// ascending free-column order.
std::vector<ScalarVec> kernelBasis(const ScalarMat& m);

/// Kernel of the action over the field, Gram-Schmidt-orthogonalized (but not
/// normalized) against the standard symmetric pairing.
std::vector<ScalarVec> fieldKernelBasis(const ActionMatrix& a);

/// Z-basis of an integer lattice in canonical (row Hermite normal) form.
struct LatticeBasis {
    IntMat vectors;
    int rank() const { return static_cast<int>(vectors.size()); }
};

/// Canonical row-style Hermite normal form: positive pivots, entries above a
/// pivot reduced into [0, pivot), zero rows dropped.
IntMat hermiteNormalForm(IntMat rows);

/// Z-basis of {x in Z^n : Mx = 0} via unimodular row reduction of [M^T | I].
IntMat integerKernel(const IntMat& m);

/// Basis of the lattice A⊥ ∩ Z^n. Each Scalar row contributes its rational
/// and sqrt-6 components as two rational constraints, denominators cleared.
LatticeBasis integerKernelBasis(const ActionMatrix& a);

/// Reduced row echelon solution of A x = rhs with free variables set to zero
/// (pivots chosen leftmost), or nullopt when inconsistent.
std::optional<ScalarVec> solveAffine(ScalarMat a, ScalarVec rhs);

}  // namespace vocal
