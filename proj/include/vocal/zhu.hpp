#pragma once

#include "vocal/commutant.hpp"
#include "vocal/poly.hpp"
#include "vocal/state.hpp"
#include "vocal/weyl.hpp"

#include <vector>

namespace vocal {

/// Zhu image of a state in a pure βγ algebra, computed by the strong-
/// generation recursion: peel the leading factor g = ∂^k a of each monomial,
///   [:g v:] = [g]*[v] - Σ_{j>=1} binom(wt g, j) [g ∘_{j-1} v],
/// with [∂a] = -wt(a)·[a] iterated (the sign reproduces
/// π_Zh(:γβ:) = x'∂ + 1 - α exactly), [γ_j] = x'_j and [β_j] = ∂_j.
/// alpha assigns β_j the weight α_j and γ_j the weight 1-α_j.
WeylElement zhuImage(const State& u, const std::vector<Scalar>& alpha);

/// Conversion between diagonal Weyl elements and polynomials in the Euler
/// operators e_j, via x'^k ∂^k = e(e-1)...(e-k+1) per variable.
MultiPoly weylToEulerPoly(const WeylElement& w);
WeylElement eulerPolyToWeyl(const MultiPoly& p);

struct CokernelProbe {
    int codim = 0;
    std::vector<WeylElement> representatives;
    bool thetaAugmentedSpans = false;
};

/// Spans the degree-<=D part of the subalgebra of E = C[e_1..e_n] generated
/// by the E-valued Zhu images of the commutant generators (L^j, W^j, φ^i),
/// and reports the codimension inside E_{<=D}, echelon representatives of the
/// cokernel, and whether adjoining the images of the θ-currents recovers all
/// of E_{<=D}.
CokernelProbe cokernelProbe(const DiagonalAction& act, const std::vector<Scalar>& alpha, int D);

}  // namespace vocal
