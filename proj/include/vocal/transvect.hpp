#pragma once

#include "vocal/commutant.hpp"
#include "vocal/poly.hpp"
#include "vocal/state.hpp"
#include "vocal/weyl.hpp"

namespace vocal {

/// Symbol map gr D(V) ≅ Sym(V ⊕ V*): x'^K ∂^L ↦ x'^K x^L, termwise. The
/// polynomial lives in 2n variables ordered x_1..x_n, x'_1..x'_n.
MultiPoly sigma(const WeylElement& w);
WeylElement sigmaInv(const MultiPoly& p);

/// Linear isomorphism Sym(V ⊕ V*) → S(V)^{(0)}: x-variables to β's,
/// x'-variables to γ's, no derivatives.
State fmap(const MultiPoly& p, const FreeAlgebraSpec& alg);

/// Projection onto level zero: drops every monomial with a derivative.
State levelZeroProjection(const State& u);

/// ω *_k ν = p(ω ∘_k ν) on level-zero states, k >= -1.
State starK(const State& u, const State& v, long k);

/// k-th transvectant (1/k!) m ∘ Γ^k with
/// Γ = Σ_i ∂/∂x_i ⊗ ∂/∂x'_i - ∂/∂x'_i ⊗ ∂/∂x_i; k = 0 is multiplication.
MultiPoly transvectant(const MultiPoly& p, const MultiPoly& q, long k);

/// σ-transport of *_k to D(V): sigmaInv([σ(a), σ(b)]_{k+1}).
WeylElement starKWeyl(const WeylElement& a, const WeylElement& b, long k);

/// Strips E-coefficients with e_i *_1 reductions, contracts a maximal-degree
/// lattice term with ω_{-l} *_{d-1}, and returns c with c·(result) = 1.
Scalar starExtractUnit(const DiagonalAction& act, const WeylElement& w);

}  // namespace vocal
