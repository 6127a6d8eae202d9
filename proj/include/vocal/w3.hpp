#pragma once

#include "vocal/ope.hpp"
#include "vocal/poly.hpp"
#include "vocal/state.hpp"

#include <span>
#include <utility>

namespace vocal {

/// The Zamolodchikov W3 algebra at c = -2, realized three ways inside free
/// field algebras. All coefficients live in Q(sqrt 6).

/// βγ realization embedded in pair `pair`:
///   L_S = 1/2 :β²γ²: - :(∂β)γ: + :β(∂γ):
///   W_S = (√6/9):β³γ³: - (√6/2):β(∂β)γ²: + (√6/2):β²γ(∂γ):
///         + (√6/6):(∂²β)γ: - (2√6/3):(∂β)(∂γ): + (√6/6):β(∂²γ):
std::pair<State, State> buildLSWS(const FreeAlgebraSpec& alg, int pair);

/// Heisenberg realization on a level-1 current:
///   L_H = 1/2 :j²: + 1/2 ∂j
///   W_H = (2/(3√6)):j³: + (1/√6):j∂j: + (1/(6√6))∂²j
/// The ∂j coefficient 1/2 is forced by the c = -2 OPE and confirmed exactly
/// by the boson-fermion correspondence (L_E = 1/2:q²: + 1/2 ∂q for q = :bc:).
std::pair<State, State> buildHeisLW(const FreeAlgebraSpec& alg, int heisIndex);

/// bc realization: L_E = :(∂b)c:, W_E = (1/√6)(:(∂²b)c: - :(∂b)(∂c):).
std::pair<State, State> buildBcLW(const FreeAlgebraSpec& alg, int bcPair);

/// Exact OPE check of the full W3 relations at c = -2:
///   L L ~ -(z-w)^{-4} + 2L (z-w)^{-2} + ∂L (z-w)^{-1}
///   L W ~ 3W (z-w)^{-2} + ∂W (z-w)^{-1}
///   W W ~ -2/3 (z-w)^{-6} + 2L (z-w)^{-4} + ∂L (z-w)^{-3}
///         + (8/3 :LL: - 1/2 ∂²L)(z-w)^{-2} + (4/3 ∂:LL: - 1/3 ∂³L)(z-w)^{-1}
bool verifyW3OPE(const State& L, const State& W);

struct HighestWeightData {
    Scalar t;
    Scalar w;
    bool verified = false;
};

/// Builds v^d (β^{-d}, vacuum, or γ^d) in a one-pair βγ algebra and checks it
/// is a highest weight vector for (L_S, W_S, θ) with eigenvalues
/// (t, w) = (α(α-1)/2, α(α-1)(2α-1)/(3√6)), α = d for d <= 0 and d+1 for d > 0.
HighestWeightData highestWeightData(const FreeAlgebraSpec& alg, long d);

/// Exact polynomial identity w² - (2/27) l² (8l + 1) = 0 in C[e].
bool zhuIdealCheck(const MultiPoly& l, const MultiPoly& w);

/// The conformal vector L^α: Σ (α_i-1):∂β_i γ_i: + α_i :β_i ∂γ_i: over βγ
/// pairs, the analogous fermionic sum over bc pairs, and (1/2k):j²: per
/// Heisenberg current. alpha lists βγ entries then bc entries.
State virasoroAlpha(const FreeAlgebraSpec& alg, std::span<const Scalar> alpha);

/// Central charge of virasoroAlpha: Σ_bg (12α²-12α+2) - Σ_bc (12α²-12α+2) + #heis.
Scalar virasoroCentralCharge(const FreeAlgebraSpec& alg, std::span<const Scalar> alpha);

}  // namespace vocal
