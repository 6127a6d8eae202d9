#pragma once

#include "vocal/linalg.hpp"
#include "vocal/ope.hpp"
#include "vocal/state.hpp"

#include <string>
#include <variant>
#include <vector>

namespace vocal {

/// A faithful diagonal abelian action on a pure βγ system: m x n matrix of
/// full row rank whose rows are the diagonal weights ρ(ξ^i).
struct DiagonalAction {
    FreeAlgebraSpec algebra;
    ActionMatrix matrix;

    explicit DiagonalAction(ActionMatrix m);

    int n() const { return matrix.cols(); }
    int m() const { return matrix.rowCount(); }
};

/// θ^{ξ_i} = -Σ_j a^i_j :γ^j β^j:, the current implementing row i.
State buildTheta(const DiagonalAction& act, int i);

/// φ-current -Σ_j b_j :γ^j β^j: for b in the field kernel of the action.
State buildPhi(const DiagonalAction& act, const ScalarVec& b);

/// ω_l = :v^{l_1}_1 ... v^{l_n}_n: with v^d = β^{-d}, 1, or γ^d per factor.
State buildOmega(const FreeAlgebraSpec& alg, const std::vector<long>& l);
State buildOmega(const DiagonalAction& act, const std::vector<long>& l);

/// True iff u commutes with every θ^{ξ_i}.
bool isInvariant(const State& u, const DiagonalAction& act);

struct NamedState {
    std::string name;
    State state;
};

/// Finite generating set of the commutant: φ-currents for the orthogonalized
/// field kernel, per-factor (L^j, W^j), and ω_{±l} over the lattice basis.
std::vector<NamedState> generatorSet(const DiagonalAction& act);

struct LatticeContraction {
    long d;
    Scalar coeff;
};

/// Closed form for ω_l ∘_d ω_{l'} = coeff · ω_{l+l'} with d = -1 + Σ d_j.
LatticeContraction latticeContraction(const std::vector<long>& l, const std::vector<long>& lp);

using ChargeConstraint = std::variant<long, std::vector<long>>;

/// Exact basis (reduced echelon over Q(sqrt 6)) of the weight-w commutant
/// component at fixed total βγ-charge or per-factor charge vector. w is the
/// internal α* weight (all generators weight 1/2), in (1/2)Z≥0.
std::vector<State> gradedCommutantBasis(const DiagonalAction& act, const Rat& w,
                                        const ChargeConstraint& charge);

/// For the rank-one action ρ=(1): the invariant :θ^n: + ω_n with a correction
/// of degree <= 2n-2, chosen deterministically (low-degree monomials pivot
/// first, free coordinates zero).
State quantumCorrect(const DiagonalAction& act, int nPower);

struct UnitExtraction {
    std::vector<long> l;
    long d;
    Scalar c;
};

/// For u = Σ c_l ω_l: picks l of maximal degree (lex-largest tie-break) and
/// returns c with c·(ω_{-l} ∘_{d-1} u) = 1 exactly, verified by the engine.
UnitExtraction extractUnit(const DiagonalAction& act, const State& u);

/// Conformal structure on B' = W ⊗ Φ:
///   L = Σ_j L^j + Σ_i ( -(1/(2 q_i)) :φ^i φ^i: + λ_i ∂φ^i ),  q_i = <b^i, b^i>,
/// of central charge -2n + Σ_i (1 + 12 λ_i² q_i).
State conformalBPrime(const DiagonalAction& act, const ScalarVec& lambda);

Scalar conformalBPrimeCentralCharge(const DiagonalAction& act, const ScalarVec& lambda);

/// All monomials of a given doubled α*-weight, in canonical (ascending)
/// order; the charge overload filters by βγ-charge. Exposed for the graded
/// solver's independent cross-check and the property-test generators.
std::vector<Monomial> enumerateBasis(const FreeAlgebraSpec& alg, int twiceWeight);
std::vector<Monomial> enumerateBasis(const FreeAlgebraSpec& alg, int twiceWeight,
                                     const ChargeConstraint& charge);

}  // namespace vocal
