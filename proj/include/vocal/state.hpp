#pragma once

#include "vocal/algebra.hpp"
#include "vocal/scalar.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace vocal {

/// One normally ordered factor ∂^deriv a_gen.
struct Factor {
    int gen = 0;
    int deriv = 0;
    auto operator<=>(const Factor&) const = default;
};

/// Sorted factor sequence; identified with the right-nested iterated Wick
/// product :∂^{k1}a1 (:∂^{k2}a2 (...):):, equivalently the creation-mode word
/// a1(-k1-1)...ar(-kr-1) applied to the vacuum and scaled by Π ki!.
using Monomial = std::vector<Factor>;

/// Sort a raw factor sequence into canonical order, tracking the Koszul sign.
/// Returns nullopt when a repeated odd factor annihilates the term.
std::optional<std::pair<Monomial, int>> canonicalizeFactors(const FreeAlgebraSpec& alg,
                                                            Monomial factors);

/// A vertex operator: exact Scalar-linear combination of canonical monomials.
/// Immutable value semantics; the referenced algebra must outlive the state.
class State {
public:
    State() = default;
    explicit State(const FreeAlgebraSpec& alg) : alg_(&alg) {}

    static State vacuum(const FreeAlgebraSpec& alg);
    static State generator(const FreeAlgebraSpec& alg, int gen, int deriv = 0);

    const FreeAlgebraSpec* algebra() const { return alg_; }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }

    bool isZero() const { return terms_.empty(); }
    /// True when the state is c·vacuum (including zero); returns c.
    std::optional<Scalar> scalarPart() const;

    void addTerm(const Monomial& mono, const Scalar& coeff);

    State operator-() const;
    State& operator+=(const State& o);
    State& operator-=(const State& o);
    friend State operator+(State a, const State& b) { return a += b; }
    friend State operator-(State a, const State& b) { return a -= b; }
    friend State operator*(const Scalar& c, const State& s);

    bool operator==(const State& o) const;
    bool operator!=(const State& o) const { return !(*this == o); }

    /// Homogeneous parity (0 even, 1 odd); nullopt when mixed. Zero is even.
    std::optional<int> parity() const;

    /// Largest 2·(α* weight) over the terms; 0 for the zero state.
    int maxTwiceWeightStar() const;
    /// Largest derivative order appearing in any factor; -1 for scalars.
    int maxDeriv() const;

private:
    const FreeAlgebraSpec* alg_ = nullptr;
    std::map<Monomial, Scalar> terms_;
};

/// Canonical state from raw (factor sequence, coefficient) data. Reordering
/// introduces only the Koszul sign; repeated odd factors vanish.
State makeState(const FreeAlgebraSpec& alg,
                const std::vector<std::pair<Monomial, Scalar>>& rawTerms);

/// The translation operator ∂ (Leibniz over Wick factors).
State derive(const State& u);
State deriveN(const State& u, int k);

int parityOf(const FreeAlgebraSpec& alg, const Monomial& m);
int twiceWeightStar(const FreeAlgebraSpec& alg, const Monomial& m);

enum class Grading { Weight, BgCharge, BcCharge, Degree, Level };

/// Common grade of all monomials, or nullopt if inhomogeneous. For Weight,
/// alpha lists one Scalar per βγ pair followed by one per bc pair (β/b get
/// α_i, γ/c get 1-α_i, Heisenberg currents weight 1); ∂ raises every grade
/// shown here by 0 except Weight and Level (+k per derivative).
std::optional<Scalar> grading(const State& u, Grading which,
                              std::span<const Scalar> alpha = {});

}  // namespace vocal
