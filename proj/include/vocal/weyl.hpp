#pragma once

#include "vocal/linalg.hpp"
#include "vocal/scalar.hpp"

#include <map>
#include <utility>
#include <vector>

namespace vocal {

/// Element of the Weyl algebra D(V) in normal form: every term x'^K ∂^L with
/// all position factors left of all derivatives. Carries the Bernstein
/// filtration degree |K| + |L|.
class WeylElement {
public:
    using Key = std::pair<std::vector<int>, std::vector<int>>;

    WeylElement() = default;
    explicit WeylElement(int n) : n_(n) {}

    static WeylElement unit(int n);
    static WeylElement position(int n, int j);    // x'_j
    static WeylElement derivative(int n, int j);  // ∂/∂x'_j
    static WeylElement euler(int n, int j);       // e_j = x'_j ∂/∂x'_j

    int vars() const { return n_; }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    /// True when the element is c·1 (including zero); returns c.
    std::optional<Scalar> scalarPart() const;

    int bernsteinDegree() const;

    void addTerm(const std::vector<int>& x, const std::vector<int>& d, const Scalar& coeff);

    WeylElement operator-() const;
    WeylElement& operator+=(const WeylElement& o);
    WeylElement& operator-=(const WeylElement& o);
    friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
    friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
    friend WeylElement operator*(const Scalar& c, const WeylElement& w);
    /// Associative normal-form product via iterated [∂_i, x'_j] = δ_ij.
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b);

    bool operator==(const WeylElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }

private:
    int n_ = 0;
    std::map<Key, Scalar> terms_;
};

WeylElement weylProduct(const WeylElement& a, const WeylElement& b);
WeylElement weylCommutator(const WeylElement& a, const WeylElement& b);

/// τ(ξ^i) = -Σ_j a^i_j e_j, the linear vector field of action row i.
WeylElement buildTau(const ActionMatrix& act, int i);

/// True iff [τ(ξ^i), ω] = 0 for every row.
bool classicalInvariant(const WeylElement& w, const ActionMatrix& act);

/// ψ^k = Σ_j s^k_j e_j over a basis of L⊥ ∩ A⊥ (field kernel of the action
/// matrix stacked with the integer lattice basis).
std::vector<WeylElement> buildPsiClassical(const ActionMatrix& act);

/// Classical ω_l = Π v_j^{l_j} with v^d = (∂_j)^{-d}, 1, or (x'_j)^d.
WeylElement classicalOmega(int n, const std::vector<long>& l);

}  // namespace vocal
