#include "vocal/state.hpp"

#include <algorithm>
#include <stdexcept>

namespace vocal {

std::optional<std::pair<Monomial, int>> canonicalizeFactors(const FreeAlgebraSpec& alg,
                                                            Monomial factors) {
    // Insertion sort, counting transpositions of odd pairs. Creation modes of
    // free fields commute exactly up to the Koszul sign, so this is lossless.
    int sign = 1;
    for (size_t i = 1; i < factors.size(); ++i) {
        Factor f = factors[i];
        size_t j = i;
        while (j > 0 && f < factors[j - 1]) {
            if (alg.odd(f.gen) && alg.odd(factors[j - 1].gen)) sign = -sign;
            factors[j] = factors[j - 1];
            --j;
        }
        factors[j] = f;
    }
    for (size_t i = 1; i < factors.size(); ++i)
        if (factors[i] == factors[i - 1] && alg.odd(factors[i].gen)) return std::nullopt;
    return std::make_pair(std::move(factors), sign);
}

State State::vacuum(const FreeAlgebraSpec& alg) {
    State s(alg);
    s.addTerm({}, Scalar(1));
    return s;
}

State State::generator(const FreeAlgebraSpec& alg, int gen, int deriv) {
    if (gen < 0 || gen >= alg.generatorCount()) throw std::out_of_range("generator index");
    if (deriv < 0) throw std::invalid_argument("negative derivative order");
    State s(alg);
    s.addTerm({Factor{gen, deriv}}, Scalar(1));
    return s;
}

std::optional<Scalar> State::scalarPart() const {
    if (terms_.empty()) return Scalar(0);
    if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
    return std::nullopt;
}

void State::addTerm(const Monomial& mono, const Scalar& coeff) {
    if (coeff.isZero()) return;
    auto [it, inserted] = terms_.try_emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.isZero()) terms_.erase(it);
    }
}

State State::operator-() const {
    State r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

State& State::operator+=(const State& o) {
    if (!alg_) *this = State(*o.alg_);
    if (o.alg_ && *alg_ != *o.alg_) throw std::invalid_argument("mismatched algebras");
    for (const auto& [m, c] : o.terms_) addTerm(m, c);
    return *this;
}

State& State::operator-=(const State& o) {
    if (!alg_) *this = State(*o.alg_);
    if (o.alg_ && *alg_ != *o.alg_) throw std::invalid_argument("mismatched algebras");
    for (const auto& [m, c] : o.terms_) addTerm(m, -c);
    return *this;
}

State operator*(const Scalar& c, const State& s) {
    State r(*s.alg_);
    if (c.isZero()) return r;
    for (const auto& [m, coeff] : s.terms_) r.terms_.emplace(m, c * coeff);
    return r;
}

bool State::operator==(const State& o) const {
    if (alg_ && o.alg_ && *alg_ != *o.alg_) return false;
    return terms_ == o.terms_;
}

int parityOf(const FreeAlgebraSpec& alg, const Monomial& m) {
    int p = 0;
    for (const Factor& f : m) p ^= alg.odd(f.gen) ? 1 : 0;
    return p;
}

int twiceWeightStar(const FreeAlgebraSpec& alg, const Monomial& m) {
    int tw = 0;
    for (const Factor& f : m) tw += alg.twiceWeightStar(f.gen) + 2 * f.deriv;
    return tw;
}

std::optional<int> State::parity() const {
    std::optional<int> p;
    for (const auto& [m, c] : terms_) {
        int pm = parityOf(*alg_, m);
        if (p && *p != pm) return std::nullopt;
        p = pm;
    }
    return p ? p : std::optional<int>(0);
}

int State::maxTwiceWeightStar() const {
    int tw = 0;
    for (const auto& [m, c] : terms_) tw = std::max(tw, twiceWeightStar(*alg_, m));
    return tw;
}

int State::maxDeriv() const {
    int k = -1;
    for (const auto& [m, c] : terms_)
        for (const Factor& f : m) k = std::max(k, f.deriv);
    return k;
}

State makeState(const FreeAlgebraSpec& alg,
                const std::vector<std::pair<Monomial, Scalar>>& rawTerms) {
    State s(alg);
    for (const auto& [factors, coeff] : rawTerms) {
        for (const Factor& f : factors) {
            if (f.gen < 0 || f.gen >= alg.generatorCount())
                throw std::out_of_range("generator index in raw term");
            if (f.deriv < 0) throw std::invalid_argument("negative derivative order");
        }
        auto canon = canonicalizeFactors(alg, factors);
        if (!canon) continue;
        s.addTerm(canon->first, Scalar(canon->second) * coeff);
    }
    return s;
}

State derive(const State& u) {
    State r(*u.algebra());
    for (const auto& [m, c] : u.terms()) {
        for (size_t i = 0; i < m.size(); ++i) {
            Monomial d = m;
            d[i].deriv += 1;
            auto canon = canonicalizeFactors(*u.algebra(), std::move(d));
            if (!canon) continue;  // odd factor collided with its own derivative
            r.addTerm(canon->first, Scalar(canon->second) * c);
        }
    }
    return r;
}

State deriveN(const State& u, int k) {
    State r = u;
    for (int i = 0; i < k; ++i) r = derive(r);
    return r;
}

namespace {

Scalar monomialGrade(const FreeAlgebraSpec& alg, const Monomial& m, Grading which,
                     std::span<const Scalar> alpha) {
    Scalar g(0);
    for (const Factor& f : m) {
        GenKind k = alg.kind(f.gen);
        int p = alg.pairOf(f.gen);
        switch (which) {
            case Grading::Weight: {
                Scalar base;
                if (k == GenKind::Heis) {
                    base = Scalar(1);
                } else {
                    size_t slot = (k == GenKind::Beta || k == GenKind::Gamma)
                                      ? static_cast<size_t>(p)
                                      : static_cast<size_t>(alg.bgPairs() + p);
                    if (slot >= alpha.size())
                        throw std::invalid_argument("alpha vector too short for algebra");
                    bool lowering = (k == GenKind::Gamma || k == GenKind::C);
                    base = lowering ? Scalar(1) - alpha[slot] : alpha[slot];
                }
                g += base + Scalar(f.deriv);
                break;
            }
            case Grading::BgCharge:
                if (k == GenKind::Beta) g += Scalar(-1);
                if (k == GenKind::Gamma) g += Scalar(1);
                break;
            case Grading::BcCharge:
                if (k == GenKind::B) g += Scalar(-1);
                if (k == GenKind::C) g += Scalar(1);
                break;
            case Grading::Degree:
                g += Scalar(1);
                break;
            case Grading::Level:
                g += Scalar(f.deriv);
                break;
        }
    }
    return g;
}

}  // namespace

std::optional<Scalar> grading(const State& u, Grading which, std::span<const Scalar> alpha) {
    std::optional<Scalar> grade;
    for (const auto& [m, c] : u.terms()) {
        Scalar g = monomialGrade(*u.algebra(), m, which, alpha);
        if (grade && *grade != g) return std::nullopt;
        grade = g;
    }
    return grade ? grade : std::optional<Scalar>(Scalar(0));
}

}  // namespace vocal
