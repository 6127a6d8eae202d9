#include "vocal/transvect.hpp"

#include <algorithm>
#include <stdexcept>

namespace vocal {

MultiPoly sigma(const WeylElement& w) {
    int n = w.vars();
    MultiPoly p(2 * n);
    for (const auto& [key, c] : w.terms()) {
        std::vector<int> e(2 * n, 0);
        for (int i = 0; i < n; ++i) {
            e[i] = key.second[i];      // x_i  <- ∂_i
            e[n + i] = key.first[i];   // x'_i <- x'_i
        }
        p.addTerm(e, c);
    }
    return p;
}

WeylElement sigmaInv(const MultiPoly& p) {
    if (p.vars() % 2 != 0) throw std::invalid_argument("Sym(V+V*) polynomial expected");
    int n = p.vars() / 2;
    WeylElement w(n);
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> x(n), d(n);
        for (int i = 0; i < n; ++i) {
            d[i] = e[i];
            x[i] = e[n + i];
        }
        w.addTerm(x, d, c);
    }
    return w;
}

State fmap(const MultiPoly& p, const FreeAlgebraSpec& alg) {
    if (p.vars() != 2 * alg.bgPairs())
        throw std::invalid_argument("polynomial arity must be twice the βγ pair count");
    int n = alg.bgPairs();
    State s(alg);
    for (const auto& [e, c] : p.terms()) {
        Monomial mono;
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < e[i]; ++t) mono.push_back(Factor{alg.beta(i), 0});
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < e[n + i]; ++t) mono.push_back(Factor{alg.gamma(i), 0});
        std::sort(mono.begin(), mono.end());
        s.addTerm(mono, c);
    }
    return s;
}

State levelZeroProjection(const State& u) {
    if (!u.algebra()) return u;
    State s(*u.algebra());
    for (const auto& [mono, c] : u.terms()) {
        bool levelZero = std::all_of(mono.begin(), mono.end(),
                                     [](const Factor& f) { return f.deriv == 0; });
        if (levelZero) s.addTerm(mono, c);
    }
    return s;
}

State starK(const State& u, const State& v, long k) {
    if (k < -1) throw std::invalid_argument("star products are defined for k >= -1");
    auto levelZero = [](const State& s) {
        auto lv = grading(s, Grading::Level);
        return lv && lv->isZero();
    };
    if (!levelZero(u) || !levelZero(v))
        throw std::invalid_argument("star products act on level-zero states");
    return levelZeroProjection(circle(u, v, k));
}

MultiPoly transvectant(const MultiPoly& p, const MultiPoly& q, long k) {
    if (p.vars() != q.vars() || p.vars() % 2 != 0)
        throw std::invalid_argument("transvectant needs matching Sym(V+V*) polynomials");
    if (k < 0) throw std::invalid_argument("transvectant order must be >= 0");
    int n = p.vars() / 2;

    // Tensor terms (monomial, monomial) -> coefficient under Γ^k.
    using TKey = std::pair<std::vector<int>, std::vector<int>>;
    std::map<TKey, Scalar> tensor;
    for (const auto& [ep, cp] : p.terms())
        for (const auto& [eq, cq] : q.terms()) tensor[{ep, eq}] = cp * cq;

    auto diff = [&](std::map<TKey, Scalar>& acc, const TKey& key, const Scalar& c, int varL,
                    int varR, bool negate) {
        const auto& [l, r] = key;
        if (l[varL] == 0 || r[varR] == 0) return;
        Scalar coef = Scalar(l[varL]) * Scalar(r[varR]) * c;
        if (negate) coef = -coef;
        TKey nk = key;
        nk.first[varL] -= 1;
        nk.second[varR] -= 1;
        auto [it, inserted] = acc.try_emplace(std::move(nk), coef);
        if (!inserted) {
            it->second += coef;
            if (it->second.isZero()) acc.erase(it);
        }
    };

    for (long step = 0; step < k; ++step) {
        std::map<TKey, Scalar> next;
        for (const auto& [key, c] : tensor) {
            for (int i = 0; i < n; ++i) {
                diff(next, key, c, i, n + i, false);  // ∂x_i ⊗ ∂x'_i
                diff(next, key, c, n + i, i, true);   // -∂x'_i ⊗ ∂x_i
            }
        }
        tensor = std::move(next);
        if (tensor.empty()) break;
    }

    MultiPoly out(p.vars());
    Scalar invFact = Scalar(Rat(Int(1), factorial(k)));
    for (const auto& [key, c] : tensor) {
        std::vector<int> e(key.first);
        for (size_t i = 0; i < e.size(); ++i) e[i] += key.second[i];
        out.addTerm(e, invFact * c);
    }
    return out;
}

WeylElement starKWeyl(const WeylElement& a, const WeylElement& b, long k) {
    if (k < -1) throw std::invalid_argument("star products are defined for k >= -1");
    return sigmaInv(transvectant(sigma(a), sigma(b), k + 1));
}

Scalar starExtractUnit(const DiagonalAction& act, const WeylElement& w) {
    if (w.isZero()) throw std::invalid_argument("cannot extract a unit from zero");
    if (w.vars() != act.n()) throw std::invalid_argument("Weyl arity mismatch with action");
    int n = act.n();

    // Strip E-coefficients: while some term carries x'_i and ∂_i together,
    // apply e_i *_1 (which is -∂_{x_i}∂_{x'_i} on symbols).
    WeylElement cur = w;
    while (true) {
        int var = -1;
        for (const auto& [key, c] : cur.terms()) {
            for (int i = 0; i < n && var < 0; ++i)
                if (key.first[i] >= 1 && key.second[i] >= 1) var = i;
            if (var >= 0) break;
        }
        if (var < 0) break;
        cur = starKWeyl(WeylElement::euler(n, var), cur, 1);
        if (cur.isZero())
            throw std::runtime_error("e_i *_1 reduction annihilated the element; engine defect");
    }

    // Now cur = Σ c_l ω_l; contract the maximal-degree term.
    std::vector<long> best;
    long bestDeg = -1;
    for (const auto& [key, c] : cur.terms()) {
        std::vector<long> l(n);
        long deg = 0;
        for (int i = 0; i < n; ++i) {
            l[i] = key.first[i] - key.second[i];
            deg += key.first[i] + key.second[i];
        }
        if (deg > bestDeg || (deg == bestDeg && l > best)) {
            best = l;
            bestDeg = deg;
        }
    }
    std::vector<long> ml(best.size());
    for (size_t i = 0; i < ml.size(); ++i) ml[i] = -best[i];
    WeylElement contracted = starKWeyl(classicalOmega(n, ml), cur, bestDeg - 1);
    auto k = contracted.scalarPart();
    if (!k || k->isZero())
        throw std::runtime_error("star unit extraction did not produce a scalar; engine defect");
    Scalar c = k->inverse();
    if (c * contracted != WeylElement::unit(n))
        throw std::runtime_error("star unit extraction contract failed; engine defect");
    return c;
}

}  // namespace vocal
