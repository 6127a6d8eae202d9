#include "vocal/zhu.hpp"

#include "vocal/w3.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace vocal {

namespace {

struct ZhuCtx {
    const FreeAlgebraSpec& alg;
    const std::vector<Scalar>& alpha;
    std::map<Monomial, WeylElement> memo;
};

Scalar baseWeight(const ZhuCtx& ctx, int gen) {
    int p = ctx.alg.pairOf(gen);
    return ctx.alg.kind(gen) == GenKind::Beta ? ctx.alpha[p] : Scalar(1) - ctx.alpha[p];
}

WeylElement zhuMonomial(ZhuCtx& ctx, const Monomial& mono) {
    int n = ctx.alg.bgPairs();
    if (mono.empty()) return WeylElement::unit(n);
    if (auto it = ctx.memo.find(mono); it != ctx.memo.end()) return it->second;

    Factor g = mono[0];
    Monomial rest(mono.begin() + 1, mono.end());

    // [∂^k a] = (-1)^k m(m+1)...(m+k-1) [a] with m = wt(a).
    Scalar m0 = baseWeight(ctx, g.gen);
    Scalar fac(1);
    for (int i = 0; i < g.deriv; ++i) fac *= -(m0 + Scalar(i));
    WeylElement gImg = fac * (ctx.alg.kind(g.gen) == GenKind::Beta
                                  ? WeylElement::derivative(n, ctx.alg.pairOf(g.gen))
                                  : WeylElement::position(n, ctx.alg.pairOf(g.gen)));

    WeylElement out = gImg * zhuMonomial(ctx, rest);

    State gState = State::generator(ctx.alg, g.gen, g.deriv);
    State restState(ctx.alg);
    restState.addTerm(rest, Scalar(1));
    Scalar wg = m0 + Scalar(g.deriv);
    long twBound = twiceWeightStar(ctx.alg, Monomial{g}) + twiceWeightStar(ctx.alg, rest);
    for (long j = 1; 2 * (j - 1) < twBound; ++j) {
        State prod = circle(gState, restState, j - 1);
        if (prod.isZero()) continue;
        WeylElement corr(n);
        for (const auto& [pm, pc] : prod.terms()) corr += pc * zhuMonomial(ctx, pm);
        out -= binomial(wg, j) * corr;
    }

    ctx.memo.emplace(mono, out);
    return out;
}

}  // namespace

WeylElement zhuImage(const State& u, const std::vector<Scalar>& alpha) {
    if (!u.algebra()) return WeylElement(0);
    const FreeAlgebraSpec& alg = *u.algebra();
    if (alg.bcPairs() != 0 || alg.heisCount() != 0)
        throw std::invalid_argument("Zhu image is defined on pure βγ algebras");
    if (static_cast<int>(alpha.size()) != alg.bgPairs())
        throw std::invalid_argument("alpha length must match βγ pair count");
    ZhuCtx ctx{alg, alpha, {}};
    WeylElement out(alg.bgPairs());
    for (const auto& [mono, c] : u.terms()) out += c * zhuMonomial(ctx, mono);
    return out;
}

MultiPoly weylToEulerPoly(const WeylElement& w) {
    int n = w.vars();
    MultiPoly out(n);
    for (const auto& [key, c] : w.terms()) {
        if (key.first != key.second)
            throw std::invalid_argument("Weyl element is not a polynomial in the Euler operators");
        // x'^k ∂^k = e(e-1)...(e-k+1) per variable.
        MultiPoly term = MultiPoly::constant(n, c);
        for (int j = 0; j < n; ++j)
            for (int t = 0; t < key.first[j]; ++t)
                term = term * (MultiPoly::variable(n, j) - MultiPoly::constant(n, Scalar(t)));
        out += term;
    }
    return out;
}

WeylElement eulerPolyToWeyl(const MultiPoly& p) {
    int n = p.vars();
    WeylElement out(n);
    for (const auto& [exps, c] : p.terms()) {
        WeylElement term = c * WeylElement::unit(n);
        for (int j = 0; j < n; ++j)
            for (int t = 0; t < exps[j]; ++t) term = term * WeylElement::euler(n, j);
        out += term;
    }
    return out;
}

CokernelProbe cokernelProbe(const DiagonalAction& act, const std::vector<Scalar>& alpha, int D) {
    if (D < 1) throw std::invalid_argument("degree bound must be >= 1");
    int n = act.n();

    // E-valued generator images; lattice generators ω_{±l} land outside E and
    // are excluded (they generate the M_l components).
    std::vector<MultiPoly> gens;
    for (const ScalarVec& b : fieldKernelBasis(act.matrix))
        gens.push_back(weylToEulerPoly(zhuImage(buildPhi(act, b), alpha)));
    for (int j = 0; j < n; ++j) {
        auto [L, W] = buildLSWS(act.algebra, j);
        gens.push_back(weylToEulerPoly(zhuImage(L, alpha)));
        gens.push_back(weylToEulerPoly(zhuImage(W, alpha)));
    }

    // Monomial basis of E_{<=D}, high degree first so the echelon pivots land
    // on high monomials and the cokernel representatives come out low.
    std::vector<std::vector<int>> basis;
    std::vector<int> exp(n, 0);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == n) {
            basis.push_back(exp);
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            exp[var] = k;
            self(self, var + 1, remaining - k);
        }
        exp[var] = 0;
    };
    rec(rec, 0, D);
    std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da > db;
        return a > b;
    });
    std::map<std::vector<int>, size_t> colOf;
    for (size_t i = 0; i < basis.size(); ++i) colOf[basis[i]] = i;

    auto coordRow = [&](const MultiPoly& p) {
        ScalarVec row(basis.size(), Scalar(0));
        for (const auto& [e, c] : p.terms()) row[colOf.at(e)] = c;
        return row;
    };

    // All products Π gens^m with Σ m·deg <= D.
    std::vector<MultiPoly> products;
    MultiPoly one = MultiPoly::constant(n, Scalar(1));
    auto prodRec = [&](auto&& self, size_t idx, MultiPoly acc, int degLeft) -> void {
        if (idx == gens.size()) {
            products.push_back(std::move(acc));
            return;
        }
        int dg = std::max(1, gens[idx].totalDegree());
        MultiPoly cur = acc;
        for (int m = 0; degLeft - m * dg >= 0; ++m) {
            if (m > 0) cur = cur * gens[idx];
            self(self, idx + 1, cur, degLeft - m * dg);
        }
    };
    prodRec(prodRec, 0, one, D);

    ScalarMat rows;
    for (const MultiPoly& p : products)
        if (p.totalDegree() <= D) rows.push_back(coordRow(p));
    ScalarMat reduced = rows;
    int rank = rowReduce(reduced);

    CokernelProbe out;
    out.codim = static_cast<int>(basis.size()) - rank;
    std::vector<bool> pivotCol(basis.size(), false);
    for (int r = 0; r < rank; ++r) {
        size_t c = 0;
        while (c < basis.size() && reduced[r][c].isZero()) ++c;
        if (c < basis.size()) pivotCol[c] = true;
    }
    for (size_t c = 0; c < basis.size(); ++c) {
        if (pivotCol[c]) continue;
        MultiPoly mono(n);
        mono.addTerm(basis[c], Scalar(1));
        out.representatives.push_back(eulerPolyToWeyl(mono));
    }

    // θ-augmented span: Im(π) together with t_i · Im(π) should fill E_{<=D}.
    ScalarMat augmented = rows;
    for (int i = 0; i < act.m(); ++i) {
        MultiPoly t = weylToEulerPoly(zhuImage(buildTheta(act, i), alpha));
        for (const MultiPoly& p : products) {
            MultiPoly tp = t * p;
            if (tp.totalDegree() <= D) augmented.push_back(coordRow(tp));
        }
    }
    out.thetaAugmentedSpans = rowReduce(augmented) == static_cast<int>(basis.size());
    return out;
}

}  // namespace vocal
