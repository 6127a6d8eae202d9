#include "vocal/w3.hpp"

#include <stdexcept>

namespace vocal {

namespace {

Monomial repeat(std::initializer_list<Factor> fs) { return Monomial(fs); }

Scalar sqrt6over(long num, long den) {
    // num/den * sqrt6
    return Scalar(Rat(0), Rat(num, den));
}

}  // namespace

std::pair<State, State> buildLSWS(const FreeAlgebraSpec& alg, int pair) {
    if (pair < 0 || pair >= alg.bgPairs()) throw std::out_of_range("βγ pair index");
    int b = alg.beta(pair), g = alg.gamma(pair);
    State L = makeState(alg, {
        {repeat({{b, 0}, {b, 0}, {g, 0}, {g, 0}}), Scalar(Rat(1, 2))},
        {repeat({{b, 1}, {g, 0}}), Scalar(-1)},
        {repeat({{b, 0}, {g, 1}}), Scalar(1)},
    });
    State W = makeState(alg, {
        {repeat({{b, 0}, {b, 0}, {b, 0}, {g, 0}, {g, 0}, {g, 0}}), sqrt6over(1, 9)},
        {repeat({{b, 0}, {b, 1}, {g, 0}, {g, 0}}), sqrt6over(-1, 2)},
        {repeat({{b, 0}, {b, 0}, {g, 0}, {g, 1}}), sqrt6over(1, 2)},
        {repeat({{b, 2}, {g, 0}}), sqrt6over(1, 6)},
        {repeat({{b, 1}, {g, 1}}), sqrt6over(-2, 3)},
        {repeat({{b, 0}, {g, 2}}), sqrt6over(1, 6)},
    });
    return {std::move(L), std::move(W)};
}

std::pair<State, State> buildHeisLW(const FreeAlgebraSpec& alg, int heisIndex) {
    if (heisIndex < 0 || heisIndex >= alg.heisCount()) throw std::out_of_range("Heisenberg index");
    if (alg.heisLevels()[heisIndex] != Scalar(1))
        throw std::invalid_argument("Heisenberg realization requires level +1");
    int j = alg.heis(heisIndex);
    State L = makeState(alg, {
        {repeat({{j, 0}, {j, 0}}), Scalar(Rat(1, 2))},
        {repeat({{j, 1}}), Scalar(Rat(1, 2))},
    });
    State W = makeState(alg, {
        {repeat({{j, 0}, {j, 0}, {j, 0}}), sqrt6over(1, 9)},    // 2/(3√6)
        {repeat({{j, 0}, {j, 1}}), sqrt6over(1, 6)},            // 1/√6
        {repeat({{j, 2}}), sqrt6over(1, 36)},                   // 1/(6√6)
    });
    return {std::move(L), std::move(W)};
}

std::pair<State, State> buildBcLW(const FreeAlgebraSpec& alg, int bcPair) {
    if (bcPair < 0 || bcPair >= alg.bcPairs()) throw std::out_of_range("bc pair index");
    int b = alg.bGen(bcPair), c = alg.cGen(bcPair);
    State L = makeState(alg, {{repeat({{b, 1}, {c, 0}}), Scalar(1)}});
    State W = makeState(alg, {
        {repeat({{b, 2}, {c, 0}}), sqrt6over(1, 6)},
        {repeat({{b, 1}, {c, 1}}), sqrt6over(-1, 6)},
    });
    return {std::move(L), std::move(W)};
}

bool verifyW3OPE(const State& L, const State& W) {
    if (L.isZero() || W.isZero() || !L.algebra()) return false;
    const FreeAlgebraSpec& alg = *L.algebra();
    State vac = State::vacuum(alg);

    if (circle(L, L, 0) != derive(L)) return false;
    if (circle(L, L, 1) != Scalar(2) * L) return false;
    if (!circle(L, L, 2).isZero()) return false;
    if (circle(L, L, 3) != Scalar(-1) * vac) return false;
    long twLL = 2 * L.maxTwiceWeightStar();
    for (long n = 4; 2 * n < twLL; ++n)
        if (!circle(L, L, n).isZero()) return false;

    if (circle(L, W, 0) != derive(W)) return false;
    if (circle(L, W, 1) != Scalar(3) * W) return false;
    long twLW = L.maxTwiceWeightStar() + W.maxTwiceWeightStar();
    for (long n = 2; 2 * n < twLW; ++n)
        if (!circle(L, W, n).isZero()) return false;

    State LL = wick(L, L);
    if (circle(W, W, 0) != Scalar(Rat(4, 3)) * derive(LL) - Scalar(Rat(1, 3)) * deriveN(L, 3))
        return false;
    if (circle(W, W, 1) != Scalar(Rat(8, 3)) * LL - Scalar(Rat(1, 2)) * deriveN(L, 2))
        return false;
    if (circle(W, W, 2) != derive(L)) return false;
    if (circle(W, W, 3) != Scalar(2) * L) return false;
    if (!circle(W, W, 4).isZero()) return false;
    if (circle(W, W, 5) != Scalar(Rat(-2, 3)) * vac) return false;
    long twWW = 2 * W.maxTwiceWeightStar();
    for (long n = 6; 2 * n < twWW; ++n)
        if (!circle(W, W, n).isZero()) return false;
    return true;
}

HighestWeightData highestWeightData(const FreeAlgebraSpec& alg, long d) {
    if (alg.bgPairs() != 1 || alg.bcPairs() != 0 || alg.heisCount() != 0)
        throw std::invalid_argument("highest weight data needs a single βγ pair");

    Monomial mono;
    for (long i = 0; i < (d < 0 ? -d : d); ++i)
        mono.push_back(Factor{d < 0 ? alg.beta(0) : alg.gamma(0), 0});
    State v(alg);
    v.addTerm(mono, Scalar(1));

    Scalar a(Rat(d <= 0 ? d : d + 1));
    HighestWeightData out;
    out.t = a * (a - Scalar(1)) / Scalar(2);
    out.w = a * (a - Scalar(1)) * (Scalar(2) * a - Scalar(1)) / (Scalar(3) * Scalar::sqrt6());

    auto [LS, WS] = buildLSWS(alg, 0);
    State theta = makeState(alg, {{Monomial{{alg.beta(0), 0}, {alg.gamma(0), 0}}, Scalar(-1)}});

    bool ok = circle(LS, v, 1) == out.t * v && circle(WS, v, 2) == out.w * v &&
              circle(theta, v, 0) == Scalar(Rat(-d)) * v;
    long twV = v.maxTwiceWeightStar();
    for (long n = 2; ok && 2 * n < LS.maxTwiceWeightStar() + twV; ++n)
        ok = circle(LS, v, n).isZero();
    for (long n = 3; ok && 2 * n < WS.maxTwiceWeightStar() + twV; ++n)
        ok = circle(WS, v, n).isZero();
    for (long n = 1; ok && 2 * n < 2 + twV; ++n)
        ok = circle(theta, v, n).isZero();
    out.verified = ok;
    return out;
}

bool zhuIdealCheck(const MultiPoly& l, const MultiPoly& w) {
    if (l.vars() != 1 || w.vars() != 1) throw std::invalid_argument("univariate polynomials expected");
    MultiPoly eight_l_plus_1 = Scalar(8) * l + MultiPoly::constant(1, Scalar(1));
    MultiPoly rhs = Scalar(Rat(2, 27)) * (l * l * eight_l_plus_1);
    return (w * w - rhs).isZero();
}

State virasoroAlpha(const FreeAlgebraSpec& alg, std::span<const Scalar> alpha) {
    size_t need = static_cast<size_t>(alg.bgPairs() + alg.bcPairs());
    if (alpha.size() != need) throw std::invalid_argument("alpha length must match pair count");
    State L(alg);
    for (int p = 0; p < alg.bgPairs(); ++p) {
        const Scalar& a = alpha[p];
        L += (a - Scalar(1)) * makeState(alg, {{Monomial{{alg.beta(p), 1}, {alg.gamma(p), 0}}, Scalar(1)}});
        L += a * makeState(alg, {{Monomial{{alg.beta(p), 0}, {alg.gamma(p), 1}}, Scalar(1)}});
    }
    for (int p = 0; p < alg.bcPairs(); ++p) {
        const Scalar& a = alpha[alg.bgPairs() + p];
        L += (a - Scalar(1)) * makeState(alg, {{Monomial{{alg.bGen(p), 1}, {alg.cGen(p), 0}}, Scalar(1)}});
        L += a * makeState(alg, {{Monomial{{alg.bGen(p), 0}, {alg.cGen(p), 1}}, Scalar(1)}});
    }
    for (int p = 0; p < alg.heisCount(); ++p) {
        Scalar half_inv_level = Scalar(Rat(1, 2)) / alg.heisLevels()[p];
        L += half_inv_level * makeState(alg, {{Monomial{{alg.heis(p), 0}, {alg.heis(p), 0}}, Scalar(1)}});
    }
    return L;
}

Scalar virasoroCentralCharge(const FreeAlgebraSpec& alg, std::span<const Scalar> alpha) {
    size_t need = static_cast<size_t>(alg.bgPairs() + alg.bcPairs());
    if (alpha.size() != need) throw std::invalid_argument("alpha length must match pair count");
    Scalar c(0);
    for (int p = 0; p < alg.bgPairs(); ++p) {
        const Scalar& a = alpha[p];
        c += Scalar(12) * a * a - Scalar(12) * a + Scalar(2);
    }
    for (int p = 0; p < alg.bcPairs(); ++p) {
        const Scalar& a = alpha[alg.bgPairs() + p];
        c -= Scalar(12) * a * a - Scalar(12) * a + Scalar(2);
    }
    c += Scalar(alg.heisCount());
    return c;
}

}  // namespace vocal
