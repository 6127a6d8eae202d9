#include "vocal/ope.hpp"
#include "vocal/w3.hpp"

#include <doctest.h>

#include <random>

using namespace vocal;

namespace {

struct Fixture {
    FreeAlgebraSpec alg{1, 1, {Scalar(1)}};
    State beta = State::generator(alg, alg.beta(0));
    State gamma = State::generator(alg, alg.gamma(0));
    State vac = State::vacuum(alg);
    State theta = -wick(gamma, beta);
};

}  // namespace

TEST_CASE("circle product generator values") {
    Fixture f;
    CHECK(circle(f.beta, f.gamma, 0) == f.vac);
    CHECK(circle(f.gamma, f.beta, 0) == -f.vac);
    CHECK(circle(f.theta, f.theta, 1) == -f.vac);

    // beta^2 o_1 gamma^3 = 6 gamma  (e1!/(e1-d1)! with d1=2, e1=3)
    State beta2 = wick(f.beta, f.beta);
    State gamma3 = wick(f.gamma, wick(f.gamma, f.gamma));
    CHECK(circle(beta2, gamma3, 1) == Scalar(6) * f.gamma);

    // Vanishing above the weight bound.
    long bound = (beta2.maxTwiceWeightStar() + gamma3.maxTwiceWeightStar()) / 2;
    for (long n = bound; n < bound + 3; ++n) CHECK(circle(beta2, gamma3, n).isZero());
}

TEST_CASE("circle rejects mismatched algebras") {
    Fixture f;
    FreeAlgebraSpec other(2, 0);
    CHECK_THROWS_AS(circle(f.beta, State::generator(other, 0), 0), std::invalid_argument);
}

TEST_CASE("wick product basics") {
    Fixture f;
    CHECK(wick(f.vac, f.beta) == f.beta);
    CHECK(wick(f.beta, f.vac) == f.beta);
    CHECK(wick(f.beta, f.gamma) ==
          makeState(f.alg, {{{{f.alg.beta(0), 0}, {f.alg.gamma(0), 0}}, Scalar(1)}}));
}

TEST_CASE("wick associator formula on sampled generators") {
    Fixture f;
    // :(:ab:)c: - :abc: = sum_k 1/(k+1)! ( :(d^{k+1}a)(b o_k c): + (-1)^{|a||b|} :(d^{k+1}b)(a o_k c): )
    std::vector<State> gens{f.beta, f.gamma, State::generator(f.alg, f.alg.bGen(0)),
                            State::generator(f.alg, f.alg.cGen(0)),
                            State::generator(f.alg, f.alg.heis(0))};
    for (const State& a : gens)
        for (const State& b : gens)
            for (const State& c : gens) {
                State lhs = wick(wick(a, b), c) - wick(a, wick(b, c));
                State rhs(f.alg);
                int sgn = (*a.parity() && *b.parity()) ? -1 : 1;
                for (long k = 0; 2 * k < b.maxTwiceWeightStar() + c.maxTwiceWeightStar(); ++k) {
                    Scalar inv(Rat(Int(1), factorial(k + 1)));
                    rhs += inv * wick(deriveN(a, k + 1), circle(b, c, k));
                    rhs += Scalar(sgn) * inv * wick(deriveN(b, k + 1), circle(a, c, k));
                }
                CHECK(lhs == rhs);
            }
}

TEST_CASE("singular OPE tables") {
    Fixture f;
    CHECK(opeSingular(f.beta, f.beta).empty());

    auto [LS, WS] = buildLSWS(f.alg, 0);
    auto table = opeSingular(LS, LS);
    REQUIRE(table.size() == 3);
    CHECK(table[0].first == 3);
    CHECK(table[0].second == -f.vac);
    CHECK(table[1].first == 1);
    CHECK(table[1].second == Scalar(2) * LS);
    CHECK(table[2].first == 0);
    CHECK(table[2].second == derive(LS));

    State j = State::generator(f.alg, f.alg.heis(0));
    auto jj = opeSingular(j, j);
    REQUIRE(jj.size() == 1);
    CHECK(jj[0].first == 1);
    CHECK(jj[0].second == f.vac);
}

TEST_CASE("commutation tests") {
    Fixture f;
    auto [LS, WS] = buildLSWS(f.alg, 0);
    CHECK(commutes(f.theta, LS));
    CHECK(!commutes(f.theta, f.theta));
    CHECK(commutes(f.beta, f.beta));
}

TEST_CASE("verifyVirasoro") {
    FreeAlgebraSpec alg(1, 0);
    std::vector<Scalar> alpha0{Scalar(0)};
    CHECK(verifyVirasoro(virasoroAlpha(alg, alpha0), Scalar(2)));
    auto [LS, WS] = buildLSWS(alg, 0);
    CHECK(verifyVirasoro(LS, Scalar(-2)));
    CHECK(!verifyVirasoro(Scalar(2) * LS, Scalar(-2)));
    CHECK(!verifyVirasoro(Scalar(2) * LS, Scalar(-8)));
}

TEST_CASE("skew symmetry and derivative rules on random homogeneous states") {
    Fixture f;
    std::mt19937_64 rng(11);
    auto randomState = [&](int parityWanted) {
        // Small homogeneous states assembled from generator products.
        std::vector<State> pool{f.beta,
                                f.gamma,
                                wick(f.beta, f.gamma),
                                State::generator(f.alg, f.alg.bGen(0)),
                                State::generator(f.alg, f.alg.cGen(0)),
                                wick(State::generator(f.alg, f.alg.bGen(0)), f.gamma),
                                State::generator(f.alg, f.alg.heis(0)),
                                derive(f.beta)};
        for (int tries = 0; tries < 100; ++tries) {
            State s = pool[rng() % pool.size()];
            if (rng() % 2) s = wick(pool[rng() % pool.size()], s);
            auto p = s.parity();
            if (p && *p == parityWanted && !s.isZero()) return s;
        }
        return f.beta;
    };
    for (int trial = 0; trial < 25; ++trial) {
        int pu = static_cast<int>(rng() % 2), pv = static_cast<int>(rng() % 2);
        State u = randomState(pu), v = randomState(pv);
        long tw = u.maxTwiceWeightStar() + v.maxTwiceWeightStar();
        for (long n = -2; 2 * n < tw; ++n) {
            State lhs = circle(u, v, n);
            State rhs(f.alg);
            for (long j = 0; 2 * (n + j) < tw; ++j) {
                State t = circle(v, u, n + j);
                if (t.isZero()) continue;
                Scalar sgn = ((n + j + 1) % 2 == 0) ? Scalar(1) : Scalar(-1);
                if (pu * pv != 0) sgn = -sgn;
                rhs += (sgn / Scalar(Rat(factorial(j)))) * deriveN(t, j);
            }
            CHECK(lhs == rhs);
            CHECK(circle(derive(u), v, n) == Scalar(Rat(-n)) * circle(u, v, n - 1));
            CHECK(derive(lhs) == circle(derive(u), v, n) + circle(u, derive(v), n));
        }
    }
}

TEST_CASE("vacuum axioms") {
    Fixture f;
    State v = wick(f.beta, derive(f.gamma));
    CHECK(circle(f.vac, v, -1) == v);
    for (long n : {-4L, -2L, 0L, 1L, 3L}) CHECK(circle(f.vac, v, n).isZero());
    CHECK(circle(v, f.vac, -2) == derive(v));
    CHECK(circle(v, f.vac, -1) == v);
    for (long n = 0; n < 4; ++n) CHECK(circle(v, f.vac, n).isZero());
}

TEST_CASE("noncommutative Wick formula self-consistency") {
    Fixture f;
    // a o_n :bc: = :(a o_n b) c: + (-1)^{|a||b|} :b (a o_n c): + sum_{j=1..n} binom(n,j) (a o_{n-j} b) o_{j-1} c
    std::vector<State> gens{f.beta, f.gamma, State::generator(f.alg, f.alg.bGen(0)),
                            State::generator(f.alg, f.alg.cGen(0)),
                            State::generator(f.alg, f.alg.heis(0)), derive(f.beta),
                            derive(f.gamma)};
    for (const State& a : gens)
        for (const State& b : gens)
            for (const State& c : gens) {
                State bc = wick(b, c);
                if (bc.isZero()) continue;
                int sgn = (*a.parity() && *b.parity()) ? -1 : 1;
                for (long n = 0; 2 * n < a.maxTwiceWeightStar() + bc.maxTwiceWeightStar(); ++n) {
                    State rhs = wick(circle(a, b, n), c) + Scalar(sgn) * wick(b, circle(a, c, n));
                    for (long j = 1; j <= n; ++j)
                        rhs += Scalar(Rat(intBinomial(n, j))) *
                               circle(circle(a, b, n - j), c, j - 1);
                    CHECK(circle(a, bc, n) == rhs);
                }
            }
}

TEST_CASE("charge conservation") {
    Fixture f;
    State u = wick(f.beta, wick(f.beta, f.gamma));
    State v = wick(f.gamma, derive(f.gamma));
    for (long n = -2; n <= 2; ++n) {
        State p = circle(u, v, n);
        if (p.isZero()) continue;
        CHECK(*grading(p, Grading::BgCharge) ==
              *grading(u, Grading::BgCharge) + *grading(v, Grading::BgCharge));
    }
}
