#include "vocal/commutant.hpp"
#include "vocal/w3.hpp"

#include <doctest.h>

#include <random>

using namespace vocal;

namespace {

DiagonalAction rankOne() { return DiagonalAction(ActionMatrix{{{Scalar(1)}}}); }
DiagonalAction hyperbolic() { return DiagonalAction(ActionMatrix{{{Scalar(1), Scalar(-1)}}}); }

// Coordinates of states over their union of monomials, for span comparisons.
int spanRank(const std::vector<State>& states) {
    std::map<Monomial, size_t> cols;
    for (const State& s : states)
        for (const auto& [m, c] : s.terms()) cols.try_emplace(m, cols.size());
    ScalarMat rows;
    for (const State& s : states) {
        ScalarVec row(cols.size(), Scalar(0));
        for (const auto& [m, c] : s.terms()) row[cols[m]] = c;
        rows.push_back(std::move(row));
    }
    return rankOf(rows);
}

}  // namespace

TEST_CASE("action validation") {
    CHECK_THROWS_AS(DiagonalAction(ActionMatrix{{}}), std::invalid_argument);
    CHECK_THROWS_AS(
        DiagonalAction(ActionMatrix{{{Scalar(1), Scalar(1)}, {Scalar(2), Scalar(2)}}}),
        std::invalid_argument);
}

TEST_CASE("theta currents") {
    DiagonalAction one = rankOne();
    const FreeAlgebraSpec& alg1 = one.algebra;
    CHECK(buildTheta(one, 0) ==
          makeState(alg1, {{{{alg1.beta(0), 0}, {alg1.gamma(0), 0}}, Scalar(-1)}}));
    CHECK_THROWS_AS(buildTheta(one, 1), std::out_of_range);

    DiagonalAction two = hyperbolic();
    const FreeAlgebraSpec& alg2 = two.algebra;
    State expect = makeState(alg2, {{{{alg2.beta(0), 0}, {alg2.gamma(0), 0}}, Scalar(-1)},
                                    {{{alg2.beta(1), 0}, {alg2.gamma(1), 0}}, Scalar(1)}});
    CHECK(buildTheta(two, 0) == expect);

    // theta o1 theta = -<a,a> 1
    State theta = buildTheta(two, 0);
    CHECK(circle(theta, theta, 1) == Scalar(-2) * State::vacuum(alg2));
}

TEST_CASE("phi currents") {
    DiagonalAction two = hyperbolic();
    const FreeAlgebraSpec& alg = two.algebra;
    ScalarVec b{Scalar(1), Scalar(1)};
    State phi = buildPhi(two, b);
    CHECK(phi == makeState(alg, {{{{alg.beta(0), 0}, {alg.gamma(0), 0}}, Scalar(-1)},
                                 {{{alg.beta(1), 0}, {alg.gamma(1), 0}}, Scalar(-1)}}));
    CHECK(commutes(phi, buildTheta(two, 0)));
    CHECK(circle(phi, phi, 1) == Scalar(-2) * State::vacuum(alg));
    CHECK_THROWS_AS(buildPhi(two, ScalarVec{Scalar(1), Scalar(0)}), std::invalid_argument);
}

TEST_CASE("lattice vertex operators omega_l") {
    FreeAlgebraSpec alg(2, 0);
    State om = buildOmega(alg, {2, -3});
    Monomial expect{{alg.beta(1), 0}, {alg.beta(1), 0}, {alg.beta(1), 0},
                    {alg.gamma(0), 0}, {alg.gamma(0), 0}};
    std::sort(expect.begin(), expect.end());
    REQUIRE(om.terms().size() == 1);
    CHECK(om.terms().begin()->first == expect);
    CHECK(*grading(om, Grading::BgCharge) == Scalar(-1));
    CHECK(*grading(om, Grading::Degree) == Scalar(5));

    CHECK(buildOmega(alg, {0, 0}) == State::vacuum(alg));

    // theta o0 omega_l = -<a, l> omega_l and higher poles vanish.
    DiagonalAction act(ActionMatrix{{{Scalar(2), Scalar(Rat(1, 3))}}});
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<long> l{static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 7) - 3};
        State omega = buildOmega(act, l);
        State theta = buildTheta(act, 0);
        Scalar pairing = Scalar(2) * Scalar(Rat(l[0])) + Scalar(Rat(1, 3)) * Scalar(Rat(l[1]));
        CHECK(circle(theta, omega, 0) == -pairing * omega);
        for (long n = 1; n <= 3; ++n) CHECK(circle(theta, omega, n).isZero());
    }
}

TEST_CASE("invariance tests") {
    DiagonalAction one = rankOne();
    auto [LS, WS] = buildLSWS(one.algebra, 0);
    CHECK(isInvariant(LS, one));
    CHECK(isInvariant(WS, one));
    CHECK(!isInvariant(State::generator(one.algebra, one.algebra.gamma(0)), one));

    DiagonalAction two = hyperbolic();
    CHECK(!isInvariant(buildOmega(two, {1, 0}), two));  // <a, l> = 1
    CHECK(isInvariant(buildOmega(two, {1, 1}), two));
}

TEST_CASE("generator sets") {
    DiagonalAction one = rankOne();
    auto gens1 = generatorSet(one);
    REQUIRE(gens1.size() == 2);
    CHECK(gens1[0].name == "L1");
    CHECK(gens1[1].name == "W1");

    DiagonalAction two = hyperbolic();
    auto gens2 = generatorSet(two);
    REQUIRE(gens2.size() == 7);
    CHECK(gens2[0].name == "phi1");
    CHECK(gens2[5].name == "omega[1,1]");
    CHECK(gens2[6].name == "omega[-1,-1]");
    CHECK(gens2[5].state == buildOmega(two, {1, 1}));
    CHECK(gens2[6].state == buildOmega(two, {-1, -1}));
    for (const auto& g : gens2) CHECK(isInvariant(g.state, two));

    DiagonalAction irr(ActionMatrix{{{Scalar(1), Scalar::sqrt6()}}});
    auto gens3 = generatorSet(irr);
    REQUIRE(gens3.size() == 5);  // phi1, L1, W1, L2, W2; no lattice generators
    for (const auto& g : gens3) CHECK(g.name.find("omega") == std::string::npos);
}

TEST_CASE("lattice contraction closed form") {
    auto c1 = latticeContraction({-2}, {3});
    CHECK(c1.d == 1);
    CHECK(c1.coeff == Scalar(6));

    // The engine fixes the sign (-1)^{d_1} for l_1 > 0; d_1 = 2 gives +6.
    auto c2 = latticeContraction({2}, {-3});
    CHECK(c2.d == 1);
    CHECK(c2.coeff == Scalar(6));
    auto c2b = latticeContraction({1}, {-3});
    CHECK(c2b.d == 0);
    CHECK(c2b.coeff == Scalar(-3));  // (-1)^1 * 3!/2!

    auto c3 = latticeContraction({2, 0}, {1, 4});
    CHECK(c3.d == -1);
    CHECK(c3.coeff == Scalar(1));

    // Closed form equals the engine on a small sweep (the acceptance suite
    // covers the full range).
    FreeAlgebraSpec alg(2, 0);
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
            for (long c = -2; c <= 2; ++c)
                for (long d = -2; d <= 2; ++d) {
                    std::vector<long> l{a, b}, lp{c, d};
                    auto [pole, coeff] = latticeContraction(l, lp);
                    State expect = coeff * buildOmega(alg, {a + c, b + d});
                    CHECK(circle(buildOmega(alg, l), buildOmega(alg, lp), pole) == expect);
                }
}

TEST_CASE("graded commutant bases for the rank-one action") {
    DiagonalAction act = rankOne();
    auto [LS, WS] = buildLSWS(act.algebra, 0);

    auto w2 = gradedCommutantBasis(act, Rat(2), 0L);
    REQUIRE(w2.size() == 1);
    CHECK(spanRank({w2[0], LS}) == 1);  // spanned by L_S

    CHECK(gradedCommutantBasis(act, Rat(1), 0L).empty());

    auto w3 = gradedCommutantBasis(act, Rat(3), 0L);
    REQUIRE(w3.size() == 2);
    CHECK(spanRank({w3[0], w3[1], derive(LS), WS}) == 2);

    // Bounded-weight decomposition probe: dims (1, -, 1, 2) at w = 0..3.
    CHECK(gradedCommutantBasis(act, Rat(0), 0L).size() == 1);
    CHECK(gradedCommutantBasis(act, Rat(1, 2), 0L).empty());

    CHECK_THROWS_AS(gradedCommutantBasis(act, Rat(-1), 0L), std::invalid_argument);
    CHECK_THROWS_AS(gradedCommutantBasis(act, Rat(1, 3), 0L), std::invalid_argument);
}

TEST_CASE("graded dimensions are GL(m)-invariant") {
    DiagonalAction a = hyperbolic();
    DiagonalAction b(ActionMatrix{{{Scalar(3), Scalar(-3)}}});
    for (int tw = 0; tw <= 4; ++tw)
        CHECK(gradedCommutantBasis(a, Rat(tw, 2), 0L).size() ==
              gradedCommutantBasis(b, Rat(tw, 2), 0L).size());
    // Charge-vector constraint agrees with the total charge split.
    CHECK(gradedCommutantBasis(a, Rat(1), std::vector<long>{1, 1}).size() == 1);  // omega_(1,1)
}

TEST_CASE("quantum corrections") {
    DiagonalAction act = rankOne();
    auto [LS, WS] = buildLSWS(act.algebra, 0);
    State qc2 = quantumCorrect(act, 2);
    CHECK(qc2 == Scalar(2) * LS);

    // Weight-2 invariant space is one-dimensional, so the solution is unique.
    CHECK(gradedCommutantBasis(act, Rat(2), 0L).size() == 1);

    State qc3 = quantumCorrect(act, 3);
    CHECK(isInvariant(qc3, act));
    State theta = buildTheta(act, 0);
    State correction = qc3 - wick(theta, wick(theta, theta));
    // Correction degree <= 2n-2 = 4 on every monomial.
    for (const auto& [m, c] : correction.terms()) CHECK(m.size() <= 4);

    CHECK_THROWS_AS(quantumCorrect(act, 1), std::invalid_argument);
    CHECK_THROWS_AS(quantumCorrect(hyperbolic(), 2), std::invalid_argument);
}

TEST_CASE("unit extraction") {
    DiagonalAction one = rankOne();
    const FreeAlgebraSpec& alg1 = one.algebra;

    State beta2 = buildOmega(one, {-2});
    UnitExtraction e1 = extractUnit(one, beta2);
    CHECK(e1.l == std::vector<long>{-2});
    CHECK(e1.d == 2);
    CHECK(e1.c == Scalar(Rat(1, 2)));
    CHECK(circle(buildOmega(one, {2}), beta2, 1) == Scalar(2) * State::vacuum(alg1));

    UnitExtraction e2 = extractUnit(one, State::vacuum(alg1));
    CHECK(e2.c == Scalar(1));
    CHECK(e2.d == 0);

    DiagonalAction two = hyperbolic();
    State u = buildOmega(two, {1, 1}) + Scalar(5) * State::vacuum(two.algebra);
    UnitExtraction e3 = extractUnit(two, u);
    CHECK(e3.l == std::vector<long>{1, 1});
    CHECK(e3.d == 2);
    CHECK(e3.c == Scalar(1));

    CHECK_THROWS_AS(extractUnit(one, State(alg1)), std::invalid_argument);
    State notLattice = makeState(alg1, {{{{alg1.beta(0), 1}, {alg1.gamma(0), 0}}, Scalar(1)}});
    CHECK_THROWS_AS(extractUnit(one, notLattice), std::invalid_argument);
    State mixed = makeState(alg1, {{{{alg1.beta(0), 0}, {alg1.gamma(0), 0}}, Scalar(1)}});
    CHECK_THROWS_AS(extractUnit(one, mixed), std::invalid_argument);
}

TEST_CASE("B' conformal structure for the rank-one action is L_S") {
    DiagonalAction act = rankOne();
    auto [LS, WS] = buildLSWS(act.algebra, 0);
    State L = conformalBPrime(act, {});
    CHECK(L == LS);
    CHECK(conformalBPrimeCentralCharge(act, {}) == Scalar(-2));
    CHECK_THROWS_AS(conformalBPrime(act, {Scalar(1)}), std::invalid_argument);
}

TEST_CASE("B' conformal structure for n=2, m=1") {
    DiagonalAction act = hyperbolic();
    CHECK(conformalBPrimeCentralCharge(act, {Scalar(0)}) == Scalar(-3));
    State L = conformalBPrime(act, {Scalar(0)});
    CHECK(verifyVirasoro(L, Scalar(-3)));
}
