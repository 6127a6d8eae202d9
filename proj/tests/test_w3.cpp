#include "vocal/commutant.hpp"
#include "vocal/w3.hpp"

#include <doctest.h>

using namespace vocal;

TEST_CASE("L_S and W_S expansions") {
    FreeAlgebraSpec alg(1, 0);
    auto [LS, WS] = buildLSWS(alg, 0);
    int b = alg.beta(0), g = alg.gamma(0);

    REQUIRE(LS.terms().size() == 3);
    CHECK(LS.terms().at({{b, 0}, {b, 0}, {g, 0}, {g, 0}}) == Scalar(Rat(1, 2)));
    CHECK(LS.terms().at({{b, 1}, {g, 0}}) == Scalar(-1));
    CHECK(LS.terms().at({{b, 0}, {g, 1}}) == Scalar(1));

    REQUIRE(WS.terms().size() == 6);
    auto surd = [](long num, long den) { return Scalar(Rat(0), Rat(num, den)); };
    CHECK(WS.terms().at({{b, 0}, {b, 0}, {b, 0}, {g, 0}, {g, 0}, {g, 0}}) == surd(1, 9));
    CHECK(WS.terms().at({{b, 0}, {b, 1}, {g, 0}, {g, 0}}) == surd(-1, 2));
    CHECK(WS.terms().at({{b, 0}, {b, 0}, {g, 0}, {g, 1}}) == surd(1, 2));
    CHECK(WS.terms().at({{b, 2}, {g, 0}}) == surd(1, 6));
    CHECK(WS.terms().at({{b, 1}, {g, 1}}) == surd(-2, 3));
    CHECK(WS.terms().at({{b, 0}, {g, 2}}) == surd(1, 6));
}

TEST_CASE("L_S is half the corrected theta square") {
    DiagonalAction act(ActionMatrix{{{Scalar(1)}}});
    auto [LS, WS] = buildLSWS(act.algebra, 0);
    CHECK(Scalar(Rat(1, 2)) * quantumCorrect(act, 2) == LS);
}

TEST_CASE("the three realizations pass the full W3 OPE check") {
    FreeAlgebraSpec bg(1, 0);
    auto [LS, WS] = buildLSWS(bg, 0);
    CHECK(verifyW3OPE(LS, WS));
    CHECK(!verifyW3OPE(LS, Scalar(2) * WS));  // W o3 W = 2L scales quadratically

    FreeAlgebraSpec heis(0, 0, {Scalar(1)});
    auto [LH, WH] = buildHeisLW(heis, 0);
    CHECK(verifyW3OPE(LH, WH));
    CHECK(circle(LH, LH, 3) == Scalar(-1) * State::vacuum(heis));

    // j is a weight-1 eigenvector but not primary: L_H o2 j = -1 (engine value).
    State j = State::generator(heis, heis.heis(0));
    CHECK(circle(LH, j, 1) == j);
    CHECK(circle(LH, j, 2) == Scalar(-1) * State::vacuum(heis));

    FreeAlgebraSpec bc(0, 1);
    auto [LE, WE] = buildBcLW(bc, 0);
    CHECK(verifyW3OPE(LE, WE));
    CHECK(circle(LE, LE, 3) == Scalar(-1) * State::vacuum(bc));
    CHECK(*grading(LE, Grading::BcCharge) == Scalar(0));
    CHECK(*grading(WE, Grading::BcCharge) == Scalar(0));
}

TEST_CASE("Heisenberg realization needs level one") {
    FreeAlgebraSpec wrong(0, 0, {Scalar(-1)});
    CHECK_THROWS_AS(buildHeisLW(wrong, 0), std::invalid_argument);
}

TEST_CASE("boson-fermion correspondence identities") {
    // With j = :bc: inside the bc system, the Heisenberg formulas reproduce
    // L_E and W_E exactly.
    FreeAlgebraSpec bc(0, 1);
    State b = State::generator(bc, bc.bGen(0));
    State cState = State::generator(bc, bc.cGen(0));
    State j = wick(b, cState);
    CHECK(circle(j, j, 1) == State::vacuum(bc));  // level 1

    auto [LE, WE] = buildBcLW(bc, 0);
    State LH = Scalar(Rat(1, 2)) * wick(j, j) + Scalar(Rat(1, 2)) * derive(j);
    CHECK(LH == LE);
    Scalar a1(Rat(0), Rat(1, 9)), a2(Rat(0), Rat(1, 6)), a3(Rat(0), Rat(1, 36));
    State WH = a1 * wick(j, wick(j, j)) + a2 * wick(j, derive(j)) + a3 * deriveN(j, 2);
    CHECK(WH == WE);
}

TEST_CASE("highest weight data") {
    FreeAlgebraSpec alg(1, 0);
    auto d0 = highestWeightData(alg, 0);
    CHECK(d0.verified);
    CHECK(d0.t == Scalar(0));
    CHECK(d0.w == Scalar(0));

    auto d1 = highestWeightData(alg, 1);
    CHECK(d1.verified);
    CHECK(d1.t == Scalar(1));
    CHECK(d1.w == Scalar(Rat(0), Rat(1, 3)));

    auto dm1 = highestWeightData(alg, -1);
    CHECK(dm1.verified);
    CHECK(dm1.t == Scalar(1));
    CHECK(dm1.w == Scalar(Rat(0), Rat(-1, 3)));

    // Exact (t, w) from the closed form, and injectivity over -4..4.
    std::vector<std::pair<Scalar, Scalar>> seen;
    for (long d = -4; d <= 4; ++d) {
        auto hw = highestWeightData(alg, d);
        CHECK(hw.verified);
        Scalar a(Rat(d <= 0 ? d : d + 1));
        CHECK(hw.t == a * (a - Scalar(1)) / Scalar(2));
        CHECK(hw.w == a * (a - Scalar(1)) * (Scalar(2) * a - Scalar(1)) /
                          (Scalar(3) * Scalar::sqrt6()));
        for (const auto& [t, w] : seen) CHECK(!(t == hw.t && w == hw.w));
        seen.emplace_back(hw.t, hw.w);
    }
}

TEST_CASE("Zhu ideal polynomial") {
    MultiPoly e = MultiPoly::variable(1, 0);
    MultiPoly l = Scalar(Rat(1, 2)) * (e * e + e);
    MultiPoly w = Scalar(Rat(0), Rat(1, 9)) * (e * e * e) + Scalar(Rat(0), Rat(1, 6)) * (e * e) +
                  Scalar(Rat(0), Rat(1, 18)) * e;
    CHECK(zhuIdealCheck(l, w));
    CHECK(zhuIdealCheck(MultiPoly(1), MultiPoly(1)));
    CHECK(!zhuIdealCheck(l, e * e * e));
}

TEST_CASE("Virasoro structures on bc pairs and Heisenberg currents") {
    FreeAlgebraSpec bc(0, 1);
    for (const Scalar& a : {Scalar(0), Scalar(Rat(1, 2)), Scalar(1)}) {
        std::vector<Scalar> alpha{a};
        CHECK(verifyVirasoro(virasoroAlpha(bc, alpha), virasoroCentralCharge(bc, alpha)));
    }
    CHECK(virasoroCentralCharge(bc, std::vector<Scalar>{Scalar(1)}) == Scalar(-2));
    CHECK(virasoroCentralCharge(bc, std::vector<Scalar>{Scalar(Rat(1, 2))}) == Scalar(1));

    FreeAlgebraSpec h(0, 0, {Scalar(2)});
    std::vector<Scalar> empty;
    CHECK(verifyVirasoro(virasoroAlpha(h, empty), Scalar(1)));
}
