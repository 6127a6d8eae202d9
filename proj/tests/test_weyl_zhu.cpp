#include "vocal/commutant.hpp"
#include "vocal/w3.hpp"
#include "vocal/weyl.hpp"
#include "vocal/zhu.hpp"

#include <doctest.h>

#include <random>

using namespace vocal;

namespace {

WeylElement randomWeyl(std::mt19937_64& rng, int n, int maxDeg) {
    WeylElement w(n);
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> x(n, 0), d(n, 0);
        int deg = static_cast<int>(rng() % (maxDeg + 1));
        for (int i = 0; i < deg; ++i) {
            if (rng() % 2)
                x[rng() % n] += 1;
            else
                d[rng() % n] += 1;
        }
        Scalar c(Rat(1 + static_cast<long>(rng() % 4), 1 + static_cast<long>(rng() % 3)));
        if (rng() % 2) c = -c;
        w.addTerm(x, d, c);
    }
    return w;
}

}  // namespace

TEST_CASE("Weyl normal-form products") {
    WeylElement x = WeylElement::position(1, 0);
    WeylElement d = WeylElement::derivative(1, 0);
    WeylElement e = WeylElement::euler(1, 0);

    CHECK(d * x == e + WeylElement::unit(1));
    CHECK(x * d == e);
    // d^2 x'^2 = x'^2 d^2 + 4 x'd + 2
    WeylElement lhs = (d * d) * (x * x);
    WeylElement expect = (x * x) * (d * d) + Scalar(4) * e + Scalar(2) * WeylElement::unit(1);
    CHECK(lhs == expect);
}

TEST_CASE("Weyl product associativity and filtration") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + static_cast<int>(rng() % 2);
        WeylElement a = randomWeyl(rng, n, 3);
        WeylElement b = randomWeyl(rng, n, 3);
        WeylElement c = randomWeyl(rng, n, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * b).bernsteinDegree() <= a.bernsteinDegree() + b.bernsteinDegree());
        WeylElement comm = weylCommutator(a, b);
        if (!comm.isZero())
            CHECK(comm.bernsteinDegree() <= a.bernsteinDegree() + b.bernsteinDegree() - 2);
    }
}

TEST_CASE("tau and classical invariance") {
    ActionMatrix act{{{Scalar(1)}}};
    CHECK(buildTau(act, 0) == Scalar(-1) * WeylElement::euler(1, 0));

    ActionMatrix act2{{{Scalar(2), Scalar(Rat(1, 2))}}};
    WeylElement tau = buildTau(act2, 0);
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b) {
            WeylElement om = classicalOmega(2, {a, b});
            Scalar pairing = Scalar(2) * Scalar(Rat(a)) + Scalar(Rat(1, 2)) * Scalar(Rat(b));
            CHECK(weylCommutator(tau, om) == -pairing * om);
        }
    CHECK(weylCommutator(tau, WeylElement::euler(2, 0)).isZero());
    CHECK(weylCommutator(tau, WeylElement::euler(2, 1)).isZero());

    CHECK(classicalInvariant(WeylElement::euler(2, 0), act2));
    ActionMatrix hyp{{{Scalar(1), Scalar(-1)}}};
    CHECK(classicalInvariant(classicalOmega(2, {1, 1}), hyp));
    CHECK(!classicalInvariant(WeylElement::position(2, 0), hyp));
}

TEST_CASE("psi operators span L-perp inside A-perp") {
    // n = m + r: no room for psi.
    CHECK(buildPsiClassical(ActionMatrix{{{Scalar(1), Scalar(-1)}}}).empty());

    // Lattice rank 1 inside a 2-dimensional field kernel leaves one psi.
    ActionMatrix act{{{Scalar(1), Scalar::sqrt6(), Scalar(0)}}};
    auto lattice = integerKernelBasis(act);
    REQUIRE(lattice.rank() == 1);
    CHECK(lattice.vectors == IntMat{{0, 0, 1}});
    auto psis = buildPsiClassical(act);
    REQUIRE(psis.size() == 1);
    for (const auto& psi : psis) {
        CHECK(classicalInvariant(psi, act));
        for (const IntVec& iv : lattice.vectors) {
            std::vector<long> l;
            for (const Int& x : iv) l.push_back(x.convert_to<long>());
            CHECK(weylCommutator(psi, classicalOmega(3, l)).isZero());
        }
    }

    // Lattice rank 0: the psis span the whole field kernel.
    ActionMatrix act2{{{Scalar(1), Scalar::sqrt6(), Scalar(0), Scalar(0)},
                       {Scalar(0), Scalar(0), Scalar(1), Scalar::sqrt6()}}};
    CHECK(integerKernelBasis(act2).rank() == 0);
    CHECK(buildPsiClassical(act2).size() == 2);
}

TEST_CASE("Zhu image of the charge current") {
    FreeAlgebraSpec alg(1, 0);
    State gb = makeState(alg, {{{{alg.beta(0), 0}, {alg.gamma(0), 0}}, Scalar(1)}});
    for (const Scalar& a : {Scalar(0), Scalar(Rat(1, 2)), Scalar(1)}) {
        WeylElement img = zhuImage(gb, {a});
        CHECK(img == WeylElement::euler(1, 0) + (Scalar(1) - a) * WeylElement::unit(1));
    }
    // alpha-dependence.
    CHECK(zhuImage(gb, {Scalar(0)}) != zhuImage(gb, {Scalar(1)}));
}

TEST_CASE("Zhu images of L_S and W_S for all three alpha") {
    FreeAlgebraSpec alg(1, 0);
    auto [LS, WS] = buildLSWS(alg, 0);
    MultiPoly e = MultiPoly::variable(1, 0);
    MultiPoly expectL = Scalar(Rat(1, 2)) * (e * e + e);
    MultiPoly expectW = Scalar(Rat(0), Rat(1, 9)) * (e * e * e) +
                        Scalar(Rat(0), Rat(1, 6)) * (e * e) + Scalar(Rat(0), Rat(1, 18)) * e;
    for (const Scalar& a : {Scalar(0), Scalar(Rat(1, 2)), Scalar(1)}) {
        CHECK(weylToEulerPoly(zhuImage(LS, {a})) == expectL);
        CHECK(weylToEulerPoly(zhuImage(WS, {a})) == expectW);
    }
}

TEST_CASE("Zhu image of theta currents") {
    DiagonalAction act(ActionMatrix{{{Scalar(2), Scalar(Rat(1, 3))}}});
    std::vector<Scalar> alpha{Scalar(Rat(1, 5)), Scalar(Rat(3, 7))};
    WeylElement img = zhuImage(buildTheta(act, 0), alpha);
    // <a, alpha> - sum a_j (e_j + 1)
    Scalar pairing = Scalar(2) * alpha[0] + Scalar(Rat(1, 3)) * alpha[1];
    WeylElement expect = pairing * WeylElement::unit(2) -
                         Scalar(2) * (WeylElement::euler(2, 0) + WeylElement::unit(2)) -
                         Scalar(Rat(1, 3)) * (WeylElement::euler(2, 1) + WeylElement::unit(2));
    CHECK(img == expect);
}

TEST_CASE("Zhu image respects the derivative and star identities") {
    FreeAlgebraSpec alg(1, 0);
    std::vector<Scalar> alpha{Scalar(Rat(1, 3))};
    std::vector<Scalar> weightAlpha{alpha[0], Scalar(1) - alpha[0]};
    std::mt19937_64 rng(23);
    auto basis = [&](int tw) { return enumerateBasis(alg, tw); };
    for (int trial = 0; trial < 20; ++trial) {
        int tw = 1 + static_cast<int>(rng() % 5);
        auto monos = basis(tw);
        if (monos.empty()) continue;
        State u(alg);
        u.addTerm(monos[rng() % monos.size()], Scalar(1));
        auto wt = grading(u, Grading::Weight, std::vector<Scalar>{alpha[0]});
        REQUIRE(wt);

        // [d u] = -wt(u) [u]
        CHECK(zhuImage(derive(u), alpha) == (-*wt) * zhuImage(u, alpha));

        // [u] * [v] = sum_j binom(wt u, j) [u o_{j-1} v]
        auto monos2 = basis(1 + static_cast<int>(rng() % 4));
        if (monos2.empty()) continue;
        State v(alg);
        v.addTerm(monos2[rng() % monos2.size()], Scalar(1));
        WeylElement lhs = zhuImage(u, alpha) * zhuImage(v, alpha);
        WeylElement rhs(1);
        for (long j = 0; 2 * (j - 1) < u.maxTwiceWeightStar() + v.maxTwiceWeightStar(); ++j) {
            State prod = circle(u, v, j - 1);
            if (prod.isZero()) continue;
            rhs += binomial(*wt, j) * zhuImage(prod, alpha);
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("Zhu image rejects non-βγ algebras") {
    FreeAlgebraSpec bad(1, 1);
    State u = State::generator(bad, bad.beta(0));
    CHECK_THROWS_AS(zhuImage(u, {Scalar(Rat(1, 2))}), std::invalid_argument);
}

TEST_CASE("Euler polynomial conversions") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        MultiPoly p(2);
        for (int t = 0; t < 3; ++t) {
            std::vector<int> exps{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
            p.addTerm(exps, Scalar(Rat(1 + static_cast<long>(rng() % 5))));
        }
        CHECK(weylToEulerPoly(eulerPolyToWeyl(p)) == p);
    }
    WeylElement offDiagonal = WeylElement::position(1, 0);
    CHECK_THROWS_AS(weylToEulerPoly(offDiagonal), std::invalid_argument);
}

TEST_CASE("cokernel probe") {
    DiagonalAction act(ActionMatrix{{{Scalar(1)}}});
    for (const Scalar& a : {Scalar(0), Scalar(Rat(1, 2))}) {
        for (int D : {3, 6}) {
            CokernelProbe probe = cokernelProbe(act, {a}, D);
            CHECK(probe.codim == 1);
            REQUIRE(probe.representatives.size() == 1);
            CHECK(probe.representatives[0] == WeylElement::euler(1, 0));
            CHECK(probe.thetaAugmentedSpans);
        }
    }
    CHECK_THROWS_AS(cokernelProbe(act, {Scalar(0)}, 0), std::invalid_argument);

    // D=6 sees the zwideal dependence: 7 candidate products, 6 independent.
    // (1, l, w, l^2, lw, l^3 independent; w^2 = (2/27) l^2 (8l+1).)
    CokernelProbe p6 = cokernelProbe(act, {Scalar(Rat(1, 2))}, 6);
    CHECK(p6.codim == 1);
}

TEST_CASE("cokernel probe with a phi direction") {
    DiagonalAction act(ActionMatrix{{{Scalar(1), Scalar(-1)}}});
    CokernelProbe probe = cokernelProbe(act, {Scalar(Rat(1, 2)), Scalar(Rat(1, 2))}, 3);
    // phi image is degree 1, so the theta image is the only missing direction.
    CHECK(probe.codim == 1);
    CHECK(probe.thetaAugmentedSpans);
}
