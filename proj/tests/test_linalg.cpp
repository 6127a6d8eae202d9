#include "vocal/linalg.hpp"

#include <doctest.h>

using namespace vocal;

namespace {
Scalar s6() { return Scalar::sqrt6(); }
}  // namespace

TEST_CASE("field kernel bases") {
    auto k1 = fieldKernelBasis(ActionMatrix{{{Scalar(1), Scalar(1)}}});
    REQUIRE(k1.size() == 1);
    CHECK(k1[0] == ScalarVec{Scalar(1), Scalar(-1)});

    auto k2 = fieldKernelBasis(ActionMatrix{{{Scalar(1), Scalar(0), Scalar(0)}}});
    REQUIRE(k2.size() == 2);
    CHECK(k2[0] == ScalarVec{Scalar(0), Scalar(1), Scalar(0)});
    CHECK(k2[1] == ScalarVec{Scalar(0), Scalar(0), Scalar(1)});

    auto k3 = fieldKernelBasis(ActionMatrix{{{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(-1)}}});
    CHECK(k3.empty());
}

TEST_CASE("kernel vectors annihilate the rows and are orthogonalized") {
    ActionMatrix a{{{Scalar(1), Scalar(1), Scalar(1)}}};
    auto kernel = fieldKernelBasis(a);
    REQUIRE(kernel.size() == 2);
    for (const auto& v : kernel)
        for (const auto& row : a.rows) CHECK(dot(row, v).isZero());
    CHECK(dot(kernel[0], kernel[1]).isZero());
    for (const auto& v : kernel) CHECK(dot(v, v).sign() > 0);

    ActionMatrix b{{{Scalar(1), s6(), Scalar(Rat(1, 2))}}};
    auto kb = fieldKernelBasis(b);
    CHECK(static_cast<int>(kb.size()) + rankOf(b.rows) == 3);
    for (const auto& v : kb) {
        CHECK(dot(b.rows[0], v).isZero());
        CHECK(dot(v, v).sign() > 0);
    }
    CHECK(dot(kb[0], kb[1]).isZero());
}

TEST_CASE("integer kernel bases in Hermite normal form") {
    LatticeBasis k1 = integerKernelBasis(ActionMatrix{{{Scalar(1), Scalar(-1)}}});
    CHECK(k1.vectors == IntMat{{1, 1}});

    LatticeBasis k2 = integerKernelBasis(ActionMatrix{{{Scalar(1), Scalar(1), Scalar(1)}}});
    CHECK(k2.vectors == IntMat{{1, 0, -1}, {0, 1, -1}});

    LatticeBasis k3 = integerKernelBasis(ActionMatrix{{{Scalar(1), s6()}}});
    CHECK(k3.vectors.empty());

    // Rational but non-integer entries clear denominators.
    LatticeBasis k4 = integerKernelBasis(ActionMatrix{{{Scalar(Rat(1, 2)), Scalar(Rat(1, 3))}}});
    CHECK(k4.vectors == IntMat{{2, -3}});
}

TEST_CASE("integer kernel is invariant under row operations") {
    ActionMatrix a{{{Scalar(1), Scalar(1), Scalar(-2)}, {Scalar(0), Scalar(3), Scalar(-3)}}};
    ActionMatrix b{{{Scalar(1), Scalar(4), Scalar(-5)}, {Scalar(0), Scalar(-1), Scalar(1)}}};
    CHECK(integerKernelBasis(a).vectors == integerKernelBasis(b).vectors);
}

TEST_CASE("hermite normal form is canonical") {
    CHECK(hermiteNormalForm({{2, 4}, {1, 3}}) == IntMat{{1, 1}, {0, 2}});
    CHECK(hermiteNormalForm({{-1, 0}, {0, -1}}) == IntMat{{1, 0}, {0, 1}});
    CHECK(hermiteNormalForm({{0, 0}, {3, 6}}) == IntMat{{3, 6}});
    // Entries above a pivot are reduced into [0, pivot).
    CHECK(hermiteNormalForm({{1, -1, 0}, {0, 1, -1}}) == IntMat{{1, 0, -1}, {0, 1, -1}});
}

TEST_CASE("integer kernel correctness") {
    IntMat m{{2, -1, 0}, {0, 1, -2}};
    IntMat k = integerKernel(m);
    REQUIRE(k.size() == 1);
    for (const auto& row : m) {
        Int s = 0;
        for (size_t i = 0; i < row.size(); ++i) s += row[i] * k[0][i];
        CHECK(s == 0);
    }
}

TEST_CASE("rref and affine solves over the field") {
    ScalarMat m{{Scalar(1), s6()}, {s6(), Scalar(6)}};
    CHECK(rankOf(m) == 1);

    ScalarMat a{{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(-1)}};
    auto x = solveAffine(a, {Scalar(3), Scalar(1)});
    REQUIRE(x);
    CHECK(*x == ScalarVec{Scalar(2), Scalar(1)});

    ScalarMat inconsistent{{Scalar(1), Scalar(1)}, {Scalar(2), Scalar(2)}};
    CHECK(!solveAffine(inconsistent, {Scalar(1), Scalar(3)}));

    // Underdetermined: free variables pinned to zero.
    ScalarMat under{{Scalar(1), Scalar(1), Scalar(1)}};
    auto y = solveAffine(under, {Scalar(5)});
    REQUIRE(y);
    CHECK(*y == ScalarVec{Scalar(5), Scalar(0), Scalar(0)});
}
