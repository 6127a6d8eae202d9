#include "vocal/scalar.hpp"

#include <doctest.h>

using namespace vocal;

TEST_CASE("field arithmetic in Q(sqrt 6)") {
    Scalar s6 = Scalar::sqrt6();
    CHECK(s6 * s6 == Scalar(6));
    Scalar a(Rat(1, 2), Rat(-1, 3));
    Scalar b(Rat(2, 7), Rat(5, 4));
    CHECK(a + b == Scalar(Rat(11, 14), Rat(11, 12)));
    CHECK(a * b.inverse() * b == a);
    CHECK((a - a).isZero());
    CHECK(a * (b + Scalar(1)) == a * b + a);
    CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
}

TEST_CASE("inverse uses the conjugate") {
    Scalar x(Rat(1), Rat(1));  // 1 + sqrt6
    CHECK(x.inverse() == Scalar(Rat(-1, 5), Rat(1, 5)));
    CHECK(x * x.inverse() == Scalar(1));
}

TEST_CASE("sign under the real embedding") {
    CHECK(Scalar(0).sign() == 0);
    CHECK(Scalar(Rat(1), Rat(-1)).sign() == -1);   // 1 - sqrt6 < 0
    CHECK(Scalar(Rat(-1), Rat(1)).sign() == 1);    // -1 + sqrt6 > 0
    CHECK(Scalar(Rat(5), Rat(-2)).sign() == 1);    // 25 > 24
    CHECK(Scalar(Rat(-5), Rat(2)).sign() == -1);
    CHECK(Scalar(Rat(2), Rat(-1)).sign() == -1);   // 4 < 6
}

TEST_CASE("canonical text form") {
    CHECK(Scalar(0).str() == "0");
    CHECK(Scalar(Rat(-2, 3)).str() == "-2/3");
    CHECK(Scalar(Rat(0), Rat(1, 9)).str() == "1/9*sqrt6");
    CHECK(Scalar(Rat(1), Rat(1, 2)).str() == "1+1/2*sqrt6");
    CHECK(Scalar(Rat(1, 2), Rat(-1)).str() == "1/2-1*sqrt6");
}

TEST_CASE("generalized binomials") {
    CHECK(binomial(Scalar(5), 2) == Scalar(10));
    CHECK(binomial(Scalar(Rat(1, 2)), 2) == Scalar(Rat(-1, 8)));
    CHECK(binomial(Scalar::sqrt6(), 1) == Scalar::sqrt6());
    CHECK(binomial(Scalar(3), 0) == Scalar(1));
    CHECK(intBinomial(-2, 3) == Int(-4));
    CHECK(intBinomial(4, 2) == Int(6));
    CHECK(intBinomial(1, 3) == Int(0));
    CHECK(factorial(5) == Int(120));
}

TEST_CASE("rational strings") {
    CHECK(ratToString(Rat(3, 6)) == "1/2");
    CHECK(ratFromString("-7/21") == Rat(-1, 3));
    CHECK(ratFromString("42") == Rat(42));
    CHECK_THROWS_AS(ratFromString("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(ratFromString("abc"), std::invalid_argument);
}
