#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace vocal {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Element a + b*sqrt(6) of the real quadratic field Q(sqrt 6).
///
/// All arithmetic is exact; equality is structural. The real embedding
/// (sqrt 6 > 0) gives a total order used by sign().
class Scalar {
public:
    Scalar() : rat_(0), irr_(0) {}
    Scalar(int v) : rat_(v), irr_(0) {}
    Scalar(long v) : rat_(v), irr_(0) {}
    Scalar(Int v) : rat_(std::move(v)), irr_(0) {}
    Scalar(Rat rat) : rat_(std::move(rat)), irr_(0) {}
    Scalar(Rat rat, Rat irr) : rat_(std::move(rat)), irr_(std::move(irr)) {}

    static Scalar sqrt6() { return Scalar(Rat(0), Rat(1)); }
    static Scalar fraction(long num, long den) { return Scalar(Rat(num, den)); }

    const Rat& rat() const { return rat_; }
    const Rat& irr() const { return irr_; }

    bool isZero() const { return rat_ == 0 && irr_ == 0; }
    bool isRational() const { return irr_ == 0; }
    bool isOne() const { return rat_ == 1 && irr_ == 0; }

    Scalar operator-() const { return Scalar(-rat_, -irr_); }
    Scalar& operator+=(const Scalar& o) {
        rat_ += o.rat_;
        irr_ += o.irr_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        rat_ -= o.rat_;
        irr_ -= o.irr_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        Rat r = rat_ * o.rat_ + 6 * irr_ * o.irr_;
        Rat i = rat_ * o.irr_ + irr_ * o.rat_;
        rat_ = std::move(r);
        irr_ = std::move(i);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Multiplicative inverse; throws on zero. Uses the conjugate:
    /// (a + b√6)^{-1} = (a - b√6) / (a² - 6b²).
    Scalar inverse() const;

    /// Sign under the real embedding: -1, 0 or +1.
    int sign() const;

    bool operator==(const Scalar& o) const { return rat_ == o.rat_ && irr_ == o.irr_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Structural order (for use as a map key), not the real-embedding order.
    bool operator<(const Scalar& o) const {
        if (rat_ != o.rat_) return rat_ < o.rat_;
        return irr_ < o.irr_;
    }

    /// Canonical text form, e.g. "0", "-2/3", "1/9*sqrt6", "1+1/2*sqrt6".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
    Rat rat_;
    Rat irr_;
};

/// Generalized binomial coefficient m(m-1)...(m-j+1)/j! with m in Q(sqrt 6).
Scalar binomial(const Scalar& m, long j);

/// Plain integer binomial as an exact integer (0 for j < 0 or m < j with m >= 0).
Int intBinomial(long m, long j);

Int factorial(long n);

std::string ratToString(const Rat& r);
Rat ratFromString(const std::string& text);

}  // namespace vocal
