#include "vocal/scalar.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace vocal {

Scalar Scalar::inverse() const {
    if (isZero()) throw std::domain_error("Scalar: division by zero");
    // a² - 6b² never vanishes for (a,b) != (0,0) since 6 is not a rational square.
    Rat norm = rat_ * rat_ - 6 * irr_ * irr_;
    return Scalar(rat_ / norm, -irr_ / norm);
}

int Scalar::sign() const {
    int sr = rat_.sign();
    int si = irr_.sign();
    if (si == 0) return sr;
    if (sr == 0) return si;
    if (sr == si) return sr;
    // Mixed signs: compare a² against 6b²; a + b√6 has the sign of the larger part.
    Rat a2 = rat_ * rat_;
    Rat b2 = 6 * irr_ * irr_;
    if (a2 == b2) return 0;  // cannot happen for rationals, kept for completeness
    return a2 > b2 ? sr : si;
}

std::string ratToString(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

Rat ratFromString(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: '" + text + "'");
    }
}

std::string Scalar::str() const {
    if (isZero()) return "0";
    std::string out;
    if (rat_ != 0) out = ratToString(rat_);
    if (irr_ != 0) {
        if (!out.empty() && irr_ > 0) out += "+";
        out += ratToString(irr_);
        out += "*sqrt6";
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar binomial(const Scalar& m, long j) {
    if (j < 0) return Scalar(0);
    Scalar num(1);
    for (long i = 0; i < j; ++i) num *= m - Scalar(i);
    return num / Scalar(Rat(factorial(j)));
}

Int intBinomial(long m, long j) {
    if (j < 0) return 0;
    Int num = 1;
    for (long i = 0; i < j; ++i) num *= Int(m - i);
    return num / factorial(j);
}

Int factorial(long n) {
    Int f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace vocal
