#pragma once

#include "vocal/scalar.hpp"

#include <map>
#include <vector>

namespace vocal {

/// Sparse commutative polynomial over Q(sqrt 6) in a fixed number of
/// variables. Used for Sym(V ⊕ V*) elements (2n variables), the Euler
/// polynomial algebra E = C[e_1..e_n], and univariate Zhu-ideal checks.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(int vars) : vars_(vars) {}

    static MultiPoly constant(int vars, const Scalar& c);
    static MultiPoly variable(int vars, int index, int power = 1);

    int vars() const { return vars_; }
    const std::map<std::vector<int>, Scalar>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    int totalDegree() const;

    void addTerm(const std::vector<int>& exps, const Scalar& coeff);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Scalar& c, const MultiPoly& p);

    MultiPoly derivative(int var) const;

    bool operator==(const MultiPoly& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

private:
    int vars_ = 0;
    std::map<std::vector<int>, Scalar> terms_;
};

}  // namespace vocal
