#include "vocal/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace vocal {

MultiPoly MultiPoly::constant(int vars, const Scalar& c) {
    MultiPoly p(vars);
    p.addTerm(std::vector<int>(vars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int vars, int index, int power) {
    if (index < 0 || index >= vars) throw std::out_of_range("variable index");
    MultiPoly p(vars);
    std::vector<int> e(vars, 0);
    e[index] = power;
    p.addTerm(e, Scalar(1));
    return p;
}

int MultiPoly::totalDegree() const {
    int d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

void MultiPoly::addTerm(const std::vector<int>& exps, const Scalar& coeff) {
    if (static_cast<int>(exps.size()) != vars_) throw std::invalid_argument("exponent arity");
    if (coeff.isZero()) return;
    auto [it, inserted] = terms_.try_emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.isZero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (vars_ == 0 && terms_.empty()) vars_ = o.vars_;
    if (vars_ != o.vars_) throw std::invalid_argument("polynomial arity mismatch");
    for (const auto& [e, c] : o.terms_) addTerm(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (vars_ == 0 && terms_.empty()) vars_ = o.vars_;
    if (vars_ != o.vars_) throw std::invalid_argument("polynomial arity mismatch");
    for (const auto& [e, c] : o.terms_) addTerm(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ != b.vars_) throw std::invalid_argument("polynomial arity mismatch");
    MultiPoly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<int> e(ea);
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.addTerm(e, ca * cb);
        }
    return r;
}

MultiPoly operator*(const Scalar& c, const MultiPoly& p) {
    MultiPoly r(p.vars());
    if (c.isZero()) return r;
    for (const auto& [e, pc] : p.terms()) r.addTerm(e, c * pc);
    return r;
}

MultiPoly MultiPoly::derivative(int var) const {
    if (var < 0 || var >= vars_) throw std::out_of_range("variable index");
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        std::vector<int> d(e);
        d[var] -= 1;
        r.addTerm(d, Scalar(e[var]) * c);
    }
    return r;
}

}  // namespace vocal
