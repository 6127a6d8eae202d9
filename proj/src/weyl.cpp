#include "vocal/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace vocal {

WeylElement WeylElement::unit(int n) {
    WeylElement w(n);
    w.addTerm(std::vector<int>(n, 0), std::vector<int>(n, 0), Scalar(1));
    return w;
}

WeylElement WeylElement::position(int n, int j) {
    WeylElement w(n);
    std::vector<int> x(n, 0), d(n, 0);
    x.at(j) = 1;
    w.addTerm(x, d, Scalar(1));
    return w;
}

WeylElement WeylElement::derivative(int n, int j) {
    WeylElement w(n);
    std::vector<int> x(n, 0), d(n, 0);
    d.at(j) = 1;
    w.addTerm(x, d, Scalar(1));
    return w;
}

WeylElement WeylElement::euler(int n, int j) {
    WeylElement w(n);
    std::vector<int> x(n, 0), d(n, 0);
    x.at(j) = 1;
    d.at(j) = 1;
    w.addTerm(x, d, Scalar(1));
    return w;
}

std::optional<Scalar> WeylElement::scalarPart() const {
    if (terms_.empty()) return Scalar(0);
    if (terms_.size() > 1) return std::nullopt;
    const auto& [key, c] = *terms_.begin();
    auto allZero = [](const std::vector<int>& v) {
        return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
    };
    if (allZero(key.first) && allZero(key.second)) return c;
    return std::nullopt;
}

int WeylElement::bernsteinDegree() const {
    int deg = 0;
    for (const auto& [key, c] : terms_)
        deg = std::max(deg, std::accumulate(key.first.begin(), key.first.end(), 0) +
                                std::accumulate(key.second.begin(), key.second.end(), 0));
    return deg;
}

void WeylElement::addTerm(const std::vector<int>& x, const std::vector<int>& d,
                          const Scalar& coeff) {
    if (static_cast<int>(x.size()) != n_ || static_cast<int>(d.size()) != n_)
        throw std::invalid_argument("Weyl term arity mismatch");
    if (coeff.isZero()) return;
    Key key{x, d};
    auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.isZero()) terms_.erase(it);
    }
}

WeylElement WeylElement::operator-() const {
    WeylElement r(*this);
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
    if (n_ == 0 && terms_.empty()) n_ = o.n_;
    if (n_ != o.n_) throw std::invalid_argument("Weyl arity mismatch");
    for (const auto& [k, c] : o.terms_) addTerm(k.first, k.second, c);
    return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
    if (n_ == 0 && terms_.empty()) n_ = o.n_;
    if (n_ != o.n_) throw std::invalid_argument("Weyl arity mismatch");
    for (const auto& [k, c] : o.terms_) addTerm(k.first, k.second, -c);
    return *this;
}

WeylElement operator*(const Scalar& c, const WeylElement& w) {
    WeylElement r(w.n_);
    if (c.isZero()) return r;
    for (const auto& [k, wc] : w.terms_) r.terms_.emplace(k, c * wc);
    return r;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Weyl arity mismatch");
    int n = a.n_;
    WeylElement r(n);
    // ∂_i^l x'_i^k = Σ_s binom(l,s) binom(k,s) s! x'^{k-s} ∂^{l-s}, per variable.
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            std::vector<int> smax(n);
            for (int i = 0; i < n; ++i) smax[i] = std::min(ka.second[i], kb.first[i]);
            std::vector<int> s(n, 0);
            while (true) {
                Scalar coef = ca * cb;
                std::vector<int> x(n), d(n);
                for (int i = 0; i < n; ++i) {
                    coef *= Scalar(Rat(intBinomial(ka.second[i], s[i]) *
                                       intBinomial(kb.first[i], s[i]) * factorial(s[i])));
                    x[i] = ka.first[i] + kb.first[i] - s[i];
                    d[i] = ka.second[i] + kb.second[i] - s[i];
                }
                r.addTerm(x, d, coef);
                int i = 0;
                while (i < n && s[i] == smax[i]) s[i++] = 0;
                if (i == n) break;
                ++s[i];
            }
        }
    }
    return r;
}

WeylElement weylProduct(const WeylElement& a, const WeylElement& b) { return a * b; }

WeylElement weylCommutator(const WeylElement& a, const WeylElement& b) {
    return a * b - b * a;
}

WeylElement buildTau(const ActionMatrix& act, int i) {
    if (i < 0 || i >= act.rowCount()) throw std::out_of_range("action row index");
    int n = act.cols();
    WeylElement t(n);
    for (int j = 0; j < n; ++j) t += (-act.rows[i][j]) * WeylElement::euler(n, j);
    return t;
}

bool classicalInvariant(const WeylElement& w, const ActionMatrix& act) {
    for (int i = 0; i < act.rowCount(); ++i)
        if (!weylCommutator(buildTau(act, i), w).isZero()) return false;
    return true;
}

std::vector<WeylElement> buildPsiClassical(const ActionMatrix& act) {
    LatticeBasis lattice = integerKernelBasis(act);
    ActionMatrix stacked = act;
    for (const IntVec& v : lattice.vectors) {
        ScalarVec row;
        row.reserve(v.size());
        for (const Int& x : v) row.emplace_back(Rat(x));
        stacked.rows.push_back(std::move(row));
    }
    std::vector<WeylElement> out;
    for (const ScalarVec& s : fieldKernelBasis(stacked)) {
        WeylElement psi(act.cols());
        for (int j = 0; j < act.cols(); ++j) psi += s[j] * WeylElement::euler(act.cols(), j);
        out.push_back(std::move(psi));
    }
    return out;
}

WeylElement classicalOmega(int n, const std::vector<long>& l) {
    if (static_cast<int>(l.size()) != n) throw std::invalid_argument("lattice vector length");
    std::vector<int> x(n, 0), d(n, 0);
    for (int j = 0; j < n; ++j) {
        if (l[j] > 0)
            x[j] = static_cast<int>(l[j]);
        else
            d[j] = static_cast<int>(-l[j]);
    }
    WeylElement w(n);
    w.addTerm(x, d, Scalar(1));
    return w;
}

}  // namespace vocal
