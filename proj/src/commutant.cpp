#include "vocal/commutant.hpp"

#include "vocal/w3.hpp"

#include <algorithm>
#include <stdexcept>

namespace vocal {

DiagonalAction::DiagonalAction(ActionMatrix mat)
    : algebra(mat.cols(), 0), matrix(std::move(mat)) {
    if (matrix.rowCount() < 1 || matrix.cols() < 1)
        throw std::invalid_argument("action matrix must be nonempty");
    for (const auto& row : matrix.rows)
        if (static_cast<int>(row.size()) != matrix.cols())
            throw std::invalid_argument("ragged action matrix");
    if (rankOf(matrix.rows) != matrix.rowCount())
        throw std::invalid_argument(
            "action matrix is rank-deficient (non-faithful action); quotient g by ker(rho) "
            "and pass the reduced matrix");
}

State buildTheta(const DiagonalAction& act, int i) {
    if (i < 0 || i >= act.m()) throw std::out_of_range("action row index");
    State s(act.algebra);
    for (int j = 0; j < act.n(); ++j)
        s.addTerm(Monomial{{act.algebra.beta(j), 0}, {act.algebra.gamma(j), 0}},
                  -act.matrix.rows[i][j]);
    return s;
}

State buildPhi(const DiagonalAction& act, const ScalarVec& b) {
    if (static_cast<int>(b.size()) != act.n()) throw std::invalid_argument("phi vector length");
    for (const auto& row : act.matrix.rows)
        if (!dot(row, b).isZero())
            throw std::invalid_argument("phi vector is not orthogonal to the action");
    State s(act.algebra);
    for (int j = 0; j < act.n(); ++j)
        s.addTerm(Monomial{{act.algebra.beta(j), 0}, {act.algebra.gamma(j), 0}}, -b[j]);
    return s;
}

State buildOmega(const FreeAlgebraSpec& alg, const std::vector<long>& l) {
    if (static_cast<int>(l.size()) != alg.bgPairs())
        throw std::invalid_argument("lattice vector length");
    Monomial mono;
    for (int j = 0; j < alg.bgPairs(); ++j) {
        int gen = l[j] > 0 ? alg.gamma(j) : alg.beta(j);
        for (long i = 0; i < (l[j] < 0 ? -l[j] : l[j]); ++i) mono.push_back(Factor{gen, 0});
    }
    std::sort(mono.begin(), mono.end());
    State s(alg);
    s.addTerm(mono, Scalar(1));
    return s;
}

State buildOmega(const DiagonalAction& act, const std::vector<long>& l) {
    return buildOmega(act.algebra, l);
}

bool isInvariant(const State& u, const DiagonalAction& act) {
    for (int i = 0; i < act.m(); ++i)
        if (!commutes(buildTheta(act, i), u)) return false;
    return true;
}

std::vector<NamedState> generatorSet(const DiagonalAction& act) {
    std::vector<NamedState> out;
    auto kernel = fieldKernelBasis(act.matrix);
    for (size_t i = 0; i < kernel.size(); ++i)
        out.push_back({"phi" + std::to_string(i + 1), buildPhi(act, kernel[i])});
    for (int j = 0; j < act.n(); ++j) {
        auto [L, W] = buildLSWS(act.algebra, j);
        out.push_back({"L" + std::to_string(j + 1), std::move(L)});
        out.push_back({"W" + std::to_string(j + 1), std::move(W)});
    }
    LatticeBasis lattice = integerKernelBasis(act.matrix);
    auto name = [](const IntVec& v, int sign) {
        std::string s = "omega[";
        for (size_t j = 0; j < v.size(); ++j) {
            if (j) s += ",";
            s += Int(sign * v[j]).str();
        }
        return s + "]";
    };
    for (const IntVec& v : lattice.vectors) {
        std::vector<long> l(v.size()), ml(v.size());
        for (size_t j = 0; j < v.size(); ++j) {
            l[j] = v[j].convert_to<long>();
            ml[j] = -l[j];
        }
        out.push_back({name(v, 1), buildOmega(act, l)});
        out.push_back({name(v, -1), buildOmega(act, ml)});
    }
    return out;
}

LatticeContraction latticeContraction(const std::vector<long>& l, const std::vector<long>& lp) {
    if (l.size() != lp.size()) throw std::invalid_argument("lattice vector lengths differ");
    long d = -1;
    Scalar coeff(1);
    for (size_t j = 0; j < l.size(); ++j) {
        if (l[j] == 0 || lp[j] == 0 || (l[j] > 0) == (lp[j] > 0)) continue;
        long aj = l[j] < 0 ? -l[j] : l[j];
        long bj = lp[j] < 0 ? -lp[j] : lp[j];
        long dj = std::min(aj, bj);
        long ej = std::max(aj, bj);
        d += dj;
        Scalar f(Rat(factorial(ej), factorial(ej - dj)));
        if (l[j] > 0 && dj % 2 != 0) f = -f;  // (-1)^{k_j} with k_j = d_j when l_j > 0
        coeff *= f;
    }
    return {d, coeff};
}

std::vector<Monomial> enumerateBasis(const FreeAlgebraSpec& alg, int twiceWeight) {
    std::vector<Monomial> out;
    Monomial current;
    // Factors in ascending canonical order; weight budget in halves.
    auto rec = [&](auto&& self, int budget, Factor minF) -> void {
        if (budget == 0) {
            out.push_back(current);
            return;
        }
        for (int g = minF.gen; g < alg.generatorCount(); ++g) {
            int base = alg.twiceWeightStar(g);
            for (int k = (g == minF.gen ? minF.deriv : 0); base + 2 * k <= budget; ++k) {
                Factor f{g, k};
                if (alg.odd(g) && !current.empty() && current.back() == f) continue;
                current.push_back(f);
                self(self, budget - base - 2 * k, f);
                current.pop_back();
            }
        }
    };
    if (twiceWeight >= 0) rec(rec, twiceWeight, Factor{0, 0});
    return out;
}

std::vector<Monomial> enumerateBasis(const FreeAlgebraSpec& alg, int twiceWeight,
                                     const ChargeConstraint& charge) {
    auto chargeOk = [&](const Monomial& m) {
        if (std::holds_alternative<long>(charge)) {
            long q = 0;
            for (const Factor& f : m)
                q += alg.kind(f.gen) == GenKind::Gamma ? 1
                     : alg.kind(f.gen) == GenKind::Beta ? -1
                                                        : 0;
            return q == std::get<long>(charge);
        }
        const auto& vec = std::get<std::vector<long>>(charge);
        std::vector<long> q(vec.size(), 0);
        for (const Factor& f : m) {
            if (alg.kind(f.gen) == GenKind::Gamma) q[alg.pairOf(f.gen)] += 1;
            if (alg.kind(f.gen) == GenKind::Beta) q[alg.pairOf(f.gen)] -= 1;
        }
        return q == vec;
    };
    std::vector<Monomial> out = enumerateBasis(alg, twiceWeight);
    std::erase_if(out, [&](const Monomial& m) { return !chargeOk(m); });
    return out;
}

namespace {

// Rows of the exact linear system {θ^{ξ_i} ∘_p · = 0} over a monomial basis.
ScalarMat thetaConstraintMatrix(const DiagonalAction& act, const std::vector<Monomial>& basis,
                                long maxPole) {
    std::map<std::pair<long, Monomial>, size_t> rowIndex;  // (pole, target monomial)
    ScalarMat rows;
    for (int i = 0; i < act.m(); ++i) {
        State theta = buildTheta(act, i);
        for (size_t col = 0; col < basis.size(); ++col) {
            State b(act.algebra);
            b.addTerm(basis[col], Scalar(1));
            for (long p = 0; p <= maxPole; ++p) {
                State img = circle(theta, b, p);
                for (const auto& [mono, c] : img.terms()) {
                    auto key = std::make_pair(p + static_cast<long>(i) * (maxPole + 1), mono);
                    auto [it, inserted] = rowIndex.try_emplace(key, rows.size());
                    if (inserted) rows.emplace_back(basis.size(), Scalar(0));
                    rows[it->second][col] += c;
                }
            }
        }
    }
    return rows;
}

}  // namespace

std::vector<State> gradedCommutantBasis(const DiagonalAction& act, const Rat& w,
                                        const ChargeConstraint& charge) {
    Rat tw = 2 * w;
    if (w < 0 || denominator(tw) != 1)
        throw std::invalid_argument("weight must lie in (1/2)Z>=0");
    int twiceWeight = numerator(tw).convert_to<int>();
    std::vector<Monomial> basis = enumerateBasis(act.algebra, twiceWeight, charge);
    if (basis.empty()) return {};

    // Pole bound: p < wt*(θ) + w = 1 + w.
    long maxPole = twiceWeight / 2;
    ScalarMat constraints = thetaConstraintMatrix(act, basis, maxPole);

    std::vector<ScalarVec> kernel = kernelBasis(
        constraints.empty() ? ScalarMat{ScalarVec(basis.size(), Scalar(0))} : constraints);
    ScalarMat echelon(kernel.begin(), kernel.end());
    rowReduce(echelon);

    std::vector<State> out;
    for (const ScalarVec& v : echelon) {
        State s(act.algebra);
        bool nonzero = false;
        for (size_t col = 0; col < basis.size(); ++col)
            if (!v[col].isZero()) {
                s.addTerm(basis[col], v[col]);
                nonzero = true;
            }
        if (nonzero) out.push_back(std::move(s));
    }
    return out;
}

State quantumCorrect(const DiagonalAction& act, int nPower) {
    if (nPower < 2) throw std::invalid_argument("quantum correction needs n >= 2");
    if (act.n() != 1 || act.matrix.rows[0][0] != Scalar(1))
        throw std::invalid_argument("quantum correction is defined for the rank-one action (1)");

    State theta = buildTheta(act, 0);
    State thetaPow = theta;
    for (int i = 1; i < nPower; ++i) thetaPow = wick(theta, thetaPow);

    std::vector<Monomial> candidates = enumerateBasis(act.algebra, 2 * nPower, 0L);
    std::erase_if(candidates,
                  [&](const Monomial& m) { return static_cast<int>(m.size()) > 2 * nPower - 2; });
    std::sort(candidates.begin(), candidates.end(), [](const Monomial& a, const Monomial& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    // θ ∘_p (θ^n + Σ c_b b) = 0 for 0 <= p <= n. Columns: candidates; rhs from θ^n.
    std::map<std::pair<long, Monomial>, size_t> rowIndex;
    ScalarMat rows;
    ScalarVec rhs;
    auto rowOf = [&](long p, const Monomial& mono) {
        auto [it, inserted] = rowIndex.try_emplace({p, mono}, rows.size());
        if (inserted) {
            rows.emplace_back(candidates.size(), Scalar(0));
            rhs.emplace_back(0);
        }
        return it->second;
    };
    for (long p = 0; p <= nPower; ++p) {
        State img = circle(theta, thetaPow, p);
        for (const auto& [mono, c] : img.terms()) rhs[rowOf(p, mono)] -= c;
        for (size_t col = 0; col < candidates.size(); ++col) {
            State b(act.algebra);
            b.addTerm(candidates[col], Scalar(1));
            State cb = circle(theta, b, p);
            for (const auto& [mono, c] : cb.terms()) rows[rowOf(p, mono)][col] += c;
        }
    }
    auto sol = solveAffine(rows, rhs);
    if (!sol)
        throw std::runtime_error("no quantum correction found; this contradicts the correction "
                                 "lemma and indicates an engine defect");
    State out = thetaPow;
    for (size_t col = 0; col < candidates.size(); ++col)
        out.addTerm(candidates[col], (*sol)[col]);
    return out;
}

namespace {

// Recognize a lattice monomial ω_l; nullopt when the monomial has derivatives
// or mixes β and γ in one coordinate.
std::optional<std::vector<long>> latticePoint(const FreeAlgebraSpec& alg, const Monomial& m) {
    std::vector<long> l(alg.bgPairs(), 0);
    std::vector<bool> sawBeta(alg.bgPairs(), false), sawGamma(alg.bgPairs(), false);
    for (const Factor& f : m) {
        if (f.deriv != 0) return std::nullopt;
        GenKind k = alg.kind(f.gen);
        int p = alg.pairOf(f.gen);
        if (k == GenKind::Beta) {
            l[p] -= 1;
            sawBeta[p] = true;
        } else if (k == GenKind::Gamma) {
            l[p] += 1;
            sawGamma[p] = true;
        } else {
            return std::nullopt;
        }
        if (sawBeta[p] && sawGamma[p]) return std::nullopt;
    }
    return l;
}

}  // namespace

UnitExtraction extractUnit(const DiagonalAction& act, const State& u) {
    if (u.isZero()) throw std::invalid_argument("cannot extract a unit from zero");
    std::vector<std::pair<std::vector<long>, Scalar>> parts;
    for (const auto& [mono, c] : u.terms()) {
        auto l = latticePoint(act.algebra, mono);
        if (!l) throw std::invalid_argument("state is not in the span of the lattice monomials");
        parts.emplace_back(*l, c);
    }
    auto degree = [](const std::vector<long>& l) {
        long d = 0;
        for (long x : l) d += x < 0 ? -x : x;
        return d;
    };
    const std::vector<long>* best = &parts[0].first;
    for (const auto& [l, c] : parts) {
        long dl = degree(l), db = degree(*best);
        if (dl > db || (dl == db && l > *best)) best = &l;
    }
    UnitExtraction out;
    out.l = *best;
    out.d = degree(*best);
    std::vector<long> ml(out.l.size());
    for (size_t j = 0; j < ml.size(); ++j) ml[j] = -out.l[j];
    State contracted = circle(buildOmega(act, ml), u, out.d - 1);
    auto k = contracted.scalarPart();
    if (!k || k->isZero())
        throw std::runtime_error("unit extraction did not produce a scalar; engine defect");
    out.c = k->inverse();
    if (out.c * contracted != State::vacuum(act.algebra))
        throw std::runtime_error("unit extraction contract failed; engine defect");
    return out;
}

State conformalBPrime(const DiagonalAction& act, const ScalarVec& lambda) {
    auto kernel = fieldKernelBasis(act.matrix);
    if (lambda.size() != kernel.size())
        throw std::invalid_argument("lambda length must match the field kernel rank");
    State L(act.algebra);
    for (int j = 0; j < act.n(); ++j) L += buildLSWS(act.algebra, j).first;
    for (size_t i = 0; i < kernel.size(); ++i) {
        Scalar q = dot(kernel[i], kernel[i]);
        if (q.isZero()) throw std::invalid_argument("degenerate phi direction");
        State phi = buildPhi(act, kernel[i]);
        L += (Scalar(-1) / (Scalar(2) * q)) * wick(phi, phi) + lambda[i] * derive(phi);
    }
    return L;
}

Scalar conformalBPrimeCentralCharge(const DiagonalAction& act, const ScalarVec& lambda) {
    auto kernel = fieldKernelBasis(act.matrix);
    if (lambda.size() != kernel.size())
        throw std::invalid_argument("lambda length must match the field kernel rank");
    Scalar c(Rat(-2 * act.n()));
    for (size_t i = 0; i < kernel.size(); ++i)
        c += Scalar(1) + Scalar(12) * lambda[i] * lambda[i] * dot(kernel[i], kernel[i]);
    return c;
}

}  // namespace vocal
