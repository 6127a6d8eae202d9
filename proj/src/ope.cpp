#include "vocal/ope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace vocal {

namespace {

// The engine works internally in the creation-mode basis: a monomial stands
// for the mode word a1(-k1-1)...ar(-kr-1)|0>, so Wick coefficients pick up
// Π ki! on the way in and lose it on the way out.
using MVec = std::map<Monomial, Scalar>;

void addTo(MVec& acc, const Monomial& m, const Scalar& c) {
    if (c.isZero()) return;
    auto [it, inserted] = acc.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) acc.erase(it);
    }
}

struct Interned {
    MVec v;
    int twiceWtMax = 0;
    int maxDeriv = -1;
};

struct EngineCtx {
    const FreeAlgebraSpec& alg;
    std::vector<Interned> pool;
    std::map<std::tuple<int, long, int>, int> annihMemo;          // (gen, m, vid) -> vid
    std::map<std::tuple<Monomial, long, int>, MVec> wordMemo;     // (word, n, vid) -> value

    explicit EngineCtx(const FreeAlgebraSpec& a) : alg(a) {}

    int intern(MVec v) {
        Interned e;
        e.v = std::move(v);
        for (const auto& [m, c] : e.v) {
            e.twiceWtMax = std::max(e.twiceWtMax, twiceWeightStar(alg, m));
            for (const Factor& f : m) e.maxDeriv = std::max(e.maxDeriv, f.deriv);
        }
        pool.push_back(std::move(e));
        return static_cast<int>(pool.size()) - 1;
    }
};

// Creation mode a(-(deriv+1)) applied on the left of every mode word.
MVec applyCreate(const FreeAlgebraSpec& alg, int gen, int deriv, const MVec& v) {
    MVec out;
    Factor nf{gen, deriv};
    bool oddGen = alg.odd(gen);
    for (const auto& [mono, c] : v) {
        auto pos = std::lower_bound(mono.begin(), mono.end(), nf);
        if (oddGen && pos != mono.end() && *pos == nf) continue;
        int sign = 1;
        if (oddGen)
            for (auto it = mono.begin(); it != pos; ++it)
                if (alg.odd(it->gen)) sign = -sign;
        Monomial m;
        m.reserve(mono.size() + 1);
        m.insert(m.end(), mono.begin(), pos);
        m.push_back(nf);
        m.insert(m.end(), pos, mono.end());
        addTo(out, m, sign > 0 ? c : -c);
    }
    return out;
}

// Annihilation-side mode a(m), m >= 0: commute through the word, picking up
// the scalar contraction [a(m), b(-k-1)] = binom(m, m-k) * (a ∘_{m-k} b) at
// each factor; a(m)|0> = 0 leaves no residual term.
int applyAnnih(EngineCtx& ctx, int gen, long m, int vid) {
    auto key = std::make_tuple(gen, m, vid);
    if (auto it = ctx.annihMemo.find(key); it != ctx.annihMemo.end()) return it->second;

    const FreeAlgebraSpec& alg = ctx.alg;
    bool oddGen = alg.odd(gen);
    MVec out;
    for (const auto& [mono, c] : ctx.pool[vid].v) {
        int sign = 1;
        for (size_t i = 0; i < mono.size(); ++i) {
            long t = m - mono[i].deriv;
            if (t >= 0 && t <= alg.maxContractionOrder()) {
                Scalar s = alg.contraction(gen, mono[i].gen, static_cast<int>(t));
                if (!s.isZero()) {
                    Monomial rest;
                    rest.reserve(mono.size() - 1);
                    rest.insert(rest.end(), mono.begin(), mono.begin() + i);
                    rest.insert(rest.end(), mono.begin() + i + 1, mono.end());
                    Scalar coef = Scalar(Rat(intBinomial(m, t))) * s * c;
                    addTo(out, rest, sign > 0 ? coef : -coef);
                }
            }
            if (oddGen && alg.odd(mono[i].gen)) sign = -sign;
        }
    }
    int rid = ctx.intern(std::move(out));
    ctx.annihMemo.emplace(key, rid);
    return rid;
}

// Iterate formula for (a(-m) w)(n) acting on an interned state:
//   sum_j binom(m+j-1, j) [ a(-m-j) (w(n+j) v)
//                           + (-1)^{m+1+|a||w|} w(n-m-j) (a(j) v) ].
MVec wordAction(EngineCtx& ctx, const Monomial& word, long n, int vid) {
    if (ctx.pool[vid].v.empty()) return {};
    if (word.empty()) return n == -1 ? ctx.pool[vid].v : MVec{};

    auto key = std::make_tuple(word, n, vid);
    if (auto it = ctx.wordMemo.find(key); it != ctx.wordMemo.end()) return it->second;

    const FreeAlgebraSpec& alg = ctx.alg;
    int gen = word[0].gen;
    long m = word[0].deriv + 1;
    Monomial rest(word.begin() + 1, word.end());
    int twRest = twiceWeightStar(alg, rest);
    int parA = alg.odd(gen) ? 1 : 0;
    int parRest = parityOf(alg, rest);

    MVec out;
    long twBound = twRest + ctx.pool[vid].twiceWtMax;
    for (long j = 0; 2 * (n + j) < twBound; ++j) {
        MVec x = wordAction(ctx, rest, n + j, vid);
        if (x.empty()) continue;
        Scalar b(Rat(intBinomial(m + j - 1, j)));
        MVec created = applyCreate(alg, gen, static_cast<int>(m + j - 1), x);
        for (const auto& [mono, c] : created) addTo(out, mono, b * c);
    }

    int sgn = ((m + 1 + parA * parRest) % 2 == 0) ? 1 : -1;
    long maxJ = ctx.pool[vid].maxDeriv + alg.maxContractionOrder();
    for (long j = 0; j <= maxJ; ++j) {
        int yid = applyAnnih(ctx, gen, j, vid);
        if (ctx.pool[yid].v.empty()) continue;
        MVec y = wordAction(ctx, rest, n - m - j, yid);
        if (y.empty()) continue;
        Scalar b(Rat(intBinomial(m + j - 1, j)));
        if (sgn < 0) b = -b;
        for (const auto& [mono, c] : y) addTo(out, mono, b * c);
    }

    ctx.wordMemo.emplace(std::move(key), out);
    return out;
}

Scalar wickToModeFactor(const Monomial& m) {
    Int f = 1;
    for (const Factor& fac : m) f *= factorial(fac.deriv);
    return Scalar(Rat(f));
}

}  // namespace

State circle(const State& u, const State& v, long n) {
    if (!u.algebra() || !v.algebra()) {
        const FreeAlgebraSpec* alg = u.algebra() ? u.algebra() : v.algebra();
        return alg ? State(*alg) : State();
    }
    if (*u.algebra() != *v.algebra()) throw std::invalid_argument("mismatched algebras");
    const FreeAlgebraSpec& alg = *u.algebra();

    EngineCtx ctx(alg);
    MVec vm;
    for (const auto& [mono, c] : v.terms()) vm.emplace(mono, wickToModeFactor(mono) * c);
    int vid = ctx.intern(std::move(vm));

    MVec acc;
    for (const auto& [mono, c] : u.terms()) {
        Scalar cu = wickToModeFactor(mono) * c;
        MVec r = wordAction(ctx, mono, n, vid);
        for (const auto& [rm, rc] : r) addTo(acc, rm, cu * rc);
    }

    State out(alg);
    for (const auto& [mono, c] : acc) out.addTerm(mono, c / wickToModeFactor(mono));
    return out;
}

State wick(const State& u, const State& v) { return circle(u, v, -1); }

std::vector<std::pair<long, State>> opeSingular(const State& u, const State& v) {
    std::vector<std::pair<long, State>> out;
    if (u.isZero() || v.isZero()) return out;
    long tw = u.maxTwiceWeightStar() + v.maxTwiceWeightStar();
    for (long n = (tw - 1) / 2; n >= 0; --n) {
        State p = circle(u, v, n);
        if (!p.isZero()) out.emplace_back(n, std::move(p));
    }
    return out;
}

bool commutes(const State& u, const State& v) {
    long tw = u.maxTwiceWeightStar() + v.maxTwiceWeightStar();
    for (long n = 0; 2 * n < tw; ++n)
        if (!circle(u, v, n).isZero()) return false;
    return true;
}

bool verifyVirasoro(const State& L, const Scalar& c) {
    if (L.isZero() || !L.algebra()) return false;
    const FreeAlgebraSpec& alg = *L.algebra();
    if (circle(L, L, 0) != derive(L)) return false;
    if (circle(L, L, 1) != Scalar(2) * L) return false;
    if (!circle(L, L, 2).isZero()) return false;
    if (circle(L, L, 3) != (c / Scalar(2)) * State::vacuum(alg)) return false;
    long tw = 2 * L.maxTwiceWeightStar();
    for (long n = 4; 2 * n < tw; ++n)
        if (!circle(L, L, n).isZero()) return false;
    return true;
}

}  // namespace vocal
