#include "vocal/commutant.hpp"
#include "vocal/expr.hpp"
#include "vocal/ope.hpp"
#include "vocal/selftest.hpp"
#include "vocal/serialize.hpp"
#include "vocal/transvect.hpp"
#include "vocal/w3.hpp"
#include "vocal/zhu.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <optional>

namespace {

using namespace vocal;

struct Options {
    std::string algebraFile;
    std::string actionFile;
    std::string alphaSpec;
    std::string lambdaSpec;
    std::string format = "text";
};

std::vector<Scalar> parseScalarList(const std::string& spec) {
    std::vector<Scalar> out;
    if (spec.empty()) return out;
    size_t start = 0;
    while (start <= spec.size()) {
        size_t comma = spec.find(',', start);
        std::string piece = spec.substr(start, comma == std::string::npos ? comma : comma - start);
        out.push_back(parseScalarLiteral(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

struct Session {
    Options opt;
    std::optional<FreeAlgebraSpec> algebra;
    std::unique_ptr<DiagonalAction> action;

    void init() {
        if (!opt.actionFile.empty())
            action = std::make_unique<DiagonalAction>(loadActionFile(opt.actionFile));
        if (!opt.algebraFile.empty())
            algebra = loadAlgebraFile(opt.algebraFile);
        else if (action)
            algebra = action->algebra;
        else
            algebra = FreeAlgebraSpec(1, 1, {Scalar(1)});  // default sandbox algebra
        if (action && action->algebra != *algebra)
            throw std::invalid_argument("action and algebra files disagree on the βγ pair count");
    }

    ElabContext ctx() const {
        ElabContext c;
        c.algebra = &*algebra;
        c.action = action.get();
        c.alpha = parseScalarList(opt.alphaSpec);
        return c;
    }

    bool json() const { return opt.format == "json"; }

    void emitState(const State& s) const {
        if (json())
            std::cout << toJson(s).dump(2) << "\n";
        else
            std::cout << printState(s) << "\n";
    }
    void emitWeyl(const WeylElement& w) const {
        if (json())
            std::cout << toJson(w).dump(2) << "\n";
        else
            std::cout << printWeyl(w) << "\n";
    }
};

int cmdOpe(Session& s, const std::string& a, const std::string& b) {
    State u = parseState(a, s.ctx());
    State v = parseState(b, s.ctx());
    auto table = opeSingular(u, v);
    if (s.json()) {
        Json j = Json::array();
        for (const auto& [n, st] : table) j.push_back({{"n", n}, {"state", toJson(st)}});
        std::cout << j.dump(2) << "\n";
    } else if (table.empty()) {
        std::cout << "regular\n";
    } else {
        for (const auto& [n, st] : table) std::cout << n << ": " << printState(st) << "\n";
    }
    return 0;
}

int cmdNprod(Session& s, const std::string& a, const std::string& b, long n) {
    s.emitState(circle(parseState(a, s.ctx()), parseState(b, s.ctx()), n));
    return 0;
}

int cmdCheck(Session& s, const std::string& what, const std::string& realization) {
    bool ok = false;
    if (what == "virasoro") {
        FreeAlgebraSpec alg = realization == "bc" ? FreeAlgebraSpec(0, 1) : *s.algebra;
        if (realization == "bg" && alg.bgPairs() + alg.bcPairs() == 0)
            throw std::invalid_argument("algebra has no pairs for a Virasoro structure");
        std::vector<Scalar> alpha = parseScalarList(s.opt.alphaSpec);
        if (alpha.empty())
            alpha.assign(static_cast<size_t>(alg.bgPairs() + alg.bcPairs()), Scalar(Rat(1, 2)));
        ok = verifyVirasoro(virasoroAlpha(alg, alpha), virasoroCentralCharge(alg, alpha));
    } else if (what == "w3") {
        if (realization == "bg") {
            FreeAlgebraSpec alg(1, 0);
            auto [L, W] = buildLSWS(alg, 0);
            ok = verifyW3OPE(L, W);
        } else if (realization == "heis") {
            FreeAlgebraSpec alg(0, 0, {Scalar(1)});
            auto [L, W] = buildHeisLW(alg, 0);
            ok = verifyW3OPE(L, W);
        } else if (realization == "bc") {
            FreeAlgebraSpec alg(0, 1);
            auto [L, W] = buildBcLW(alg, 0);
            ok = verifyW3OPE(L, W);
        } else {
            throw std::invalid_argument("unknown realization: " + realization);
        }
    } else {
        throw std::invalid_argument("unknown check: " + what);
    }
    std::cout << (ok ? "verified" : "FAILED") << "\n";
    return ok ? 0 : 1;
}

const DiagonalAction& requireAction(Session& s) {
    if (!s.action) throw std::invalid_argument("this command needs --action");
    return *s.action;
}

int cmdCommutantGens(Session& s) {
    const DiagonalAction& act = requireAction(s);
    auto gens = generatorSet(act);
    if (s.json()) {
        Json j = Json::array();
        for (const auto& g : gens) j.push_back({{"name", g.name}, {"state", toJson(g.state)}});
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& g : gens) std::cout << g.name << " = " << printState(g.state) << "\n";
    }
    return 0;
}

int cmdCommutantBasis(Session& s, const std::string& weight, const std::string& charge) {
    const DiagonalAction& act = requireAction(s);
    Rat w = ratFromString(weight);
    ChargeConstraint q;
    if (charge.find(',') == std::string::npos) {
        q = static_cast<long>(std::stol(charge));
    } else {
        std::vector<long> vec;
        size_t start = 0;
        while (start <= charge.size()) {
            size_t comma = charge.find(',', start);
            vec.push_back(std::stol(charge.substr(start, comma - start)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        q = vec;
    }
    auto basis = gradedCommutantBasis(act, w, q);
    if (s.json()) {
        Json j = Json::array();
        for (const State& st : basis) j.push_back(toJson(st));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "dimension " << basis.size() << "\n";
        for (const State& st : basis) std::cout << printState(st) << "\n";
    }
    return 0;
}

int cmdInvariant(Session& s, const std::string& expr) {
    const DiagonalAction& act = requireAction(s);
    State u = parseState(expr, s.ctx());
    long failPole = -1;
    int failRow = -1;
    for (int i = 0; i < act.m(); ++i) {
        State theta = buildTheta(act, i);
        long bound = (theta.maxTwiceWeightStar() + u.maxTwiceWeightStar()) / 2;
        for (long n = bound; n >= 0; --n)
            if (!circle(theta, u, n).isZero()) {
                if (n > failPole) {
                    failPole = n;
                    failRow = i;
                }
                break;
            }
    }
    if (failPole < 0) {
        std::cout << "invariant\n";
        return 0;
    }
    std::cout << "not invariant: fails at pole order " << failPole << " (theta[" << failRow + 1
              << "])\n";
    return 1;
}

int cmdQuantumCorrect(Session& s, int n) {
    std::unique_ptr<DiagonalAction> local;
    const DiagonalAction* act = s.action.get();
    if (!act) {
        local = std::make_unique<DiagonalAction>(ActionMatrix{{{Scalar(1)}}});
        act = local.get();
    }
    s.emitState(quantumCorrect(*act, n));
    return 0;
}

int cmdZhu(Session& s, const std::string& expr) {
    State u = parseState(expr, s.ctx());
    std::vector<Scalar> alpha = parseScalarList(s.opt.alphaSpec);
    if (alpha.empty()) alpha.assign(static_cast<size_t>(s.algebra->bgPairs()), Scalar(Rat(1, 2)));
    s.emitWeyl(zhuImage(u, alpha));
    return 0;
}

int cmdCokernel(Session& s, int degree) {
    const DiagonalAction& act = requireAction(s);
    std::vector<Scalar> alpha = parseScalarList(s.opt.alphaSpec);
    if (alpha.empty()) alpha.assign(static_cast<size_t>(act.n()), Scalar(Rat(1, 2)));
    CokernelProbe probe = cokernelProbe(act, alpha, degree);
    if (s.json()) {
        Json reps = Json::array();
        for (const auto& r : probe.representatives) reps.push_back(toJson(r));
        std::cout << Json{{"codim", probe.codim},
                          {"representatives", reps},
                          {"theta_augmented_spans", probe.thetaAugmentedSpans}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "codim " << probe.codim << "\n";
        for (const auto& r : probe.representatives)
            std::cout << "representative: " << printWeyl(r) << "\n";
        std::cout << "theta-augmented span covers E_<=D: "
                  << (probe.thetaAugmentedSpans ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmdStar(Session& s, long k, const std::string& a, const std::string& b,
            const std::string& side) {
    if (side == "vertex") {
        State u = parseState(a, s.ctx());
        State v = parseState(b, s.ctx());
        s.emitState(starK(u, v, k));
    } else if (side == "weyl") {
        int n = s.algebra->bgPairs();
        WeylElement u = parseWeylElement(a, n);
        WeylElement v = parseWeylElement(b, n);
        s.emitWeyl(starKWeyl(u, v, k));
    } else {
        throw std::invalid_argument("--side must be vertex or weyl");
    }
    return 0;
}

int cmdTransvect(Session& s, long k, const std::string& p, const std::string& q) {
    int n = s.algebra->bgPairs();
    MultiPoly pp = parsePolyElement(p, n);
    MultiPoly qq = parsePolyElement(q, n);
    MultiPoly r = transvectant(pp, qq, k);
    if (s.json())
        std::cout << polyToJson(r).dump(2) << "\n";
    else
        std::cout << printPoly(r) << "\n";
    return 0;
}

int cmdExtractUnit(Session& s, const std::string& expr) {
    const DiagonalAction& act = requireAction(s);
    State u = parseState(expr, s.ctx());
    UnitExtraction ex = extractUnit(act, u);
    if (s.json()) {
        Json j{{"l", ex.l}, {"d", ex.d}, {"c", toJson(ex.c)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "l = (";
        for (size_t i = 0; i < ex.l.size(); ++i) std::cout << (i ? "," : "") << ex.l[i];
        std::cout << "), d = " << ex.d << ", c = " << ex.c.str() << "\n";
    }
    return 0;
}

int cmdSelftest(Session& s) {
    auto results = runAcceptanceChecks();
    bool all = true;
    if (s.json()) {
        Json j = Json::array();
        for (const auto& r : results) {
            j.push_back({{"id", r.id},
                         {"description", r.description},
                         {"pass", r.pass},
                         {"detail", r.detail}});
            all &= r.pass;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.description;
            if (!r.pass && !r.detail.empty()) std::cout << " [" << r.detail << "]";
            std::cout << "\n";
            all &= r.pass;
        }
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vocal: exact calculator for free-field vertex algebras, their commutants, "
                 "the W3 algebra at c=-2, Zhu images, and transvectants"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--algebra", opt.algebraFile, "algebra spec JSON file");
    app.add_option("--action", opt.actionFile, "diagonal action JSON file");
    app.add_option("--alpha", opt.alphaSpec, "comma-separated conformal weights per pair");
    app.add_option("--lambda", opt.lambdaSpec, "comma-separated lambda parameters");
    app.add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string exprA, exprB, realization = "bg", side = "vertex", weight = "0", charge = "0";
    long nArg = 0, kArg = 0;
    int degree = 3, nPower = 2;

    auto* ope = app.add_subcommand("ope", "singular OPE table of two states");
    ope->add_option("A", exprA)->required();
    ope->add_option("B", exprB)->required();

    auto* nprod = app.add_subcommand("nprod", "n-th circle product of two states");
    nprod->add_option("A", exprA)->required();
    nprod->add_option("B", exprB)->required();
    nprod->add_option("n", nArg)->required();

    auto* check = app.add_subcommand("check", "verify a named structure");
    check->add_option("what", exprA, "virasoro or w3")->required();
    check->add_option("--realization", realization, "bg, heis, or bc");

    auto* commutant = app.add_subcommand("commutant", "commutant generators and graded bases");
    auto* gens = commutant->add_subcommand("gens", "finite generating set");
    auto* basis = commutant->add_subcommand("basis", "graded component basis");
    basis->add_option("--weight", weight, "alpha*-weight, e.g. 3/2")->required();
    basis->add_option("--charge", charge, "total charge or comma-separated charge vector");

    auto* invariant = app.add_subcommand("invariant", "test membership in the commutant");
    invariant->add_option("EXPR", exprA)->required();

    auto* qc = app.add_subcommand("quantum-correct", "invariant completion of :theta^n:");
    qc->add_option("N", nPower)->required();

    auto* zhu = app.add_subcommand("zhu", "Zhu image in the Weyl algebra");
    zhu->add_option("EXPR", exprA)->required();

    auto* coker = app.add_subcommand("cokernel", "cokernel probe of the Zhu map");
    coker->add_option("--degree", degree)->required();

    auto* star = app.add_subcommand("star", "star product on level-zero states or Weyl elements");
    star->add_option("--k", kArg)->required();
    star->add_option("A", exprA)->required();
    star->add_option("B", exprB)->required();
    star->add_option("--side", side, "vertex or weyl");

    auto* transvect = app.add_subcommand("transvect", "k-th transvectant of two polynomials");
    transvect->add_option("--k", kArg)->required();
    transvect->add_option("P", exprA)->required();
    transvect->add_option("Q", exprB)->required();

    auto* extract = app.add_subcommand("extract-unit", "simplicity unit extraction");
    extract->add_option("EXPR", exprA)->required();

    app.add_subcommand("selftest", "run the full verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        Session session;
        session.opt = opt;
        session.init();
        if (ope->parsed()) return cmdOpe(session, exprA, exprB);
        if (nprod->parsed()) return cmdNprod(session, exprA, exprB, nArg);
        if (check->parsed()) return cmdCheck(session, exprA, realization);
        if (commutant->parsed()) {
            if (gens->parsed()) return cmdCommutantGens(session);
            if (basis->parsed()) return cmdCommutantBasis(session, weight, charge);
            throw std::invalid_argument("commutant needs a subcommand: gens or basis");
        }
        if (invariant->parsed()) return cmdInvariant(session, exprA);
        if (qc->parsed()) return cmdQuantumCorrect(session, nPower);
        if (zhu->parsed()) return cmdZhu(session, exprA);
        if (coker->parsed()) return cmdCokernel(session, degree);
        if (star->parsed()) return cmdStar(session, kArg, exprA, exprB, side);
        if (transvect->parsed()) return cmdTransvect(session, kArg, exprA, exprB);
        if (extract->parsed()) return cmdExtractUnit(session, exprA);
        if (app.get_subcommand("selftest")->parsed()) return cmdSelftest(session);
        throw std::invalid_argument("no subcommand");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
