#include "vocal/serialize.hpp"

#include "vocal/expr.hpp"

#include <fstream>

namespace vocal {

Json toJson(const Scalar& s) {
    Json j;
    j["rat"] = ratToString(s.rat());
    if (s.irr() != 0) j["irr"] = ratToString(s.irr());
    return j;
}

Scalar scalarFromJson(const Json& j) {
    if (j.is_string()) return parseScalarLiteral(j.get<std::string>());
    Rat rat = j.contains("rat") ? ratFromString(j.at("rat").get<std::string>()) : Rat(0);
    Rat irr = j.contains("irr") ? ratFromString(j.at("irr").get<std::string>()) : Rat(0);
    return Scalar(rat, irr);
}

Json toJson(const FreeAlgebraSpec& alg) {
    Json j;
    j["bg_pairs"] = alg.bgPairs();
    j["bc_pairs"] = alg.bcPairs();
    Json levels = Json::array();
    for (const Scalar& lv : alg.heisLevels()) levels.push_back(lv.str());
    j["heisenberg_levels"] = levels;
    return j;
}

FreeAlgebraSpec algebraFromJson(const Json& j) {
    int bg = j.value("bg_pairs", 0);
    int bc = j.value("bc_pairs", 0);
    std::vector<Scalar> levels;
    if (j.contains("heisenberg_levels"))
        for (const Json& lv : j.at("heisenberg_levels"))
            levels.push_back(lv.is_string() ? parseScalarLiteral(lv.get<std::string>())
                                            : scalarFromJson(lv));
    return FreeAlgebraSpec(bg, bc, std::move(levels));
}

Json toJson(const State& s) {
    Json terms = Json::array();
    for (const auto& [mono, coeff] : s.terms()) {
        Json jm = Json::array();
        for (size_t i = 0; i < mono.size();) {
            size_t j = i;
            while (j < mono.size() && mono[j] == mono[i]) ++j;
            jm.push_back({{"gen", s.algebra()->genName(mono[i].gen)},
                          {"deriv", mono[i].deriv},
                          {"mult", j - i}});
            i = j;
        }
        terms.push_back({{"monomial", jm}, {"coeff", toJson(coeff)}});
    }
    return Json{{"terms", terms}};
}

State stateFromJson(const Json& j, const FreeAlgebraSpec& alg) {
    State s(alg);
    for (const Json& term : j.at("terms")) {
        Monomial mono;
        for (const Json& f : term.at("monomial")) {
            auto gen = alg.genByName(f.at("gen").get<std::string>());
            if (!gen) throw std::invalid_argument("unknown generator in state JSON");
            int deriv = f.value("deriv", 0);
            int mult = f.value("mult", 1);
            for (int i = 0; i < mult; ++i) mono.push_back(Factor{*gen, deriv});
        }
        auto canon = canonicalizeFactors(alg, std::move(mono));
        if (!canon) continue;
        s.addTerm(canon->first, Scalar(canon->second) * scalarFromJson(term.at("coeff")));
    }
    return s;
}

Json toJson(const WeylElement& w) {
    Json terms = Json::array();
    for (const auto& [key, coeff] : w.terms())
        terms.push_back({{"x", key.first}, {"d", key.second}, {"coeff", toJson(coeff)}});
    return Json{{"terms", terms}, {"vars", w.vars()}};
}

WeylElement weylFromJson(const Json& j) {
    int n = j.value("vars", 0);
    WeylElement w(n);
    for (const Json& term : j.at("terms"))
        w.addTerm(term.at("x").get<std::vector<int>>(), term.at("d").get<std::vector<int>>(),
                  scalarFromJson(term.at("coeff")));
    return w;
}

Json polyToJson(const MultiPoly& p) {
    int n = p.vars() / 2;
    Json terms = Json::array();
    for (const auto& [exps, coeff] : p.terms()) {
        std::vector<int> x(exps.begin(), exps.begin() + n);
        std::vector<int> xp(exps.begin() + n, exps.end());
        terms.push_back({{"x", x}, {"xp", xp}, {"coeff", toJson(coeff)}});
    }
    return Json{{"terms", terms}, {"vars", n}};
}

Json toJson(const ActionMatrix& a) {
    Json rows = Json::array();
    for (const ScalarVec& row : a.rows) {
        Json r = Json::array();
        for (const Scalar& s : row) r.push_back(s.str());
        rows.push_back(r);
    }
    return Json{{"rows", rows}};
}

ActionMatrix actionFromJson(const Json& j) {
    ActionMatrix a;
    for (const Json& row : j.at("rows")) {
        ScalarVec r;
        for (const Json& entry : row)
            r.push_back(entry.is_string() ? parseScalarLiteral(entry.get<std::string>())
                                          : scalarFromJson(entry));
        a.rows.push_back(std::move(r));
    }
    return a;
}

Json toJson(const LatticeBasis& b) {
    Json vecs = Json::array();
    for (const IntVec& v : b.vectors) {
        Json r = Json::array();
        for (const Int& x : v) r.push_back(x.str());
        vecs.push_back(r);
    }
    return Json{{"vectors", vecs}};
}

namespace {
Json loadFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}
}  // namespace

FreeAlgebraSpec loadAlgebraFile(const std::string& path) { return algebraFromJson(loadFile(path)); }

ActionMatrix loadActionFile(const std::string& path) { return actionFromJson(loadFile(path)); }

}  // namespace vocal
