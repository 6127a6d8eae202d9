#include "vocal/algebra.hpp"

#include <stdexcept>

namespace vocal {

FreeAlgebraSpec::FreeAlgebraSpec(int bgPairs, int bcPairs, std::vector<Scalar> heisLevels)
    : bg_(bgPairs), bc_(bcPairs), levels_(std::move(heisLevels)) {
    if (bg_ < 0 || bc_ < 0) throw std::invalid_argument("negative pair count");
    for (const Scalar& lv : levels_)
        if (lv.isZero()) throw std::invalid_argument("Heisenberg level must be nonzero");
}

GenKind FreeAlgebraSpec::kind(int g) const {
    if (g < 0 || g >= generatorCount()) throw std::out_of_range("generator index");
    if (g < bg_) return GenKind::Beta;
    if (g < 2 * bg_) return GenKind::Gamma;
    if (g < 2 * bg_ + bc_) return GenKind::B;
    if (g < 2 * bg_ + 2 * bc_) return GenKind::C;
    return GenKind::Heis;
}

int FreeAlgebraSpec::pairOf(int g) const {
    switch (kind(g)) {
        case GenKind::Beta: return g;
        case GenKind::Gamma: return g - bg_;
        case GenKind::B: return g - 2 * bg_;
        case GenKind::C: return g - 2 * bg_ - bc_;
        case GenKind::Heis: return g - 2 * bg_ - 2 * bc_;
    }
    throw std::logic_error("unreachable");
}

Scalar FreeAlgebraSpec::contraction(int i, int j, int k) const {
    GenKind ki = kind(i), kj = kind(j);
    int pi = pairOf(i), pj = pairOf(j);
    if (k == 0) {
        if (ki == GenKind::Beta && kj == GenKind::Gamma && pi == pj) return Scalar(1);
        if (ki == GenKind::Gamma && kj == GenKind::Beta && pi == pj) return Scalar(-1);
        if (ki == GenKind::B && kj == GenKind::C && pi == pj) return Scalar(1);
        if (ki == GenKind::C && kj == GenKind::B && pi == pj) return Scalar(1);
    } else if (k == 1) {
        if (ki == GenKind::Heis && kj == GenKind::Heis && pi == pj) return levels_[pi];
    }
    return Scalar(0);
}

std::string FreeAlgebraSpec::genName(int g) const {
    int p = pairOf(g) + 1;
    switch (kind(g)) {
        case GenKind::Beta: return "beta" + std::to_string(p);
        case GenKind::Gamma: return "gamma" + std::to_string(p);
        case GenKind::B: return "b" + std::to_string(p);
        case GenKind::C: return "c" + std::to_string(p);
        case GenKind::Heis: return "j" + std::to_string(p);
    }
    throw std::logic_error("unreachable");
}

std::optional<int> FreeAlgebraSpec::genByName(const std::string& name) const {
    auto split = [&](const std::string& prefix) -> int {
        if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return -1;
        int idx = 0;
        for (size_t i = prefix.size(); i < name.size(); ++i) {
            if (!isdigit(static_cast<unsigned char>(name[i]))) return -1;
            idx = idx * 10 + (name[i] - '0');
        }
        return idx >= 1 ? idx - 1 : -1;
    };
    int p;
    if ((p = split("beta")) >= 0 && p < bg_) return beta(p);
    if ((p = split("gamma")) >= 0 && p < bg_) return gamma(p);
    if ((p = split("b")) >= 0 && p < bc_) return bGen(p);
    if ((p = split("c")) >= 0 && p < bc_) return cGen(p);
    if ((p = split("j")) >= 0 && p < heisCount()) return heis(p);
    return std::nullopt;
}

}  // namespace vocal
