#pragma once

#include "vocal/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vocal {

enum class GenKind { Beta, Gamma, B, C, Heis };

/// Declaration of a free vertex superalgebra: n βγ pairs (even), p bc pairs
/// (odd) and any number of Heisenberg currents with prescribed levels.
///
/// Generator indices follow the fixed total order: beta1..betan, gamma1..gamman,
/// b1..bp, c1..cp, j1..jq. All nonzero contractions are scalar multiples of the
/// vacuum:
///   beta_i ∘0 gamma_i = 1,   gamma_i ∘0 beta_i = -1,
///   b_i ∘0 c_i = 1,          c_i ∘0 b_i = 1,
///   j_i ∘1 j_i = level_i.
class FreeAlgebraSpec {
public:
    FreeAlgebraSpec() = default;
    FreeAlgebraSpec(int bgPairs, int bcPairs, std::vector<Scalar> heisLevels = {});

    int bgPairs() const { return bg_; }
    int bcPairs() const { return bc_; }
    int heisCount() const { return static_cast<int>(levels_.size()); }
    const std::vector<Scalar>& heisLevels() const { return levels_; }

    int generatorCount() const { return 2 * bg_ + 2 * bc_ + heisCount(); }

    GenKind kind(int g) const;
    /// 0-based index within the generator's own family.
    int pairOf(int g) const;
    bool odd(int g) const {
        GenKind k = kind(g);
        return k == GenKind::B || k == GenKind::C;
    }

    int beta(int p) const { return p; }
    int gamma(int p) const { return bg_ + p; }
    int bGen(int p) const { return 2 * bg_ + p; }
    int cGen(int p) const { return 2 * bg_ + bc_ + p; }
    int heis(int p) const { return 2 * bg_ + 2 * bc_ + p; }

    /// Scalar contraction a_i ∘_k a_j (coefficient of the vacuum); zero for
    /// all but finitely many k per pair.
    Scalar contraction(int i, int j, int k) const;
    /// Largest k with any nonzero contraction (0 without Heisenberg currents).
    int maxContractionOrder() const { return levels_.empty() ? 0 : 1; }

    /// Twice the internal termination weight: 1 for βγ/bc generators, 2 for
    /// Heisenberg currents. Keeps all weights in (1/2)Z with integers only.
    int twiceWeightStar(int g) const { return kind(g) == GenKind::Heis ? 2 : 1; }

    std::string genName(int g) const;
    std::optional<int> genByName(const std::string& name) const;

    bool operator==(const FreeAlgebraSpec& o) const {
        return bg_ == o.bg_ && bc_ == o.bc_ && levels_ == o.levels_;
    }
    bool operator!=(const FreeAlgebraSpec& o) const { return !(*this == o); }

private:
    int bg_ = 0;
    int bc_ = 0;
    std::vector<Scalar> levels_;
};

}  // namespace vocal
