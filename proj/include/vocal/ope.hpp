#pragma once

#include "vocal/state.hpp"

#include <utility>
#include <vector>

namespace vocal {

/// n-th circle product u ∘_n v, for any n in Z. u ∘_{-1} v is the Wick
/// product; n >= 0 gives the singular OPE coefficients. Evaluated by mode
/// calculus: u's creation-mode words act on v through the recursive iterate
/// formula, with Koszul signs; annihilation modes on the vacuum terminate.
State circle(const State& u, const State& v, long n);

/// Wick (normally ordered) product :uv: = u ∘_{-1} v.
State wick(const State& u, const State& v);

/// All pairs (n, u∘_n v) with n >= 0 and nonzero product, descending in n.
std::vector<std::pair<long, State>> opeSingular(const State& u, const State& v);

/// True iff u ∘_n v = 0 for all n >= 0 (checked below the α*-weight bound).
bool commutes(const State& u, const State& v);

/// Virasoro OPE check: L∘0 L = ∂L, L∘1 L = 2L, L∘2 L = 0, L∘3 L = (c/2)·1,
/// and L∘n L = 0 for n >= 4.
bool verifyVirasoro(const State& L, const Scalar& c);

}  // namespace vocal
