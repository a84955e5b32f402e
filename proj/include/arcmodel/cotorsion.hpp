#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "arcmodel/arc_set.hpp"

namespace arcmodel {

/// A set equality verified on a window. Witnesses are the symmetric
/// difference inside the window, sorted.
struct WindowedCondition {
    bool holds = true;
    std::vector<Arc> witnesses;
};

/// A fountain-locus inclusion, decided exactly from the family descriptors.
struct ExactCondition {
    bool holds = true;
    std::optional<int> witness;
};

/// Verdict on whether (X, Y) is an n-cotorsion pair, via the four
/// non-crossing conditions:
///   X = nc Y, Y = nc X                    (windowed)
///   right-fountains of X are left-fountains of X   (exact)
///   left-fountains of Y are right-fountains of Y   (exact)
/// A passing verdict is window-certified, not a proof.
struct PairReport {
    Window window;
    WindowedCondition x_equals_ncY;
    WindowedCondition y_equals_ncX;
    ExactCondition x_contravariant;
    ExactCondition y_covariant;
    bool verdict = false;
};

/// Smallest window accepted by check_pair and core: every explicit endpoint
/// of X and Y plus a margin of n + 2 on either side. nullopt when neither
/// set has explicit arcs.
std::optional<Window> required_window(const ArcSet& x, const ArcSet& y);

PairReport check_pair(const ArcSet& x, const ArcSet& y, const Window& w);

/// Arcs of X and Y inside w.
std::vector<Arc> core(const ArcSet& x, const ArcSet& y, const Window& w);

struct RigidityResult {
    bool rigid = true;
    std::optional<std::pair<Arc, Arc>> witness;
};

/// Ext^i(a, b) = 0 for 1 <= i <= n and all a, b in s. Evaluated both from the
/// Ext formulas and from crossing; a disagreement is an internal error.
RigidityResult rigidity_check(const std::vector<Arc>& s, const ModelParams& p);

} // namespace arcmodel
