#pragma once

#include <optional>
#include <set>
#include <vector>

#include "arcmodel/arc_set.hpp"
#include "arcmodel/cotorsion.hpp"
#include "arcmodel/hom_ext.hpp"

namespace arcmodel {

/// A finite set of pairwise non-crossing admissible arcs. Its arcs cut the
/// upper half plane into cells; rotation moves each endpoint of an arc one
/// step backwards along the boundary of the cell containing it.
class DividerSet {
public:
    explicit DividerSet(ModelParams params) : params_(params) {}
    DividerSet(ModelParams params, const std::vector<Arc>& arcs);

    const ModelParams& params() const noexcept { return params_; }
    const std::set<Arc>& arcs() const noexcept { return arcs_; }
    bool contains(const Arc& a) const noexcept { return arcs_.count(a) > 0; }
    bool empty() const noexcept { return arcs_.empty(); }
    /// max endpoint - min endpoint, 0 when empty.
    int span() const noexcept;

private:
    ModelParams params_;
    std::set<Arc> arcs_;
};

/// Previous vertex of p on the boundary of the cell containing a.
/// If a divider (p, r) encloses a, the innermost one gives r. Otherwise, if
/// dividers (q, p) do not enclose a, the outermost one gives q. Otherwise p - 1.
int predecessor(int p, const Arc& a, const DividerSet& d);

/// Next vertex of p on the boundary of the cell containing a (mirror rule).
int successor(int p, const Arc& a, const DividerSet& d);

/// The D-rotation of an arc inside its cell.
Arc rotate_arc(const Arc& a, const DividerSet& d);
Arc rotate_arc_inverse(const Arc& a, const DividerSet& d);

/// {rotate(a) : a in X \ D} u D, with families mapped in closed form.
/// Requires every divider to be a member of X crossing no member of X.
ArcSet rotate_set(const ArcSet& x, const DividerSet& d);
ArcSet rotate_set_inverse(const ArcSet& x, const DividerSet& d);

struct MutationResult {
    ArcSet x;
    ArcSet y;
    Window window; ///< window on which the mutated pair was checked
    PairReport report;
};

/// Mutates a certified pair by rotating both sides through D. The mutated
/// pair is checked on w shrunk by span(D) + 1 (widened again when needed to
/// cover the mutated sets' explicit arcs). With force, an uncertified input
/// pair is mutated anyway.
MutationResult mutate_pair(const ArcSet& x, const ArcSet& y, const DividerSet& d, const Window& w,
                           bool force = false);

struct RotationResult {
    Arc image;
    ExtTriangle via_triangle;
};

/// Rotates a and confirms that the extension triangle a -> M -> rotate(a)
/// has middle term M built from dividers only, i.e. it is the left
/// approximation realizing the mutation.
RotationResult mutation_via_triangle(const Arc& a, const DividerSet& d);

} // namespace arcmodel
