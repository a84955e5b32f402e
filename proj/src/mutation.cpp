#include "arcmodel/mutation.hpp"

#include <algorithm>

namespace arcmodel {

DividerSet::DividerSet(ModelParams params, const std::vector<Arc>& arcs) : params_(params)
{
    for (const Arc& a : arcs) {
        require_admissible(a, params_);
        for (const Arc& b : arcs_)
            if (cross(a, b))
                throw ArcError(ErrorKind::ValidationError,
                               "dividers " + to_string(a) + " and " + to_string(b) + " cross");
        arcs_.insert(a);
    }
}

int DividerSet::span() const noexcept
{
    if (arcs_.empty())
        return 0;
    int lo = arcs_.begin()->t(), hi = lo;
    for (const Arc& a : arcs_) {
        lo = std::min(lo, a.t());
        hi = std::max(hi, a.u());
    }
    return hi - lo;
}

namespace {

void require_compatible(int p, const Arc& a, const DividerSet& d)
{
    if (!a.has_endpoint(p))
        throw ArcError(ErrorKind::IncompatibleArc, std::to_string(p) + " is not an endpoint of " + to_string(a));
    if (!is_admissible(a, d.params()))
        throw ArcError(ErrorKind::IncompatibleArc, to_string(a) + " is not admissible");
    if (d.contains(a))
        throw ArcError(ErrorKind::IncompatibleArc, to_string(a) + " is a divider");
    for (const Arc& e : d.arcs())
        if (cross(a, e))
            throw ArcError(ErrorKind::IncompatibleArc, to_string(a) + " crosses divider " + to_string(e));
}

enum class Direction { Backward, Forward };

int step(Direction dir, int p, const Arc& a, const DividerSet& d)
{
    return dir == Direction::Backward ? predecessor(p, a, d) : successor(p, a, d);
}

Arc rotate_in_cell(Direction dir, const Arc& a, const DividerSet& d)
{
    const Arc image(step(dir, a.t(), a, d), step(dir, a.u(), a, d));
    // Rotation inside a cell maps diagonals to diagonals; anything else is a rule bug.
    bool ok = is_admissible(image, d.params()) && !d.contains(image);
    for (const Arc& e : d.arcs())
        ok = ok && !cross(image, e);
    if (!ok)
        throw ArcError(ErrorKind::NonAdmissibleImage,
                       "rotation of " + to_string(a) + " produced " + to_string(image));
    return image;
}

void require_frame(const ArcSet& x, const DividerSet& d)
{
    if (!(x.params() == d.params()))
        throw ArcError(ErrorKind::InvalidParams, "divider set and arc set use different n");
    for (const Arc& e : d.arcs()) {
        if (!contains(x, e))
            throw ArcError(ErrorKind::DNotInFrame, "divider " + to_string(e) + " is not in the set");
        if (crosses_set(e, x))
            throw ArcError(ErrorKind::DNotInFrame, "divider " + to_string(e) + " crosses a member of the set");
    }
}

ArcSet rotate_set_in(Direction dir, const ArcSet& x, const DividerSet& d)
{
    require_frame(x, d);
    const ModelParams& params = x.params();
    const int n = params.n();

    auto support = x.support_span();
    if (!support)
        return ArcSet(params, std::vector<Arc>(d.arcs().begin(), d.arcs().end()));
    int c_lo = support->first, c_hi = support->second;
    for (const Arc& e : d.arcs()) {
        c_lo = std::min(c_lo, e.t());
        c_hi = std::max(c_hi, e.u());
    }
    // Two free vertices between the core and the dividers keep every fan
    // piece a bijection under the unit shift of its free endpoint.
    const int lo = c_lo - 2, hi = c_hi + 2;
    const CoreSplit split = split_at_core(x, lo, hi);
    const int delta = dir == Direction::Backward ? -1 : 1;

    auto endpoint_image = [&](int fixed, const Arc& representative) {
        return step(dir, fixed, representative, d);
    };

    std::vector<FountainFamily> families;
    if (split.half_left)
        families.push_back(HalfLeft{lo - 1 + delta});
    if (split.half_right)
        families.push_back(HalfRight{hi + 1 + delta});
    if (split.band)
        families.push_back(Band{lo - 1 + delta, hi + 1 + delta});
    for (int v : split.left_fans) {
        const Arc rep(v - 1 - n * std::max(1, (v - lo + n - 1) / n + 1), v);
        require_compatible(v, rep, d);
        families.push_back(LeftFan{endpoint_image(v, rep), lo - 1 + delta});
    }
    for (int t : split.right_fans) {
        const Arc rep(t, t + 1 + n * std::max(1, (hi - t + n - 1) / n + 1));
        require_compatible(t, rep, d);
        families.push_back(RightFan{endpoint_image(t, rep), hi + 1 + delta});
    }

    const ArcSet skeleton(params, {}, families);
    std::vector<Arc> explicit_arcs(d.arcs().begin(), d.arcs().end());
    for (const Arc& a : split.inner) {
        if (d.contains(a))
            continue;
        const Arc image = rotate_in_cell(dir, a, d);
        if (!contains(skeleton, image))
            explicit_arcs.push_back(image);
    }
    ArcSet image(params, explicit_arcs, families);

    // Closed form against pointwise rotation, in both directions, on a window
    // reaching well past every piece boundary.
    const Direction back = dir == Direction::Backward ? Direction::Forward : Direction::Backward;
    const int reach = 3 * n + 4;
    for (const Arc& a : admissible_arcs(Window(lo - reach, hi + reach), params)) {
        if (d.contains(a))
            continue;
        if (contains(x, a) && !contains(image, rotate_in_cell(dir, a, d)))
            throw ArcError(ErrorKind::UnsupportedFamilyGeometry,
                           "closed-form image misses the rotation of " + to_string(a));
        if (contains(image, a)) {
            bool ok = true;
            try {
                ok = contains(x, rotate_in_cell(back, a, d));
            } catch (const ArcError&) {
                ok = false;
            }
            if (!ok)
                throw ArcError(ErrorKind::UnsupportedFamilyGeometry,
                               "closed-form image contains " + to_string(a) + " without a preimage");
        }
    }
    return image;
}

} // namespace

int predecessor(int p, const Arc& a, const DividerSet& d)
{
    require_compatible(p, a, d);
    std::optional<int> inner;
    for (const Arc& e : d.arcs())
        if (e.t() == p && a.nested_in(e))
            inner = inner ? std::min(*inner, e.u()) : e.u();
    if (inner)
        return *inner;

    const int other = a.other_endpoint(p);
    std::optional<int> outer;
    for (const Arc& e : d.arcs())
        if (e.u() == p && (other <= e.t() || other >= p))
            outer = outer ? std::min(*outer, e.t()) : e.t();
    return outer ? *outer : p - 1;
}

int successor(int p, const Arc& a, const DividerSet& d)
{
    require_compatible(p, a, d);
    std::optional<int> inner;
    for (const Arc& e : d.arcs())
        if (e.u() == p && a.nested_in(e))
            inner = inner ? std::max(*inner, e.t()) : e.t();
    if (inner)
        return *inner;

    const int other = a.other_endpoint(p);
    std::optional<int> outer;
    for (const Arc& e : d.arcs())
        if (e.t() == p && (other <= p || other >= e.u()))
            outer = outer ? std::max(*outer, e.u()) : e.u();
    return outer ? *outer : p + 1;
}

Arc rotate_arc(const Arc& a, const DividerSet& d)
{
    return rotate_in_cell(Direction::Backward, a, d);
}

Arc rotate_arc_inverse(const Arc& a, const DividerSet& d)
{
    return rotate_in_cell(Direction::Forward, a, d);
}

ArcSet rotate_set(const ArcSet& x, const DividerSet& d)
{
    return rotate_set_in(Direction::Backward, x, d);
}

ArcSet rotate_set_inverse(const ArcSet& x, const DividerSet& d)
{
    return rotate_set_in(Direction::Forward, x, d);
}

MutationResult mutate_pair(const ArcSet& x, const ArcSet& y, const DividerSet& d, const Window& w, bool force)
{
    const PairReport before = check_pair(x, y, w);
    if (!before.verdict && !force)
        throw ArcError(ErrorKind::PairCheckFailed, "input pair is not certified on " + to_string(w));
    for (const Arc& e : d.arcs())
        if (!w.contains(e) || !contains(x, e) || !contains(y, e))
            throw ArcError(ErrorKind::DNotInCore, "divider " + to_string(e) + " is not in the core");

    ArcSet x2 = rotate_set(x, d);
    ArcSet y2 = rotate_set(y, d);

    const int margin = d.span() + 1;
    std::optional<Window> target;
    if (w.lo() + margin < w.hi() - margin)
        target = Window(w.lo() + margin, w.hi() - margin);
    if (const auto need = required_window(x2, y2)) {
        if (!target)
            target = need;
        else
            target = Window(std::min(target->lo(), need->lo()), std::max(target->hi(), need->hi()));
    }
    const Window checked = target ? *target : w;
    PairReport after = check_pair(x2, y2, checked);
    return {std::move(x2), std::move(y2), checked, std::move(after)};
}

RotationResult mutation_via_triangle(const Arc& a, const DividerSet& d)
{
    const Arc image = rotate_arc(a, d);
    const ModelParams& p = d.params();

    // The approximation a -> M has M built from the cell edges joining each
    // endpoint to its predecessor; non-admissible edges are zero.
    std::vector<Arc> expected;
    for (int v : {a.t(), a.u()}) {
        const Arc edge(v, predecessor(v, a, d));
        if (is_admissible(edge, p))
            expected.push_back(edge);
    }

    ExtTriangle tri{a, std::nullopt, std::nullopt, image};
    try {
        tri = ext_triangle(image, a, p);
    } catch (const ArcError& e) {
        if (e.kind() != ErrorKind::NoExtension)
            throw;
        throw ArcError(ErrorKind::TriangleMismatch,
                       "Ext^1(" + to_string(image) + ", " + to_string(a) + ") vanishes");
    }
    std::vector<Arc> middle = tri.middle();
    std::sort(middle.begin(), middle.end());
    std::sort(expected.begin(), expected.end());
    const bool from_dividers = std::all_of(middle.begin(), middle.end(), [&](const Arc& m) { return d.contains(m); });
    if (middle != expected || !from_dividers)
        throw ArcError(ErrorKind::TriangleMismatch,
                       "triangle middle term for " + to_string(a) + " is not the cell-edge approximation");
    return {image, tri};
}

} // namespace arcmodel
