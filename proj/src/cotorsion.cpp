#include "arcmodel/cotorsion.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include "arcmodel/hom_ext.hpp"

namespace arcmodel {

namespace {

void require_same_params(const ArcSet& x, const ArcSet& y)
{
    if (!(x.params() == y.params()))
        throw ArcError(ErrorKind::InvalidParams, "sets belong to different values of n");
}

void require_window(const ArcSet& x, const ArcSet& y, const Window& w)
{
    if (const auto need = required_window(x, y); need && !w.contains(*need))
        throw ArcError(ErrorKind::WindowTooSmall,
                       "window " + to_string(w) + " must contain " + to_string(*need));
}

WindowedCondition compare(std::vector<Arc> lhs, std::vector<Arc> rhs)
{
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    WindowedCondition c;
    std::set_symmetric_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                                  std::back_inserter(c.witnesses));
    c.holds = c.witnesses.empty();
    return c;
}

} // namespace

std::optional<Window> required_window(const ArcSet& x, const ArcSet& y)
{
    auto span = x.explicit_span();
    if (const auto ys = y.explicit_span()) {
        if (!span)
            span = ys;
        span->first = std::min(span->first, ys->first);
        span->second = std::max(span->second, ys->second);
    }
    if (!span)
        return std::nullopt;
    const int margin = x.params().n() + 2;
    return Window(span->first - margin, span->second + margin);
}

PairReport check_pair(const ArcSet& x, const ArcSet& y, const Window& w)
{
    require_same_params(x, y);
    require_window(x, y, w);

    PairReport r{w, {}, {}, {}, {}, false};
    r.x_equals_ncY = compare(x.members_in(w), nc_window(y, w));
    r.y_equals_ncX = compare(y.members_in(w), nc_window(x, w));

    const FinitenessReport fx = finiteness_check(x);
    const FinitenessReport fy = finiteness_check(y);
    r.x_contravariant = {fx.contravariant_ok, fx.contravariant_witness};
    r.y_covariant = {fy.covariant_ok, fy.covariant_witness};

    r.verdict = r.x_equals_ncY.holds && r.y_equals_ncX.holds && r.x_contravariant.holds && r.y_covariant.holds;
    return r;
}

std::vector<Arc> core(const ArcSet& x, const ArcSet& y, const Window& w)
{
    require_same_params(x, y);
    require_window(x, y, w);
    std::vector<Arc> out;
    for (const Arc& a : x.members_in(w))
        if (contains(y, a))
            out.push_back(a);
    return out;
}

RigidityResult rigidity_check(const std::vector<Arc>& s, const ModelParams& p)
{
    for (const Arc& a : s)
        require_admissible(a, p);

    RigidityResult by_ext;
    RigidityResult by_crossing;
    for (const Arc& a : s) {
        for (const Arc& b : s) {
            const auto profile = ext_profile(a, b, p);
            if (by_ext.rigid && std::find(profile.begin(), profile.end(), 1) != profile.end())
                by_ext = {false, std::pair{a, b}};
            if (by_crossing.rigid && cross(a, b))
                by_crossing = {false, std::pair{a, b}};
        }
    }
    if (by_ext.rigid != by_crossing.rigid)
        throw std::logic_error("rigidity: Ext profile and crossing test disagree");
    return by_ext;
}

} // namespace arcmodel
