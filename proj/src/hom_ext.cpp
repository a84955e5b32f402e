#include "arcmodel/hom_ext.hpp"

#include <string>

namespace arcmodel {

const char* to_string(ExtCase c)
{
    switch (c) {
    case ExtCase::SameComponent: return "SameComponent";
    case ExtCase::NextComponent: return "NextComponent";
    case ExtCase::Zero: return "Zero";
    }
    return "Unknown";
}

std::vector<Arc> ExtTriangle::middle() const
{
    std::vector<Arc> out;
    if (mid1)
        out.push_back(*mid1);
    if (mid2)
        out.push_back(*mid2);
    return out;
}

namespace {

// Region tests on unchecked inputs; callers validate admissibility once.
ExtClassification classify(const Arc& x, const Arc& y, int n)
{
    const int r = x.t(), s = x.u();
    const int t = y.t(), u = y.u();

    const bool same = floor_mod(u - s, n) == 0 && t <= r - n && r + 1 <= u && u <= s - n;
    const bool next = floor_mod(u - s - 1, n) == 0 && r + 1 <= t && t <= s - n && s + 1 <= u;

    ExtClassification out;
    out.overlap = same && next;
    if (same)
        out.kind = ExtCase::SameComponent;
    else if (next)
        out.kind = ExtCase::NextComponent;
    return out;
}

std::optional<Arc> admissible_or_zero(int a, int b, const ModelParams& p)
{
    if (a == b)
        return std::nullopt;
    Arc arc(a, b);
    if (!is_admissible(arc, p))
        return std::nullopt;
    return arc;
}

} // namespace

ExtClassification ext1_case(const Arc& x, const Arc& y, const ModelParams& p)
{
    require_admissible(x, p);
    require_admissible(y, p);
    return classify(x, y, p.n());
}

int ext_dim(const Arc& x, const Arc& y, int i, const ModelParams& p)
{
    if (i < 1)
        throw ArcError(ErrorKind::InvalidDegree, "Ext degree must be >= 1, got " + std::to_string(i));
    require_admissible(x, p);
    require_admissible(y, p);
    return classify(x, shift(y, i - 1), p.n()).kind == ExtCase::Zero ? 0 : 1;
}

int hom_dim(const Arc& x, const Arc& y, const ModelParams& p)
{
    require_admissible(x, p);
    require_admissible(y, p);
    return classify(x, shift(y, -1), p.n()).kind == ExtCase::Zero ? 0 : 1;
}

std::vector<int> ext_profile(const Arc& x, const Arc& y, const ModelParams& p)
{
    require_admissible(x, p);
    require_admissible(y, p);
    std::vector<int> out;
    out.reserve(p.n());
    for (int i = 1; i <= p.n(); ++i)
        out.push_back(classify(x, shift(y, i - 1), p.n()).kind == ExtCase::Zero ? 0 : 1);
    return out;
}

ExtTriangle ext_triangle(const Arc& x, const Arc& y, const ModelParams& p)
{
    const ExtClassification c = ext1_case(x, y, p);
    const int r = x.t(), s = x.u();
    const int t = y.t(), u = y.u();

    switch (c.kind) {
    case ExtCase::SameComponent:
        return {y, admissible_or_zero(t, s, p), admissible_or_zero(r, u, p), x};
    case ExtCase::NextComponent:
        return {y, admissible_or_zero(s, u, p), admissible_or_zero(r, t, p), x};
    case ExtCase::Zero:
        break;
    }
    throw ArcError(ErrorKind::NoExtension, "Ext^1(" + to_string(x) + ", " + to_string(y) + ") = 0");
}

} // namespace arcmodel
