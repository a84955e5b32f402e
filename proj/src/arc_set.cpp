#include "arcmodel/arc_set.hpp"

#include <algorithm>
#include <sstream>

namespace arcmodel {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Some z in [lo, hi] with z = r (mod n).
bool exists_residue(int lo, int hi, int r, int n)
{
    if (lo > hi)
        return false;
    return lo + floor_mod(r - lo, n) <= hi;
}

int ceil_div(int a, int b)
{
    // b > 0
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

} // namespace

std::string to_string(const Window& w)
{
    return std::to_string(w.lo()) + ".." + std::to_string(w.hi());
}

std::string to_string(const FountainFamily& f)
{
    return std::visit(overloaded{
                          [](const LeftFan& x) {
                              return "left_fan(p=" + std::to_string(x.p) + ", s_max=" + std::to_string(x.s_max) + ")";
                          },
                          [](const RightFan& x) {
                              return "right_fan(p=" + std::to_string(x.p) + ", u_min=" + std::to_string(x.u_min) + ")";
                          },
                          [](const Band& x) {
                              return "band(k_max=" + std::to_string(x.k_max) + ", l_min=" + std::to_string(x.l_min) + ")";
                          },
                          [](const HalfLeft& x) { return "half_left(p=" + std::to_string(x.p) + ")"; },
                          [](const HalfRight& x) { return "half_right(q=" + std::to_string(x.q) + ")"; },
                      },
                      f);
}

std::vector<int> parameters(const FountainFamily& f)
{
    return std::visit(overloaded{
                          [](const LeftFan& x) { return std::vector<int>{x.p, x.s_max}; },
                          [](const RightFan& x) { return std::vector<int>{x.p, x.u_min}; },
                          [](const Band& x) { return std::vector<int>{x.k_max, x.l_min}; },
                          [](const HalfLeft& x) { return std::vector<int>{x.p}; },
                          [](const HalfRight& x) { return std::vector<int>{x.q}; },
                      },
                      f);
}

bool family_contains(const FountainFamily& f, const Arc& a, const ModelParams& p) noexcept
{
    if (!is_admissible(a, p))
        return false;
    return std::visit(overloaded{
                          [&](const LeftFan& x) { return a.u() == x.p && a.t() <= x.s_max; },
                          [&](const RightFan& x) { return a.t() == x.p && a.u() >= x.u_min; },
                          [&](const Band& x) { return a.t() <= x.k_max && a.u() >= x.l_min; },
                          [&](const HalfLeft& x) { return a.u() <= x.p; },
                          [&](const HalfRight& x) { return a.t() >= x.q; },
                      },
                      f);
}

// For a = (x, y), a member b crosses a iff exactly one endpoint of b lies
// strictly inside (x, y). Whenever the outside endpoint of a family member is
// unbounded, residues can always be matched, so only the bounded endpoint
// needs a search, and that search spans at most one period.
bool family_crosses(const FountainFamily& f, const Arc& a, const ModelParams& p) noexcept
{
    const int x = a.t(), y = a.u(), n = p.n();
    return std::visit(overloaded{
                          [&](const LeftFan& fan) {
                              if (x < fan.p && fan.p < y)
                                  return true;
                              if (fan.p > y)
                                  return exists_residue(x + 1, std::min(y - 1, fan.s_max), fan.p - 1, n);
                              return false;
                          },
                          [&](const RightFan& fan) {
                              if (x < fan.p && fan.p < y)
                                  return true;
                              if (fan.p < x)
                                  return exists_residue(std::max(x + 1, fan.u_min), y - 1, fan.p + 1, n);
                              return false;
                          },
                          [&](const Band& b) {
                              return std::max(x + 1, b.l_min) <= y - 1 || x + 1 <= std::min(y - 1, b.k_max);
                          },
                          [&](const HalfLeft& h) { return h.p >= x + 1; },
                          [&](const HalfRight& h) { return h.q <= y - 1; },
                      },
                      f);
}

ArcSet::ArcSet(ModelParams params, std::vector<Arc> explicit_arcs, std::vector<FountainFamily> families)
    : params_(params), families_(std::move(families))
{
    for (const Arc& a : explicit_arcs) {
        require_admissible(a, params_);
        explicit_.insert(a);
    }
}

std::optional<std::pair<int, int>> ArcSet::explicit_span() const
{
    if (explicit_.empty())
        return std::nullopt;
    int lo = explicit_.begin()->t(), hi = lo;
    for (const Arc& a : explicit_) {
        lo = std::min(lo, a.t());
        hi = std::max(hi, a.u());
    }
    return std::pair{lo, hi};
}

std::optional<std::pair<int, int>> ArcSet::support_span() const
{
    auto span = explicit_span();
    for (const FountainFamily& f : families_) {
        for (int v : parameters(f)) {
            if (!span)
                span = std::pair{v, v};
            span->first = std::min(span->first, v);
            span->second = std::max(span->second, v);
        }
    }
    return span;
}

std::vector<Arc> ArcSet::members_in(const Window& w) const
{
    std::vector<Arc> out;
    for (const Arc& a : admissible_arcs(w, params_))
        if (contains(*this, a))
            out.push_back(a);
    return out;
}

// ---------------------------------------------------------------------------
// IntRegion

void IntRegion::add_point(int v)
{
    points_.insert(v);
    canonicalize();
}

void IntRegion::add_left_ray(int p)
{
    left_ = left_ ? std::max(*left_, p) : p;
    canonicalize();
}

void IntRegion::add_right_ray(int q)
{
    right_ = right_ ? std::min(*right_, q) : q;
    canonicalize();
}

void IntRegion::canonicalize()
{
    if (left_)
        while (points_.count(*left_ + 1))
            ++*left_;
    if (right_)
        while (points_.count(*right_ - 1))
            --*right_;
    std::erase_if(points_, [&](int v) { return (left_ && v <= *left_) || (right_ && v >= *right_); });
}

bool IntRegion::contains(int v) const noexcept
{
    return (left_ && v <= *left_) || (right_ && v >= *right_) || points_.count(v) > 0;
}

std::optional<int> IntRegion::missing_from(const IntRegion& other) const
{
    if (is_all())
        return std::nullopt;
    if (other.left_ && (!left_ || *left_ < *other.left_)) {
        // Largest missing integer <= other.left_; left_ + 1 is missing since *this is not everything.
        int v = *other.left_;
        if (right_ && v >= *right_)
            v = *right_ - 1;
        while (contains(v))
            --v;
        return v;
    }
    for (int v : other.points_)
        if (!contains(v))
            return v;
    if (other.right_ && (!right_ || *right_ > *other.right_)) {
        int v = *other.right_;
        if (left_ && v <= *left_)
            v = *left_ + 1;
        while (contains(v))
            ++v;
        return v;
    }
    return std::nullopt;
}

std::string IntRegion::to_string() const
{
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first)
            os << " u ";
        first = false;
    };
    if (left_) {
        sep();
        os << "(-inf," << *left_ << "]";
    }
    for (int v : points_) {
        sep();
        os << "{" << v << "}";
    }
    if (right_) {
        sep();
        os << "[" << *right_ << ",inf)";
    }
    if (first)
        os << "{}";
    return os.str();
}

// ---------------------------------------------------------------------------

std::vector<Arc> admissible_arcs(const Window& w, const ModelParams& p)
{
    std::vector<Arc> out;
    const int n = p.n();
    for (int t = w.lo(); t <= w.hi(); ++t)
        for (int u = t + 2; u <= w.hi(); ++u)
            if (floor_mod(u - t - 1, n) == 0)
                out.emplace_back(t, u);
    return out;
}

bool contains(const ArcSet& s, const Arc& a)
{
    require_admissible(a, s.params());
    if (s.explicit_arcs().count(a))
        return true;
    return std::any_of(s.families().begin(), s.families().end(),
                       [&](const FountainFamily& f) { return family_contains(f, a, s.params()); });
}

bool crosses_set(const Arc& a, const ArcSet& s)
{
    require_admissible(a, s.params());
    for (const Arc& b : s.explicit_arcs())
        if (cross(a, b))
            return true;
    return std::any_of(s.families().begin(), s.families().end(),
                       [&](const FountainFamily& f) { return family_crosses(f, a, s.params()); });
}

std::vector<Arc> nc_window(const ArcSet& s, const Window& w)
{
    std::vector<Arc> out;
    for (const Arc& a : admissible_arcs(w, s.params()))
        if (!crosses_set(a, s))
            out.push_back(a);
    return out;
}

ArcSet nc_closure(const ArcSet& s)
{
    if (!s.is_finite())
        throw ArcError(ErrorKind::UnsupportedFamilies, "nc_closure requires a finite set");
    const auto span = s.explicit_span();
    if (!span) {
        // nc of nothing is every admissible arc.
        return ArcSet(s.params(), {}, {HalfLeft{0}, HalfRight{1}, Band{0, 1}});
    }
    const auto [m, M] = *span;
    auto strictly_inside_member = [&](int v) {
        return std::any_of(s.explicit_arcs().begin(), s.explicit_arcs().end(),
                           [&](const Arc& b) { return b.t() < v && v < b.u(); });
    };

    std::vector<FountainFamily> families{HalfLeft{m}, HalfRight{M}, Band{m, M}};
    for (int v = m + 1; v < M; ++v) {
        if (strictly_inside_member(v))
            continue;
        families.push_back(LeftFan{v, m - 1});
        families.push_back(RightFan{v, M + 1});
    }
    ArcSet skeleton(s.params(), {}, families);
    std::vector<Arc> inner;
    for (const Arc& a : admissible_arcs(Window(m, M), s.params()))
        if (!crosses_set(a, s) && !contains(skeleton, a))
            inner.push_back(a);
    return ArcSet(s.params(), inner, families);
}

FountainLoci fountain_loci(const ArcSet& s)
{
    FountainLoci loci;
    for (const FountainFamily& f : s.families()) {
        std::visit(overloaded{
                       [&](const LeftFan& x) { loci.left.add_point(x.p); },
                       [&](const RightFan& x) { loci.right.add_point(x.p); },
                       [&](const Band& x) {
                           loci.right.add_left_ray(x.k_max);
                           loci.left.add_right_ray(x.l_min);
                       },
                       [&](const HalfLeft& x) { loci.left.add_left_ray(x.p); },
                       [&](const HalfRight& x) { loci.right.add_right_ray(x.q); },
                   },
                   f);
    }
    return loci;
}

FinitenessReport finiteness_check(const ArcSet& s)
{
    const FountainLoci loci = fountain_loci(s);
    FinitenessReport r;
    r.contravariant_witness = loci.left.missing_from(loci.right);
    r.contravariant_ok = !r.contravariant_witness;
    r.covariant_witness = loci.right.missing_from(loci.left);
    r.covariant_ok = !r.covariant_witness;
    return r;
}

std::vector<Arc> frame(const ArcSet& s, const Window& w)
{
    std::vector<Arc> out;
    for (const Arc& a : s.members_in(w))
        if (!crosses_set(a, s))
            out.push_back(a);
    return out;
}

PtolemyResult is_ptolemy_window(const ArcSet& s, const Window& w)
{
    const std::vector<Arc> members = s.members_in(w);
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const Arc& a = members[i];
            const Arc& b = members[j];
            if (!cross(a, b))
                continue;
            // Crossing endpoints are pairwise distinct, so every corner is a genuine pair.
            const Arc corners[] = {Arc(a.t(), b.t()), Arc(a.t(), b.u()), Arc(a.u(), b.t()), Arc(a.u(), b.u())};
            for (const Arc& c : corners)
                if (is_admissible(c, s.params()) && !contains(s, c))
                    return {false, PtolemyViolation{a, b, c}};
        }
    }
    return {};
}

bool in_nc_nc(const Arc& a, const ArcSet& s)
{
    if (!s.is_finite())
        throw ArcError(ErrorKind::UnsupportedFamilies, "in_nc_nc is defined for finite sets only");
    require_admissible(a, s.params());
    int lo = a.t(), hi = a.u();
    if (const auto span = s.explicit_span()) {
        lo = std::min(lo, span->first);
        hi = std::max(hi, span->second);
    }
    const int margin = s.params().n() + 2;
    for (const Arc& b : admissible_arcs(Window(lo - margin, hi + margin), s.params()))
        if (cross(a, b) && !crosses_set(b, s))
            return false;
    return true;
}

CoreSplit split_at_core(const ArcSet& s, int lo, int hi)
{
    if (const auto span = s.support_span(); span && (span->first < lo || span->second > hi))
        throw ArcError(ErrorKind::InvalidWindow, "core interval must cover the set's parameters");
    const int n = s.params().n();
    CoreSplit out;
    out.lo = lo;
    out.hi = hi;

    // Below lo and above hi every family's membership depends only on the
    // endpoint inside the core, so one representative per piece decides it.
    out.half_left = contains(s, Arc(lo - 2 - n, lo - 1));
    out.half_right = contains(s, Arc(hi + 1, hi + 2 + n));
    {
        const int l = hi + 1;
        const int k = l - 1 - n * std::max(1, ceil_div(l - lo, n));
        out.band = contains(s, Arc(k, l));
    }
    for (int v = lo; v <= hi; ++v) {
        const int sv = v - 1 - n * std::max(1, ceil_div(v - lo, n));
        if (contains(s, Arc(sv, v)))
            out.left_fans.push_back(v);
        const int uv = v + 1 + n * std::max(1, ceil_div(hi - v, n));
        if (contains(s, Arc(v, uv)))
            out.right_fans.push_back(v);
    }
    if (lo < hi)
        out.inner = s.members_in(Window(lo, hi));
    return out;
}

} // namespace arcmodel
