#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "arcmodel/arc.hpp"

namespace arcmodel {

/// Inclusive integer interval [lo, hi] used to truncate enumeration.
class Window {
public:
    Window(int lo, int hi) : lo_(lo), hi_(hi)
    {
        if (lo >= hi)
            throw ArcError(ErrorKind::InvalidWindow,
                           "window needs lo < hi, got " + std::to_string(lo) + ".." + std::to_string(hi));
    }

    int lo() const noexcept { return lo_; }
    int hi() const noexcept { return hi_; }
    bool contains(int v) const noexcept { return lo_ <= v && v <= hi_; }
    bool contains(const Arc& a) const noexcept { return contains(a.t()) && contains(a.u()); }
    bool contains(const Window& w) const noexcept { return lo_ <= w.lo_ && w.hi_ <= hi_; }

    friend bool operator==(const Window&, const Window&) = default;

private:
    int lo_;
    int hi_;
};

std::string to_string(const Window& w);

/// All admissible arcs (s, p) with s <= s_max.
struct LeftFan {
    int p;
    int s_max;
    friend bool operator==(const LeftFan&, const LeftFan&) = default;
};
/// All admissible arcs (p, u) with u >= u_min.
struct RightFan {
    int p;
    int u_min;
    friend bool operator==(const RightFan&, const RightFan&) = default;
};
/// All admissible arcs (k, l) with k <= k_max and l >= l_min.
struct Band {
    int k_max;
    int l_min;
    friend bool operator==(const Band&, const Band&) = default;
};
/// All admissible arcs with both endpoints <= p.
struct HalfLeft {
    int p;
    friend bool operator==(const HalfLeft&, const HalfLeft&) = default;
};
/// All admissible arcs with both endpoints >= q.
struct HalfRight {
    int q;
    friend bool operator==(const HalfRight&, const HalfRight&) = default;
};

using FountainFamily = std::variant<LeftFan, RightFan, Band, HalfLeft, HalfRight>;

std::string to_string(const FountainFamily& f);
/// The integer parameters of a family, in declaration order.
std::vector<int> parameters(const FountainFamily& f);

bool family_contains(const FountainFamily& f, const Arc& a, const ModelParams& p) noexcept;
/// Decides whether some member of f crosses a, without enumerating f.
bool family_crosses(const FountainFamily& f, const Arc& a, const ModelParams& p) noexcept;

/// A set of admissible arcs given by finitely many explicit arcs plus
/// finitely many infinite families. Immutable after construction.
class ArcSet {
public:
    explicit ArcSet(ModelParams params) : params_(params) {}
    ArcSet(ModelParams params, std::vector<Arc> explicit_arcs, std::vector<FountainFamily> families = {});

    const ModelParams& params() const noexcept { return params_; }
    const std::set<Arc>& explicit_arcs() const noexcept { return explicit_; }
    const std::vector<FountainFamily>& families() const noexcept { return families_; }
    bool is_finite() const noexcept { return families_.empty(); }

    /// [min, max] over explicit endpoints; nullopt when there are none.
    std::optional<std::pair<int, int>> explicit_span() const;
    /// [min, max] over explicit endpoints and family parameters.
    std::optional<std::pair<int, int>> support_span() const;

    /// Members with both endpoints in w, sorted.
    std::vector<Arc> members_in(const Window& w) const;

private:
    ModelParams params_;
    std::set<Arc> explicit_;
    std::vector<FountainFamily> families_;
};

/// A subset of the integers: finitely many points plus at most one ray
/// (-inf, left_ray] and one ray [right_ray, inf). Kept canonical: points
/// adjacent to or covered by a ray are absorbed into it.
class IntRegion {
public:
    void add_point(int v);
    void add_left_ray(int p);
    void add_right_ray(int q);

    bool contains(int v) const noexcept;
    bool empty() const noexcept { return points_.empty() && !left_ && !right_; }
    /// Every integer belongs to the region.
    bool is_all() const noexcept { return left_ && right_ && *right_ <= *left_ + 1; }

    /// Returns nullopt when other is a subset of *this, else an element of
    /// other missing from *this.
    std::optional<int> missing_from(const IntRegion& other) const;

    const std::set<int>& points() const noexcept { return points_; }
    std::optional<int> left_ray() const noexcept { return left_; }
    std::optional<int> right_ray() const noexcept { return right_; }

    std::string to_string() const;

    friend bool operator==(const IntRegion&, const IntRegion&) = default;

private:
    void canonicalize();

    std::set<int> points_;
    std::optional<int> left_;
    std::optional<int> right_;
};

struct FountainLoci {
    IntRegion left;  ///< left-fountains: infinitely many arcs (s, t) end at t
    IntRegion right; ///< right-fountains: infinitely many arcs (t, u) start at t
};

struct FinitenessReport {
    bool contravariant_ok = true; ///< right-fountains are left-fountains
    std::optional<int> contravariant_witness;
    bool covariant_ok = true; ///< left-fountains are right-fountains
    std::optional<int> covariant_witness;
};

struct PtolemyViolation {
    Arc first;
    Arc second;
    Arc missing;
};

struct PtolemyResult {
    bool ok = true;
    std::optional<PtolemyViolation> violation;
};

/// Every admissible arc with both endpoints in w, sorted by (t, u).
std::vector<Arc> admissible_arcs(const Window& w, const ModelParams& p);

bool contains(const ArcSet& s, const Arc& a);
bool crosses_set(const Arc& a, const ArcSet& s);

/// Admissible arcs inside w crossing no member of s (exact, s is not truncated).
std::vector<Arc> nc_window(const ArcSet& s, const Window& w);

/// Exact symbolic nc of a finite set, expressed with families.
ArcSet nc_closure(const ArcSet& s);

FountainLoci fountain_loci(const ArcSet& s);
FinitenessReport finiteness_check(const ArcSet& s);

/// Members of s inside w that cross no member of s.
std::vector<Arc> frame(const ArcSet& s, const Window& w);

PtolemyResult is_ptolemy_window(const ArcSet& s, const Window& w);

/// Whether a lies in nc nc s, for finite s. Witness arcs are searched with
/// endpoints within n + 2 of the data's span; beyond it every crossing
/// relation with s and a is constant modulo n.
bool in_nc_nc(const Arc& a, const ArcSet& s);

/// Normal form of a set relative to a core interval [lo, hi] that covers
/// every parameter and explicit endpoint: pieces whose free endpoints run
/// off to infinity, plus the finite part inside the core.
struct CoreSplit {
    int lo;
    int hi;
    bool half_left = false;      ///< HalfLeft(lo - 1)
    bool half_right = false;     ///< HalfRight(hi + 1)
    bool band = false;           ///< Band(lo - 1, hi + 1)
    std::vector<int> left_fans;  ///< v in [lo, hi] with LeftFan(v, lo - 1)
    std::vector<int> right_fans; ///< t in [lo, hi] with RightFan(t, hi + 1)
    std::vector<Arc> inner;      ///< members with both endpoints in [lo, hi]
};

CoreSplit split_at_core(const ArcSet& s, int lo, int hi);

} // namespace arcmodel
