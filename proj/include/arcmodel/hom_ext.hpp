#pragma once

#include <optional>
#include <vector>

#include "arcmodel/arc.hpp"

namespace arcmodel {

/// Which region of the AR quiver makes Ext^1(x, y) nonzero.
///  SameComponent: Sigma y lies in F^-(Sx), so y sits in the component of x.
///  NextComponent: Sigma y lies in F^+(x), so x sits in the next component.
enum class ExtCase { SameComponent, NextComponent, Zero };

const char* to_string(ExtCase c);

struct ExtClassification {
    ExtCase kind = ExtCase::Zero;
    /// Both region tests succeeded; kind then reports SameComponent.
    bool overlap = false;
};

/// A triangle y -> mid1 (+) mid2 -> x. Missing middle terms are zero objects.
struct ExtTriangle {
    Arc left;
    std::optional<Arc> mid1;
    std::optional<Arc> mid2;
    Arc right;

    std::vector<Arc> middle() const;
};

/// Classifies Ext^1(x, y) for x = (r,s), y = (t,u):
///   SameComponent  iff u = s (mod n), t <= r - n, r + 1 <= u <= s - n
///   NextComponent  iff u = s + 1 (mod n), r + 1 <= t <= s - n, s + 1 <= u
ExtClassification ext1_case(const Arc& x, const Arc& y, const ModelParams& p);

/// dim Ext^i(x, y) = dim Ext^1(x, Sigma^(i-1) y), always 0 or 1.
int ext_dim(const Arc& x, const Arc& y, int i, const ModelParams& p);

/// dim Hom(x, y) = dim Ext^1(x, Sigma^-1 y).
int hom_dim(const Arc& x, const Arc& y, const ModelParams& p);

/// [ext_dim(x,y,1), ..., ext_dim(x,y,n)].
std::vector<int> ext_profile(const Arc& x, const Arc& y, const ModelParams& p);

/// The extension triangle y -> (t,s) (+) (r,u) -> x (SameComponent) or
/// y -> (s,u) (+) (r,t) -> x (NextComponent). Non-admissible middle pairs are dropped.
ExtTriangle ext_triangle(const Arc& x, const Arc& y, const ModelParams& p);

} // namespace arcmodel
