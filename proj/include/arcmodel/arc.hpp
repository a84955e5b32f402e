#pragma once

#include <compare>
#include <string>

#include "arcmodel/error.hpp"

namespace arcmodel {

/// Floor modulus; the result lies in [0, m) for every integer a and m > 0.
constexpr int floor_mod(int a, int m)
{
    const int r = a % m;
    return r < 0 ? r + m : r;
}

/// The integer n fixing the n-cluster category C_n(A_inf).
class ModelParams {
public:
    explicit ModelParams(int n) : n_(n)
    {
        if (n < 1)
            throw ArcError(ErrorKind::InvalidParams, "n must be >= 1, got " + std::to_string(n));
    }

    int n() const noexcept { return n_; }

    friend bool operator==(const ModelParams&, const ModelParams&) = default;

private:
    int n_;
};

/// An arc of the infinity-gon, stored with left endpoint < right endpoint.
/// Construction normalizes the endpoint order; equal endpoints are rejected.
class Arc {
public:
    Arc(int a, int b)
    {
        if (a == b)
            throw ArcError(ErrorKind::DegeneratePair, "arc endpoints coincide at " + std::to_string(a));
        t_ = a < b ? a : b;
        u_ = a < b ? b : a;
    }

    int t() const noexcept { return t_; }
    int u() const noexcept { return u_; }
    int length() const noexcept { return u_ - t_; }

    /// True when p is one of the two endpoints.
    bool has_endpoint(int p) const noexcept { return p == t_ || p == u_; }
    /// The endpoint that is not p. Requires has_endpoint(p).
    int other_endpoint(int p) const noexcept { return p == t_ ? u_ : t_; }

    /// Weak nesting: this arc's endpoints lie in [outer.t, outer.u].
    bool nested_in(const Arc& outer) const noexcept { return outer.t_ <= t_ && u_ <= outer.u_; }

    friend auto operator<=>(const Arc&, const Arc&) = default;

private:
    int t_;
    int u_;
};

std::string to_string(const Arc& a);

struct ComponentIndex {
    int idx;
    friend bool operator==(const ComponentIndex&, const ComponentIndex&) = default;
};

/// Returns (min(t,u), max(t,u)); throws DegeneratePair when t == u.
Arc normalize(int t, int u);

/// u - t >= 2 and u - t = 1 (mod n).
bool is_admissible(const Arc& a, const ModelParams& p) noexcept;
void require_admissible(const Arc& a, const ModelParams& p);

/// Sigma^k: (t, u) -> (t - k, u - k). Negative k applies the inverse suspension.
Arc shift(const Arc& a, int k) noexcept;
/// Serre functor S = Sigma^(n+1).
Arc serre(const Arc& a, const ModelParams& p) noexcept;
/// Auslander-Reiten translation tau = Sigma^n.
Arc tau(const Arc& a, const ModelParams& p) noexcept;

/// AR-quiver component of an admissible arc, labelled by u mod n
/// (0 is R, and Sigma moves component i to i - 1 mod n).
ComponentIndex component(const Arc& a, const ModelParams& p);

/// r < t < s < u or t < r < u < s. Shared endpoints and nesting never cross.
bool cross(const Arc& a, const Arc& b) noexcept;

} // namespace arcmodel
