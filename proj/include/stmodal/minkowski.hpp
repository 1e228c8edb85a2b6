#pragma once

#include "stmodal/ladder.hpp"
#include "stmodal/rational.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace stmodal {

/// Event with exact rational coordinates, time first: (x^0, x^1, ..., x^n).
struct MinkPoint {
    std::vector<Rational> coords;

    MinkPoint() = default;
    MinkPoint(std::initializer_list<Rational> c) : coords(c) {}
    explicit MinkPoint(std::vector<Rational> c) : coords(std::move(c)) {}

    [[nodiscard]] std::size_t spatial_dim() const { return coords.empty() ? 0 : coords.size() - 1; }
    [[nodiscard]] const Rational& time() const { return coords.at(0); }

    friend bool operator==(const MinkPoint&, const MinkPoint&) = default;
};

MinkPoint operator+(const MinkPoint& a, const MinkPoint& b);
MinkPoint operator-(const MinkPoint& a, const MinkPoint& b);
MinkPoint operator*(const Rational& s, const MinkPoint& a);

/// "(0,1/2,-3)".
std::string to_string(const MinkPoint& p);
/// Comma-separated rationals, optionally wrapped in parentheses.
MinkPoint parse_point(std::string_view s);

/// Flat 1+n dimensional Minkowski space, metric diag(-1, 1, ..., 1).
struct Minkowski {
    std::size_t n = 1;
};

/// 1+1 Minkowski space quotiented by the null translation (t, th) ~ (t + L, th + L), with
/// finitely many points removed. Points are (t, th); th is reduced modulo L together with t.
struct Cylinder {
    Rational circumference{1};
    std::vector<MinkPoint> punctures;
};

using Space = std::variant<Minkowski, Cylinder>;

/// "mink:N" or "cyl:L=Q[,puncture=t,th]..." .
Space parse_space(std::string_view s);
std::string to_string(const Space& s);
std::size_t spatial_dim(const Space& s);

struct RelationVerdict {
    bool chron = false;
    bool caus = false;
    bool horismos = false;
    bool after = false;
};

/// "chron", "horismos" (after but not chron), "equal", or "none".
std::string strongest_relation(const RelationVerdict& v, bool same_point);

/// Canonical representative of a cylinder point (th in [0, L)); identity on Minkowski space.
MinkPoint canonical(const Space& s, const MinkPoint& p);
bool same_point(const Space& s, const MinkPoint& a, const MinkPoint& b);

/// Exact causal relations from x to y. Throws DimensionMismatch, and PreconditionFailed for
/// cylinder points that coincide with a puncture.
RelationVerdict relate(const Space& space, const MinkPoint& x, const MinkPoint& y);

/// Whether x lies on a causal loop: true iff its right-moving null circle meets no puncture.
bool after_reflexive(const Cylinder& cyl, const MinkPoint& x);

/// Restriction of the analytic relations to the given points (worlds p0, p1, ... zero padded).
/// Throws PreconditionFailed on duplicate points.
CausalFrame sample_frame(const Space& space, const std::vector<MinkPoint>& points);

/// Squared Minkowski interval (v^0)^2 - |v|^2; positive for timelike vectors.
Rational interval(const MinkPoint& v);
/// Lorentzian product a^0 b^0 - a.b, so interval(v) == lorentz_dot(v, v).
Rational lorentz_dot(const MinkPoint& a, const MinkPoint& b);

} // namespace stmodal
