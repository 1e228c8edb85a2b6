#include "stmodal/witness.hpp"

#include "stmodal/errors.hpp"

#include <functional>

namespace stmodal {

namespace {

constexpr int max_halvings = 64;

bool after(const Space& s, const MinkPoint& a, const MinkPoint& b) { return relate(s, a, b).after; }
bool chron(const Space& s, const MinkPoint& a, const MinkPoint& b) { return relate(s, a, b).chron; }
bool horismos(const Space& s, const MinkPoint& a, const MinkPoint& b) { return relate(s, a, b).horismos; }

void require(bool ok, const std::string& what) {
    if (!ok) throw PreconditionFailed(what);
}

bool is_witness(const Space& s, const MinkPoint& x, const MinkPoint& t, const MinkPoint& y1, const MinkPoint& y2,
                const MinkPoint& z) {
    return after(s, x, t) && after(s, t, z) && (after(s, t, y1) || after(s, t, y2));
}

// Walks t = x + s(target - x) for s = 1/2, 1/4, ... and returns the first accepted point.
std::optional<MinkPoint> halve_toward(const MinkPoint& x, const MinkPoint& target,
                                      const std::function<bool(const MinkPoint&)>& ok) {
    const MinkPoint d = target - x;
    Rational s(1, 2);
    for (int i = 0; i < max_halvings; ++i, s /= 2) {
        MinkPoint t = x + s * d;
        if (ok(t)) return t;
    }
    return std::nullopt;
}

MinkPoint midpoint(const MinkPoint& a, const MinkPoint& b) { return Rational(1, 2) * (a + b); }

void check_incomparable(const Space& s, const MinkPoint& y1, const MinkPoint& y2) {
    require(!(y1 == y2), "y1 and y2 must differ");
    require(!after(s, y1, y2) && !after(s, y2, y1), "y1 and y2 must be incomparable");
}

} // namespace

MinkPoint aaf_witness(const Space& space, const MinkPoint& x, const MinkPoint& y, const MinkPoint& y1,
                      const MinkPoint& y2, const MinkPoint& z) {
    require(std::holds_alternative<Minkowski>(space), "aaf witness needs a Minkowski space");
    require(after(space, x, y), "need x after y");
    require(after(space, y, y1) && after(space, y, y2), "need y after y1 and y2");
    check_incomparable(space, y1, y2);
    if (x == z) return x;
    require(after(space, x, z), "need x after z");

    const MinkPoint* yi = chron(space, x, y1) ? &y1 : chron(space, x, y2) ? &y2 : nullptr;
    if (yi == nullptr) throw WitnessSearchExhausted("neither y1 nor y2 is chronologically after x");
    auto ok = [&](const MinkPoint& t) { return is_witness(space, x, t, y1, y2, z); };
    // x << z: the open diamond between x and both targets contains points near x on the way to
    // their midpoint. x -> z: t must stay on the null segment [x, z].
    const MinkPoint target = chron(space, x, z) ? midpoint(*yi, z) : z;
    if (auto t = halve_toward(x, target, ok)) return *t;
    throw WitnessSearchExhausted("aaf witness not found within " + std::to_string(max_halvings) + " halvings");
}

MinkPoint aa2f_witness_2d(const MinkPoint& x, const MinkPoint& y1, const MinkPoint& y2, const MinkPoint& z) {
    const Space space = Minkowski{1};
    require(after(space, x, y1) && after(space, x, y2), "need x after y1 and y2");
    check_incomparable(space, y1, y2);
    if (x == z) return x;
    require(after(space, x, z), "need x after z");

    auto ok = [&](const MinkPoint& t) { return is_witness(space, x, t, y1, y2, z); };
    std::vector<MinkPoint> targets;
    if (horismos(space, x, z)) {
        // Either some y_i is chronologically after x, or both are null and one of them shares
        // z's light line; both cases are settled near x on [x, z].
        targets.push_back(z);
    } else {
        for (const MinkPoint* yi : {&y1, &y2}) {
            if (chron(space, x, *yi)) targets.push_back(midpoint(*yi, z));
            else targets.push_back(*yi);
        }
    }
    for (const auto& target : targets)
        if (auto t = halve_toward(x, target, ok)) return *t;
    throw WitnessSearchExhausted("aa2f witness not found within " + std::to_string(max_halvings) + " halvings");
}

// ---------------------------------------------------------------------------
// Certificate

namespace {

bool same_ray(const MinkPoint& u, const MinkPoint& v) {
    // Future null vectors share a ray iff u v^0 == v u^0.
    return u.time() * v == v.time() * u;
}

Rational eval(const SegmentAnalysis& f, const Rational& s) { return (f.a * s + f.b) * s + f.c; }

SegmentAnalysis analyse(const MinkPoint& x, const MinkPoint& y, const MinkPoint& z) {
    const MinkPoint w = y - x;
    const MinkPoint d = z - x;
    SegmentAnalysis f;
    f.a = interval(d);
    f.b = -2 * lorentz_dot(w, d);
    f.c = interval(w);
    // Time order needs w^0 - s d^0 >= 0; t must also lie on [x, z].
    f.s_max = w.time() / d.time();
    if (f.s_max > 1) f.s_max = 1;
    if (f.s_max <= 0) return f;

    if (eval(f, f.s_max) >= 0) {
        f.s_hit = f.s_max;
        return f;
    }
    if (f.a < 0) {
        const Rational v = -f.b / (2 * f.a);
        if (v > 0 && v < f.s_max && eval(f, v) >= 0) {
            f.s_hit = v;
            return f;
        }
    }
    // Sign just right of zero is the sign of the lowest nonzero coefficient.
    const bool positive_near_zero = f.c > 0 || (f.c == 0 && (f.b > 0 || (f.b == 0 && f.a >= 0)));
    if (positive_near_zero) {
        Rational s = f.s_max;
        for (int i = 0; i < max_halvings && eval(f, s) < 0; ++i) s /= 2;
        if (eval(f, s) < 0) throw WitnessSearchExhausted("positive germ at zero not located");
        f.s_hit = s;
    }
    return f;
}

} // namespace

NoWitnessCertificate no_witness_certificate(const MinkPoint& x, const MinkPoint& y1, const MinkPoint& y2,
                                            const MinkPoint& z) {
    require(x.coords.size() >= 3, "certificate needs at least two spatial dimensions");
    const Space space = Minkowski{x.coords.size() - 1};
    for (const MinkPoint* p : {&y1, &y2, &z})
        require(!(*p == x) && horismos(space, x, *p) && !chron(space, x, *p),
                "each of y1, y2, z must be null separated from x");
    require(!same_ray(y1 - x, y2 - x) && !same_ray(y1 - x, z - x) && !same_ray(y2 - x, z - x),
            "y1, y2, z must lie on distinct rays from x");
    const MinkPoint* pts[] = {&y1, &y2, &z};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) require(!relate(space, *pts[i], *pts[j]).caus, "y1, y2, z must be pairwise spacelike");

    NoWitnessCertificate cert;
    cert.y1 = analyse(x, y1, z);
    cert.y2 = analyse(x, y2, z);
    cert.certified = !cert.y1.s_hit && !cert.y2.s_hit;
    return cert;
}

std::string format_certificate(const NoWitnessCertificate& cert) {
    std::string out = cert.certified ? "CERTIFIED no-witness\n" : "NOT-CERTIFIED\n";
    auto line = [&](const char* name, const SegmentAnalysis& f) {
        out += std::string(name) + " a=" + to_string(f.a) + " b=" + to_string(f.b) + " c=" + to_string(f.c) +
               " s_max=" + to_string(f.s_max) + " hit=" + (f.s_hit ? to_string(*f.s_hit) : "none") + "\n";
    };
    line("y1", cert.y1);
    line("y2", cert.y2);
    return out;
}

bool horismos_chain_check(const MinkPoint& x, const MinkPoint& y, const MinkPoint& y1, const MinkPoint& y2) {
    require(x.coords.size() >= 2, "points need a time and a space coordinate");
    const Space space = Minkowski{x.coords.size() - 1};
    require(horismos(space, x, y) && horismos(space, y, y1) && horismos(space, y, y2), "need x -> y -> y1, y2");
    require(horismos(space, x, y1) && horismos(space, x, y2), "need x -> y1, y2");
    return horismos(space, y1, y2) || horismos(space, y2, y1);
}

} // namespace stmodal
