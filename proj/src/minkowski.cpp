#include "stmodal/minkowski.hpp"

#include "stmodal/errors.hpp"

namespace stmodal {

MinkPoint operator+(const MinkPoint& a, const MinkPoint& b) {
    if (a.coords.size() != b.coords.size()) throw DimensionMismatch("point dimensions differ");
    MinkPoint r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

MinkPoint operator-(const MinkPoint& a, const MinkPoint& b) {
    if (a.coords.size() != b.coords.size()) throw DimensionMismatch("point dimensions differ");
    MinkPoint r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
    return r;
}

MinkPoint operator*(const Rational& s, const MinkPoint& a) {
    MinkPoint r = a;
    for (auto& c : r.coords) c *= s;
    return r;
}

std::string to_string(const MinkPoint& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.coords.size(); ++i) out += (i ? "," : "") + to_string(p.coords[i]);
    return out + ")";
}

MinkPoint parse_point(std::string_view s) {
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    return MinkPoint(parse_rational_list(s));
}

Rational lorentz_dot(const MinkPoint& a, const MinkPoint& b) {
    if (a.coords.size() != b.coords.size()) throw DimensionMismatch("point dimensions differ");
    Rational r = a.coords.at(0) * b.coords.at(0);
    for (std::size_t i = 1; i < a.coords.size(); ++i) r -= a.coords[i] * b.coords[i];
    return r;
}

Rational interval(const MinkPoint& v) { return lorentz_dot(v, v); }

// ---------------------------------------------------------------------------
// Spaces

namespace {

Rational mod(const Rational& a, const Rational& m) { return a - m * floor(a / m); }

// u = (y^0 - x^0) - (y^1 - x^1) is invariant under the null identification, and the cylinder
// relations depend on it alone: chron iff u > 0, after iff u >= 0 (before punctures).
Rational null_offset(const MinkPoint& x, const MinkPoint& y) {
    return (y.coords[0] - x.coords[0]) - (y.coords[1] - x.coords[1]);
}

void validate(const Cylinder& c) {
    if (c.circumference <= 0) throw std::invalid_argument("cylinder circumference must be positive");
    for (const auto& q : c.punctures)
        if (q.coords.size() != 2) throw DimensionMismatch("cylinder punctures are (t, theta) pairs");
    for (std::size_t i = 0; i < c.punctures.size(); ++i)
        for (std::size_t j = i + 1; j < c.punctures.size(); ++j)
            if (same_point(c, c.punctures[i], c.punctures[j]))
                throw std::invalid_argument("punctures must be distinct modulo the identification");
}

void require_dim(const MinkPoint& p, std::size_t coords) {
    if (p.coords.size() != coords)
        throw DimensionMismatch("expected " + std::to_string(coords) + " coordinates, got " +
                                std::to_string(p.coords.size()));
}

void require_not_puncture(const Cylinder& c, const MinkPoint& p) {
    for (const auto& q : c.punctures)
        if (same_point(c, p, q)) throw PreconditionFailed("point " + to_string(p) + " is a puncture");
}

RelationVerdict relate_minkowski(const MinkPoint& x, const MinkPoint& y) {
    const MinkPoint d = y - x;
    const Rational& dt = d.coords[0];
    const Rational q = interval(d);
    const bool equal = x == y;
    RelationVerdict v;
    v.chron = dt > 0 && q > 0;
    v.caus = equal || (dt >= 0 && q >= 0);
    v.horismos = equal || (dt >= 0 && q == 0);
    v.after = v.caus && !equal;
    return v;
}

RelationVerdict relate_cylinder(const Cylinder& c, const MinkPoint& x0, const MinkPoint& y0) {
    const MinkPoint x = canonical(c, x0);
    const MinkPoint y = canonical(c, y0);
    const Rational u = null_offset(x, y);
    RelationVerdict v;
    if (x == y) {
        v.after = after_reflexive(c, x);
    } else if (u > 0) {
        // Timelike diamonds are open, so finitely many punctures never block them.
        v.chron = true;
        v.after = true;
    } else if (u == 0) {
        // The only causal curves are the right-moving null segments x -> x + s(1,1) with
        // s = arc + kL. Longer windings contain the whole circle, so only the minimal arc
        // can avoid a puncture on it.
        const Rational arc = mod(y.coords[1] - x.coords[1], c.circumference);
        v.after = true;
        for (const auto& q : c.punctures) {
            if (null_offset(x, q) != 0) continue;
            const Rational a = mod(q.coords[1] - x.coords[1], c.circumference);
            if (a > 0 && a < arc) v.after = false;
        }
    }
    v.caus = v.after || x == y;
    v.horismos = v.caus && !v.chron;
    return v;
}

} // namespace

Space parse_space(std::string_view s) {
    if (s.rfind("mink:", 0) == 0) {
        const std::string n(s.substr(5));
        if (n.empty() || n.find_first_not_of("0123456789") != std::string::npos || std::stoul(n) == 0)
            throw std::invalid_argument("mink:N needs a positive spatial dimension");
        return Minkowski{std::stoul(n)};
    }
    if (s.rfind("cyl:L=", 0) == 0) {
        std::string_view rest = s.substr(6);
        constexpr std::string_view tag = ",puncture=";
        auto cut = rest.find(tag);
        Cylinder c;
        c.circumference = parse_rational(rest.substr(0, cut));
        while (cut != std::string_view::npos) {
            rest = rest.substr(cut + tag.size());
            cut = rest.find(tag);
            MinkPoint q = parse_point(rest.substr(0, cut));
            if (q.coords.size() != 2) throw std::invalid_argument("puncture needs t,theta");
            c.punctures.push_back(std::move(q));
        }
        validate(c);
        return c;
    }
    throw std::invalid_argument("space must be mink:N or cyl:L=Q[,puncture=t,theta]");
}

std::string to_string(const Space& s) {
    if (const auto* m = std::get_if<Minkowski>(&s)) return "mink:" + std::to_string(m->n);
    const auto& c = std::get<Cylinder>(s);
    std::string out = "cyl:L=" + to_string(c.circumference);
    for (const auto& q : c.punctures) out += ",puncture=" + to_string(q.coords[0]) + "," + to_string(q.coords[1]);
    return out;
}

std::size_t spatial_dim(const Space& s) {
    if (const auto* m = std::get_if<Minkowski>(&s)) return m->n;
    return 1;
}

std::string strongest_relation(const RelationVerdict& v, bool same) {
    if (v.chron) return "chron";
    if (v.after) return "horismos";
    if (same) return "equal";
    return "none";
}

MinkPoint canonical(const Space& s, const MinkPoint& p) {
    const auto* c = std::get_if<Cylinder>(&s);
    if (c == nullptr) return p;
    require_dim(p, 2);
    const Rational shift = c->circumference * floor(p.coords[1] / c->circumference);
    return MinkPoint{p.coords[0] - shift, p.coords[1] - shift};
}

bool same_point(const Space& s, const MinkPoint& a, const MinkPoint& b) { return canonical(s, a) == canonical(s, b); }

RelationVerdict relate(const Space& space, const MinkPoint& x, const MinkPoint& y) {
    if (const auto* m = std::get_if<Minkowski>(&space)) {
        require_dim(x, m->n + 1);
        require_dim(y, m->n + 1);
        return relate_minkowski(x, y);
    }
    const auto& c = std::get<Cylinder>(space);
    validate(c);
    require_dim(x, 2);
    require_dim(y, 2);
    require_not_puncture(c, x);
    require_not_puncture(c, y);
    return relate_cylinder(c, x, y);
}

bool after_reflexive(const Cylinder& cyl, const MinkPoint& x) {
    require_dim(x, 2);
    for (const auto& q : cyl.punctures)
        if (null_offset(x, q) == 0) return false;
    return true;
}

CausalFrame sample_frame(const Space& space, const std::vector<MinkPoint>& points) {
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (same_point(space, points[i], points[j]))
                throw PreconditionFailed("duplicate sample point " + to_string(points[j]));
    const std::size_t width = std::to_string(n == 0 ? 0 : n - 1).size();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        const std::string digits = std::to_string(i);
        names.push_back("p" + std::string(width - digits.size(), '0') + digits);
    }
    std::vector<WorldSet> chron(n, WorldSet(n));
    std::vector<WorldSet> after(n, WorldSet(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const RelationVerdict v = relate(space, points[i], points[j]);
            if (v.chron) chron[i].insert(j);
            if (v.after) after[i].insert(j);
        }
    CausalFrame cf(Frame(names, std::move(chron)), Frame(names, std::move(after)));
    cf.mark_sample_relative();
    return cf;
}

} // namespace stmodal
