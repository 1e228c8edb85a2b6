#include "stmodal/correspondence.hpp"

#include "stmodal/errors.hpp"

#include <optional>

namespace stmodal {

bool has_fo_correspondent(AxiomName a) { return a != AxiomName::rob2; }

std::string_view fo_condition(AxiomName a) {
    switch (a) {
    case AxiomName::a4: return "forall x,y,z (x<y & y<z -> x<z)";
    case AxiomName::aT: return "forall x (x<x)";
    case AxiomName::aD: return "forall x exists y (x<y)";
    case AxiomName::ad: return "forall x,y (x<y -> exists t (x<t & t<y))";
    case AxiomName::ad2: return "forall x,y1,y2 (x<y1 & x<y2 -> exists t (x<t & t<y1 & t<y2))";
    case AxiomName::a2: return "forall x,y,z (x<y & x<z -> exists w (y<w & z<w))";
    case AxiomName::ad32:
        return "forall x,y1,y2,y3 (x<y1 & x<y2 & x<y3 -> exists t (x<t & "
               "((t<y1 & t<y2) | (t<y1 & t<y3) | (t<y2 & t<y3))))";
    case AxiomName::aaf:
        return "forall x,y,y1,y2,z (x<y & y<y1 & y<y2 & x<z & y1!=y2 & ~y1<y2 & ~y2<y1 -> "
               "exists t (x<t & t<z & (t<y1 | t<y2)))";
    case AxiomName::aa2f:
        return "forall x,y1,y2,z (x<y1 & x<y2 & x<z & y1!=y2 & ~y1<y2 & ~y2<y1 -> "
               "exists t (x<t & t<z & (t<y1 | t<y2)))";
    case AxiomName::rob2: break;
    }
    return "";
}

namespace {

using Bindings = std::vector<std::pair<std::string, World>>;

void require_supported(AxiomName a) {
    if (!has_fo_correspondent(a))
        throw UnsupportedAxiom("no first-order correspondent implemented for " + std::string(to_string(a)));
}

bool incomparable(const Frame& f, World a, World b) { return a != b && !f.related(a, b) && !f.related(b, a); }

// Smallest counterexample rooted at x, using set algebra for the existential.
std::optional<Bindings> first_failure_at(const Frame& f, AxiomName a, World x) {
    const WorldSet& after_x = f.successors(x);
    const auto succ = after_x.members();
    auto pre = [&](World w) -> const WorldSet& { return f.predecessors(w); };
    switch (a) {
    case AxiomName::a4:
        for (World y : succ) {
            const WorldSet missing = f.successors(y) - after_x;
            if (!missing.empty()) return Bindings{{"x", x}, {"y", y}, {"z", missing.first()}};
        }
        break;
    case AxiomName::aT:
        if (!f.related(x, x)) return Bindings{{"x", x}};
        break;
    case AxiomName::aD:
        if (after_x.empty()) return Bindings{{"x", x}};
        break;
    case AxiomName::ad:
        for (World y : succ)
            if (!after_x.intersects(pre(y))) return Bindings{{"x", x}, {"y", y}};
        break;
    case AxiomName::ad2:
        for (World y1 : succ)
            for (World y2 : succ)
                if ((after_x & pre(y1) & pre(y2)).empty()) return Bindings{{"x", x}, {"y1", y1}, {"y2", y2}};
        break;
    case AxiomName::a2:
        for (World y : succ)
            for (World z : succ)
                if (!f.successors(y).intersects(f.successors(z))) return Bindings{{"x", x}, {"y", y}, {"z", z}};
        break;
    case AxiomName::ad32:
        for (World y1 : succ) {
            const WorldSet a1 = after_x & pre(y1);
            for (World y2 : succ) {
                const WorldSet a2 = after_x & pre(y2);
                const WorldSet a12 = a1 & a2;
                for (World y3 : succ) {
                    const WorldSet a3 = after_x & pre(y3);
                    if (a12.empty() && !a1.intersects(a3) && !a2.intersects(a3))
                        return Bindings{{"x", x}, {"y1", y1}, {"y2", y2}, {"y3", y3}};
                }
            }
        }
        break;
    case AxiomName::aaf:
        for (World y : succ) {
            const auto above = f.successors(y).members();
            for (World y1 : above)
                for (World y2 : above) {
                    if (!incomparable(f, y1, y2)) continue;
                    const WorldSet reach = after_x & (pre(y1) | pre(y2));
                    for (World z : succ)
                        if (!reach.intersects(pre(z)))
                            return Bindings{{"x", x}, {"y", y}, {"y1", y1}, {"y2", y2}, {"z", z}};
                }
        }
        break;
    case AxiomName::aa2f:
        for (World y1 : succ)
            for (World y2 : succ) {
                if (!incomparable(f, y1, y2)) continue;
                const WorldSet reach = after_x & (pre(y1) | pre(y2));
                for (World z : succ)
                    if (!reach.intersects(pre(z))) return Bindings{{"x", x}, {"y1", y1}, {"y2", y2}, {"z", z}};
            }
        break;
    case AxiomName::rob2: break;
    }
    return std::nullopt;
}

} // namespace

Verdict fo_check(const Frame& frame, AxiomName a) {
    require_supported(a);
    const std::int64_t n = static_cast<std::int64_t>(frame.size());
    std::vector<std::optional<Bindings>> per_root(frame.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t x = 0; x < n; ++x) per_root[static_cast<std::size_t>(x)] = first_failure_at(frame, a, static_cast<World>(x));
    for (auto& r : per_root)
        if (r) return Verdict::fail(std::move(*r));
    return Verdict::ok();
}

Verdict fo_check_reference(const Frame& f, AxiomName a) {
    require_supported(a);
    const World n = f.size();
    auto R = [&](World u, World v) { return f.related(u, v); };
    auto exists = [&](auto pred) {
        for (World t = 0; t < n; ++t)
            if (pred(t)) return true;
        return false;
    };
    for (World x = 0; x < n; ++x) {
        switch (a) {
        case AxiomName::a4:
            for (World y = 0; y < n; ++y)
                for (World z = 0; z < n; ++z)
                    if (R(x, y) && R(y, z) && !R(x, z)) return Verdict::fail({{"x", x}, {"y", y}, {"z", z}});
            break;
        case AxiomName::aT:
            if (!R(x, x)) return Verdict::fail({{"x", x}});
            break;
        case AxiomName::aD:
            if (!exists([&](World y) { return R(x, y); })) return Verdict::fail({{"x", x}});
            break;
        case AxiomName::ad:
            for (World y = 0; y < n; ++y)
                if (R(x, y) && !exists([&](World t) { return R(x, t) && R(t, y); }))
                    return Verdict::fail({{"x", x}, {"y", y}});
            break;
        case AxiomName::ad2:
            for (World y1 = 0; y1 < n; ++y1)
                for (World y2 = 0; y2 < n; ++y2)
                    if (R(x, y1) && R(x, y2) && !exists([&](World t) { return R(x, t) && R(t, y1) && R(t, y2); }))
                        return Verdict::fail({{"x", x}, {"y1", y1}, {"y2", y2}});
            break;
        case AxiomName::a2:
            for (World y = 0; y < n; ++y)
                for (World z = 0; z < n; ++z)
                    if (R(x, y) && R(x, z) && !exists([&](World w) { return R(y, w) && R(z, w); }))
                        return Verdict::fail({{"x", x}, {"y", y}, {"z", z}});
            break;
        case AxiomName::ad32:
            for (World y1 = 0; y1 < n; ++y1)
                for (World y2 = 0; y2 < n; ++y2)
                    for (World y3 = 0; y3 < n; ++y3) {
                        if (!(R(x, y1) && R(x, y2) && R(x, y3))) continue;
                        bool ok = exists([&](World t) {
                            return R(x, t) &&
                                   ((R(t, y1) && R(t, y2)) || (R(t, y1) && R(t, y3)) || (R(t, y2) && R(t, y3)));
                        });
                        if (!ok) return Verdict::fail({{"x", x}, {"y1", y1}, {"y2", y2}, {"y3", y3}});
                    }
            break;
        case AxiomName::aaf:
            for (World y = 0; y < n; ++y)
                for (World y1 = 0; y1 < n; ++y1)
                    for (World y2 = 0; y2 < n; ++y2)
                        for (World z = 0; z < n; ++z) {
                            bool premise = R(x, y) && R(y, y1) && R(y, y2) && R(x, z) && y1 != y2 && !R(y1, y2) &&
                                           !R(y2, y1);
                            if (premise && !exists([&](World t) { return R(x, t) && R(t, z) && (R(t, y1) || R(t, y2)); }))
                                return Verdict::fail({{"x", x}, {"y", y}, {"y1", y1}, {"y2", y2}, {"z", z}});
                        }
            break;
        case AxiomName::aa2f:
            for (World y1 = 0; y1 < n; ++y1)
                for (World y2 = 0; y2 < n; ++y2)
                    for (World z = 0; z < n; ++z) {
                        bool premise =
                            R(x, y1) && R(x, y2) && R(x, z) && y1 != y2 && !R(y1, y2) && !R(y2, y1);
                        if (premise && !exists([&](World t) { return R(x, t) && R(t, z) && (R(t, y1) || R(t, y2)); }))
                            return Verdict::fail({{"x", x}, {"y1", y1}, {"y2", y2}, {"z", z}});
                    }
            break;
        case AxiomName::rob2: break;
        }
    }
    return Verdict::ok();
}

CrosscheckReport crosscheck(const Frame& frame, AxiomName a, std::uint64_t cap) {
    CrosscheckReport r;
    r.axiom = a;
    r.first_order = fo_check(frame, a);
    r.semantic = frame_validates(frame, axiom(a), cap);
    return r;
}

} // namespace stmodal
