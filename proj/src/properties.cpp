#include "stmodal/properties.hpp"

#include <stdexcept>

namespace stmodal {

std::string_view to_string(FrameProperty p) {
    switch (p) {
    case FrameProperty::reflexive: return "reflexive";
    case FrameProperty::irreflexive: return "irreflexive";
    case FrameProperty::transitive: return "transitive";
    case FrameProperty::serial: return "serial";
    case FrameProperty::dense: return "dense";
    case FrameProperty::two_dense: return "two_dense";
    case FrameProperty::semi_full: return "semi_full";
    case FrameProperty::confluent: return "confluent";
    case FrameProperty::antisymmetric: return "antisymmetric";
    case FrameProperty::past_distinguishing: return "past_distinguishing";
    case FrameProperty::future_distinguishing: return "future_distinguishing";
    case FrameProperty::distinguishing: return "distinguishing";
    case FrameProperty::reflecting: return "reflecting";
    }
    return "?";
}

FrameProperty frame_property_from_string(std::string_view s) {
    for (auto p : all_frame_properties)
        if (to_string(p) == s) return p;
    throw std::invalid_argument("unknown frame property '" + std::string(s) + "'");
}

std::string format_verdict(const Frame& f, const Verdict& v) {
    if (v.holds) return "HOLDS";
    std::string out = "COUNTER";
    for (const auto& [var, w] : v.bindings) out += " " + var + "=" + f.name(w);
    return out;
}

namespace {

Verdict reflexive(const Frame& f) {
    for (World x = 0; x < f.size(); ++x)
        if (!f.related(x, x)) return Verdict::fail({{"x", x}});
    return Verdict::ok();
}

Verdict irreflexive(const Frame& f) {
    for (World x = 0; x < f.size(); ++x)
        if (f.related(x, x)) return Verdict::fail({{"x", x}});
    return Verdict::ok();
}

Verdict transitive(const Frame& f) {
    for (World x = 0; x < f.size(); ++x)
        for (World y : f.successors(x).members()) {
            WorldSet missing = f.successors(y) - f.successors(x);
            if (!missing.empty()) return Verdict::fail({{"x", x}, {"y", y}, {"z", missing.first()}});
        }
    return Verdict::ok();
}

Verdict serial(const Frame& f) {
    for (World x = 0; x < f.size(); ++x)
        if (f.successors(x).empty()) return Verdict::fail({{"x", x}});
    return Verdict::ok();
}

// x<y  ->  exists t: x<t<y, i.e. y in image(succ(x)).
Verdict dense(const Frame& f) {
    for (World x = 0; x < f.size(); ++x) {
        const WorldSet two_step = f.image(f.successors(x));
        WorldSet missing = f.successors(x) - two_step;
        if (!missing.empty()) return Verdict::fail({{"x", x}, {"y", missing.first()}});
    }
    return Verdict::ok();
}

Verdict two_dense(const Frame& f) {
    for (World x = 0; x < f.size(); ++x) {
        const auto ys = f.successors(x).members();
        for (World y1 : ys)
            for (World y2 : ys) {
                const WorldSet common = f.successors(x) & f.predecessors(y1) & f.predecessors(y2);
                if (common.empty()) return Verdict::fail({{"x", x}, {"y1", y1}, {"y2", y2}});
            }
    }
    return Verdict::ok();
}

Verdict confluent(const Frame& f) {
    for (World x = 0; x < f.size(); ++x) {
        const auto ys = f.successors(x).members();
        for (World y : ys)
            for (World z : ys)
                if (!f.successors(y).intersects(f.successors(z)))
                    return Verdict::fail({{"x", x}, {"y", y}, {"z", z}});
    }
    return Verdict::ok();
}

Verdict antisymmetric(const Frame& f) {
    for (World x = 0; x < f.size(); ++x)
        for (World y : f.successors(x).members())
            if (x != y && f.related(y, x)) return Verdict::fail({{"x", x}, {"y", y}});
    return Verdict::ok();
}

template <typename Cone>
Verdict distinguishing_by(const Frame& f, Cone cone) {
    for (World x = 0; x < f.size(); ++x)
        for (World y = x + 1; y < f.size(); ++y)
            if (cone(x) == cone(y)) return Verdict::fail({{"x", x}, {"y", y}});
    return Verdict::ok();
}

Verdict reflecting(const Frame& f) {
    for (World x = 0; x < f.size(); ++x)
        for (World y = 0; y < f.size(); ++y) {
            const bool future_contains = f.successors(y).is_subset_of(f.successors(x));
            const bool past_contained = f.predecessors(x).is_subset_of(f.predecessors(y));
            if (future_contains != past_contained) return Verdict::fail({{"x", x}, {"y", y}});
        }
    return Verdict::ok();
}

} // namespace

Verdict check_property(const Frame& frame, FrameProperty prop) {
    auto future = [&](World w) -> const WorldSet& { return frame.successors(w); };
    auto past = [&](World w) -> const WorldSet& { return frame.predecessors(w); };
    switch (prop) {
    case FrameProperty::reflexive: return reflexive(frame);
    case FrameProperty::irreflexive: return irreflexive(frame);
    case FrameProperty::transitive: return transitive(frame);
    case FrameProperty::serial: return serial(frame);
    case FrameProperty::dense: return dense(frame);
    case FrameProperty::two_dense: return two_dense(frame);
    case FrameProperty::semi_full:
        if (auto v = serial(frame); !v) return v;
        return two_dense(frame);
    case FrameProperty::confluent: return confluent(frame);
    case FrameProperty::antisymmetric: return antisymmetric(frame);
    case FrameProperty::past_distinguishing: return distinguishing_by(frame, past);
    case FrameProperty::future_distinguishing: return distinguishing_by(frame, future);
    case FrameProperty::distinguishing:
        if (auto v = distinguishing_by(frame, past); !v) return v;
        return distinguishing_by(frame, future);
    case FrameProperty::reflecting: return reflecting(frame);
    }
    return Verdict::ok();
}

} // namespace stmodal
