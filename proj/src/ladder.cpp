#include "stmodal/ladder.hpp"

#include "stmodal/errors.hpp"
#include "stmodal/properties.hpp"

namespace stmodal {

CausalFrame::CausalFrame(std::vector<std::string> worlds, const std::vector<Edge>& chron,
                         const std::vector<Edge>& after)
    : chron_(worlds, chron), after_(std::move(worlds), after) {}

CausalFrame::CausalFrame(Frame chron, Frame after) : chron_(std::move(chron)), after_(std::move(after)) {
    if (chron_.names() != after_.names()) throw std::invalid_argument("chron and after frames differ in worlds");
}

namespace {

Frame with_identity(const Frame& f) {
    std::vector<WorldSet> succ;
    for (World w = 0; w < f.size(); ++w) {
        WorldSet s = f.successors(w);
        s.insert(w);
        succ.push_back(std::move(s));
    }
    return Frame(f.names(), std::move(succ));
}

} // namespace

Frame CausalFrame::caus() const { return with_identity(after_); }
Frame CausalFrame::chroneq() const { return with_identity(chron_); }

std::vector<std::string> invariant_violations(const CausalFrame& cf, bool require_loop_property) {
    std::vector<std::string> out;
    const Frame& chron = cf.chron();
    const Frame& after = cf.after();
    const Frame caus = cf.caus();
    for (World x = 0; x < cf.size(); ++x)
        if (!chron.successors(x).is_subset_of(after.successors(x))) {
            out.emplace_back("chron_within_after");
            break;
        }
    if (!check_property(chron, FrameProperty::transitive)) out.emplace_back("chron_transitive");
    if (!check_property(after, FrameProperty::transitive)) out.emplace_back("after_transitive");
    // Push-up: x chron y caus z => x chron z, and x caus y chron z => x chron z.
    bool push_up = true;
    for (World x = 0; x < cf.size() && push_up; ++x) {
        push_up = caus.image(chron.successors(x)).is_subset_of(chron.successors(x)) &&
                  chron.image(caus.successors(x)).is_subset_of(chron.successors(x));
    }
    if (!push_up) out.emplace_back("push_up");
    if (require_loop_property) {
        for (World x = 0; x < cf.size(); ++x) {
            if (!after.related(x, x)) continue;
            WorldSet loop = after.successors(x) & after.predecessors(x);
            loop.erase(x);
            if (loop.empty()) {
                out.emplace_back("loop_property");
                break;
            }
        }
    }
    return out;
}

LadderPosition classify(const CausalFrame& cf, const ClassifyOptions& opts) {
    if (auto bad = invariant_violations(cf, opts.require_loop_property); !bad.empty())
        throw InvariantViolation("causal frame invariant violated: " + bad.front());
    LadderPosition p;
    p.worlds = cf.size();
    p.sample_relative = cf.sample_relative();
    const Frame& chron = cf.chron();
    const Frame& after = cf.after();
    p.totally_vicious = static_cast<bool>(check_property(chron, FrameProperty::reflexive));
    p.chronological = static_cast<bool>(check_property(chron, FrameProperty::irreflexive));
    p.causal = static_cast<bool>(check_property(after, FrameProperty::irreflexive));
    p.ntv = false;
    p.cntv = false;
    for (World x = 0; x < cf.size(); ++x) {
        p.ntv = p.ntv || !chron.related(x, x);
        p.cntv = p.cntv || !after.related(x, x);
    }
    const Frame& cones = opts.distinguish_on_after ? after : chron;
    p.past_distinguishing = static_cast<bool>(check_property(cones, FrameProperty::past_distinguishing));
    p.future_distinguishing = static_cast<bool>(check_property(cones, FrameProperty::future_distinguishing));
    p.distinguishing = p.past_distinguishing && p.future_distinguishing;
    p.reflecting = static_cast<bool>(check_property(cones, FrameProperty::reflecting));
    return p;
}

std::vector<std::string> check_ladder_implications(const LadderPosition& pos) {
    std::vector<std::string> out;
    const bool nonempty = pos.worlds > 0;
    if (pos.causal && nonempty && !pos.cntv) out.emplace_back("causal=>cntv");
    if (pos.causal && !pos.chronological) out.emplace_back("causal=>chronological");
    if (pos.cntv && !pos.ntv) out.emplace_back("cntv=>ntv");
    if (pos.chronological && nonempty && !pos.ntv) out.emplace_back("chronological=>ntv");
    return out;
}

CausalityEquivalence causal_iff_after_irreflexive(const CausalFrame& cf) {
    CausalityEquivalence e;
    e.caus_antisymmetric = static_cast<bool>(check_property(cf.caus(), FrameProperty::antisymmetric));
    e.after_irreflexive = static_cast<bool>(check_property(cf.after(), FrameProperty::irreflexive));
    return e;
}

std::string format_position(const LadderPosition& pos) {
    auto b = [](bool v) { return v ? "true" : "false"; };
    std::string out;
    out += std::string("totally_vicious=") + b(pos.totally_vicious) + "\n";
    out += std::string("ntv=") + b(pos.ntv) + "\n";
    out += std::string("chronological=") + b(pos.chronological) + "\n";
    out += std::string("cntv=") + b(pos.cntv) + "\n";
    out += std::string("causal=") + b(pos.causal) + "\n";
    out += std::string("past_distinguishing=") + b(pos.past_distinguishing) + "\n";
    out += std::string("future_distinguishing=") + b(pos.future_distinguishing) + "\n";
    out += std::string("distinguishing=") + b(pos.distinguishing) + "\n";
    out += std::string("reflecting=") + b(pos.reflecting) + "\n";
    out += "strongly_causal=not-frame-checkable\n";
    out += "stably_causal=not-frame-checkable\n";
    out += "globally_hyperbolic=not-frame-checkable\n";
    out += std::string("scope=") + (pos.sample_relative ? "sample-relative" : "exact") + "\n";
    return out;
}

} // namespace stmodal
