#pragma once

#include "stmodal/frame.hpp"

#include <string>
#include <vector>

namespace stmodal {

/// Worlds carrying the two primitive causal relations: chronological (chron) and after.
/// The causal relation is after plus identity; chroneq is chron plus identity.
class CausalFrame {
public:
    CausalFrame() = default;
    CausalFrame(std::vector<std::string> worlds, const std::vector<Edge>& chron, const std::vector<Edge>& after);
    /// Both frames must have identical world lists.
    CausalFrame(Frame chron, Frame after);

    [[nodiscard]] std::size_t size() const { return chron_.size(); }
    [[nodiscard]] const std::vector<std::string>& names() const { return chron_.names(); }
    [[nodiscard]] const Frame& chron() const { return chron_; }
    [[nodiscard]] const Frame& after() const { return after_; }
    [[nodiscard]] Frame caus() const;
    [[nodiscard]] Frame chroneq() const;

    /// Set for frames restricted from a continuum spacetime to finitely many points.
    [[nodiscard]] bool sample_relative() const { return sample_relative_; }
    void mark_sample_relative(bool v = true) { sample_relative_ = v; }

private:
    Frame chron_;
    Frame after_;
    bool sample_relative_ = false;
};

/// Names of violated structural invariants: chron within after, chron and after transitive,
/// push-up closure in both orders, and optionally the loop property
/// (x after x implies x after x' after x for some x' != x).
std::vector<std::string> invariant_violations(const CausalFrame& cf, bool require_loop_property = false);

struct ClassifyOptions {
    /// Evaluate distinguishing/reflecting on `after` instead of `chron`.
    bool distinguish_on_after = false;
    bool require_loop_property = false;
};

struct LadderPosition {
    bool totally_vicious = false;
    bool ntv = false;
    bool chronological = false;
    bool cntv = false;
    bool causal = false;
    bool past_distinguishing = false;
    bool future_distinguishing = false;
    bool distinguishing = false;
    bool reflecting = false;
    bool sample_relative = false;
    std::size_t worlds = 0;
};

/// Throws InvariantViolation naming the first failed invariant.
LadderPosition classify(const CausalFrame& cf, const ClassifyOptions& opts = {});

/// Violated implications among causal => cntv & chronological, cntv => ntv,
/// chronological => ntv. Existential rungs are vacuous on an empty frame.
std::vector<std::string> check_ladder_implications(const LadderPosition& pos);

struct CausalityEquivalence {
    bool caus_antisymmetric = false;
    bool after_irreflexive = false;
    [[nodiscard]] bool equivalent() const { return caus_antisymmetric == after_irreflexive; }
};

CausalityEquivalence causal_iff_after_irreflexive(const CausalFrame& cf);

/// One `flag=value` line per rung, followed by the rungs that are not frame-checkable.
std::string format_position(const LadderPosition& pos);

} // namespace stmodal
