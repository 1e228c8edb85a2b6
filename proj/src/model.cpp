#include "stmodal/model.hpp"

#include <algorithm>
#include <set>

namespace stmodal {

Model::Model(Frame frame, Valuation valuation) : frame_(std::move(frame)), valuation_(std::move(valuation)) {
    for (const auto& [atom, set] : valuation_) {
        if (!is_identifier(atom)) throw std::invalid_argument("invalid atom name '" + atom + "'");
        if (set.universe() != frame_.size())
            throw std::invalid_argument("valuation of '" + atom + "' has the wrong universe");
    }
}

WorldSet Model::value(const std::string& atom) const {
    auto it = valuation_.find(atom);
    return it == valuation_.end() ? frame_.empty_set() : it->second;
}

namespace {

bool holds_at(const Model& m, World x, const Formula& f) {
    switch (f.op()) {
    case Op::Top: return true;
    case Op::Bottom: return false;
    case Op::Atom: {
        auto it = m.valuation().find(f.name());
        return it != m.valuation().end() && it->second.contains(x);
    }
    case Op::Not: return !holds_at(m, x, f.operand());
    case Op::And: return holds_at(m, x, f.lhs()) && holds_at(m, x, f.rhs());
    case Op::Or: return holds_at(m, x, f.lhs()) || holds_at(m, x, f.rhs());
    case Op::Implies: return !holds_at(m, x, f.lhs()) || holds_at(m, x, f.rhs());
    case Op::Iff: return holds_at(m, x, f.lhs()) == holds_at(m, x, f.rhs());
    case Op::Box:
        for (World y : m.frame().successors(x).members())
            if (!holds_at(m, y, f.operand())) return false;
        return true;
    case Op::Diamond:
        for (World y : m.frame().successors(x).members())
            if (holds_at(m, y, f.operand())) return true;
        return false;
    }
    return false;
}

} // namespace

bool satisfies(const Model& model, World x, const Formula& f) {
    if (x >= model.frame().size()) throw UnknownWorld("#" + std::to_string(x));
    return holds_at(model, x, f);
}

bool satisfies(const Model& model, const std::string& x, const Formula& f) {
    return holds_at(model, model.frame().index(x), f);
}

WorldSet truth_set(const Model& model, const Formula& f) {
    const Frame& fr = model.frame();
    switch (f.op()) {
    case Op::Top: return fr.all();
    case Op::Bottom: return fr.empty_set();
    case Op::Atom: return model.value(f.name());
    case Op::Not: return truth_set(model, f.operand()).complement();
    case Op::And: return truth_set(model, f.lhs()) & truth_set(model, f.rhs());
    case Op::Or: return truth_set(model, f.lhs()) | truth_set(model, f.rhs());
    case Op::Implies: return truth_set(model, f.lhs()).complement() | truth_set(model, f.rhs());
    case Op::Iff: {
        WorldSet a = truth_set(model, f.lhs());
        WorldSet b = truth_set(model, f.rhs());
        return (a & b) | (a.complement() & b.complement());
    }
    case Op::Box: return fr.preimage(truth_set(model, f.operand()).complement()).complement();
    case Op::Diamond: return fr.preimage(truth_set(model, f.operand()));
    }
    return fr.empty_set();
}

// ---------------------------------------------------------------------------
// Bisimulation

namespace {

std::set<std::string> shared_atoms(const Model& m1, const Model& m2) {
    std::set<std::string> out;
    for (const auto& [a, _] : m1.valuation()) out.insert(a);
    for (const auto& [a, _] : m2.valuation()) out.insert(a);
    return out;
}

} // namespace

BisimulationVerdict is_bisimulation(const Model& m1, const Model& m2, const WorldPairs& z) {
    BisimulationVerdict v;
    if (z.empty()) {
        v.holds = false;
        v.clause = "nonempty";
        return v;
    }
    const Frame& f1 = m1.frame();
    const Frame& f2 = m2.frame();
    std::vector<WorldSet> rel(f1.size(), f2.empty_set());
    for (auto [a, b] : z) {
        if (a >= f1.size() || b >= f2.size()) throw UnknownWorld("pair endpoint out of range");
        rel[a].insert(b);
    }
    const auto atoms = shared_atoms(m1, m2);
    for (auto [w, w2] : z) {
        for (const auto& p : atoms)
            if (m1.value(p).contains(w) != m2.value(p).contains(w2))
                return {false, "atoms", {w, w2}, 0, p};
        for (World v1 : f1.successors(w).members())
            if (!rel[v1].intersects(f2.successors(w2))) return {false, "forth", {w, w2}, v1, {}};
        for (World v2 : f2.successors(w2).members()) {
            bool matched = false;
            for (World v1 : f1.successors(w).members())
                if (rel[v1].contains(v2)) {
                    matched = true;
                    break;
                }
            if (!matched) return {false, "back", {w, w2}, v2, {}};
        }
    }
    return v;
}

std::optional<WorldPairs> coarsest_bisimulation(const Model& m1, const Model& m2) {
    const Frame& f1 = m1.frame();
    const Frame& f2 = m2.frame();
    const auto atoms = shared_atoms(m1, m2);
    std::vector<WorldSet> rel(f1.size(), f2.empty_set());
    for (World w = 0; w < f1.size(); ++w)
        for (World w2 = 0; w2 < f2.size(); ++w2) {
            bool agree = true;
            for (const auto& p : atoms)
                if (m1.value(p).contains(w) != m2.value(p).contains(w2)) {
                    agree = false;
                    break;
                }
            if (agree) rel[w].insert(w2);
        }

    // Greatest fixpoint: drop pairs violating forth or back until nothing changes.
    bool changed = true;
    while (changed) {
        changed = false;
        for (World w = 0; w < f1.size(); ++w)
            for (World w2 : rel[w].members()) {
                bool ok = true;
                for (World v1 : f1.successors(w).members())
                    if (!rel[v1].intersects(f2.successors(w2))) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    WorldSet matched = f2.empty_set();
                    for (World v1 : f1.successors(w).members()) matched |= rel[v1];
                    ok = f2.successors(w2).is_subset_of(matched);
                }
                if (!ok) {
                    rel[w].erase(w2);
                    changed = true;
                }
            }
    }
    WorldPairs out;
    for (World w = 0; w < f1.size(); ++w)
        for (World w2 : rel[w].members()) out.emplace_back(w, w2);
    if (out.empty()) return std::nullopt;
    return out;
}

} // namespace stmodal
