#pragma once

#include "stmodal/formula.hpp"
#include "stmodal/model.hpp"
#include "stmodal/properties.hpp"

#include <string>

namespace stmodal {

/// True for every catalog axiom except rob2.
bool has_fo_correspondent(AxiomName a);

/// Human-readable first-order correspondent of a supported axiom.
std::string_view fo_condition(AxiomName a);

/// Exhaustive check of the first-order correspondent. Counterexamples bind the universal
/// variables in quantifier order and are the lexicographically smallest tuple.
/// OpenMP-parallel over the root variable. Throws UnsupportedAxiom for rob2.
Verdict fo_check(const Frame& frame, AxiomName a);

/// Serial reference for fo_check: literal nested quantifier loops, no set algebra.
Verdict fo_check_reference(const Frame& frame, AxiomName a);

struct CrosscheckReport {
    AxiomName axiom{};
    Verdict first_order;
    ValidityVerdict semantic;
    [[nodiscard]] bool agree() const { return first_order.holds == semantic.valid; }
};

/// Runs fo_check and frame_validates side by side. Budget errors propagate.
CrosscheckReport crosscheck(const Frame& frame, AxiomName a, std::uint64_t cap = default_valuation_budget);

} // namespace stmodal
