#pragma once

#include "stmodal/frame.hpp"

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stmodal {

enum class FrameProperty {
    reflexive,
    irreflexive,
    transitive,
    serial,
    dense,
    two_dense,
    semi_full,
    confluent,
    antisymmetric,
    past_distinguishing,
    future_distinguishing,
    distinguishing,
    reflecting,
};

inline constexpr std::array<FrameProperty, 13> all_frame_properties{
    FrameProperty::reflexive,           FrameProperty::irreflexive,           FrameProperty::transitive,
    FrameProperty::serial,              FrameProperty::dense,                 FrameProperty::two_dense,
    FrameProperty::semi_full,           FrameProperty::confluent,             FrameProperty::antisymmetric,
    FrameProperty::past_distinguishing, FrameProperty::future_distinguishing, FrameProperty::distinguishing,
    FrameProperty::reflecting};

std::string_view to_string(FrameProperty p);
FrameProperty frame_property_from_string(std::string_view s);

/// Outcome of an exhaustive first-order check. On failure, `bindings` names every
/// universally quantified variable of the violated clause.
struct Verdict {
    bool holds = true;
    std::vector<std::pair<std::string, World>> bindings;

    static Verdict ok() { return {}; }
    static Verdict fail(std::vector<std::pair<std::string, World>> b) { return {false, std::move(b)}; }
    explicit operator bool() const { return holds; }
};

/// "HOLDS" or "COUNTER x=a y=b ...".
std::string format_verdict(const Frame& f, const Verdict& v);

Verdict check_property(const Frame& frame, FrameProperty prop);

} // namespace stmodal
