#pragma once

#include "stmodal/formula.hpp"
#include "stmodal/frame.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stmodal {

using Valuation = std::map<std::string, WorldSet>;

/// Frame plus valuation. Atoms missing from the valuation are false everywhere.
class Model {
public:
    Model() = default;
    explicit Model(Frame frame, Valuation valuation = {});

    [[nodiscard]] const Frame& frame() const { return frame_; }
    [[nodiscard]] const Valuation& valuation() const { return valuation_; }
    [[nodiscard]] WorldSet value(const std::string& atom) const;

private:
    Frame frame_;
    Valuation valuation_;
};

/// Pointwise recursive satisfaction. Throws UnknownWorld for x outside the frame.
bool satisfies(const Model& model, World x, const Formula& f);
bool satisfies(const Model& model, const std::string& x, const Formula& f);

/// {x : model, x |= f}, computed by set algebra over images and preimages.
WorldSet truth_set(const Model& model, const Formula& f);

// ---------------------------------------------------------------------------
// Frame validity

inline constexpr std::uint64_t default_valuation_budget = std::uint64_t{1} << 20;

struct ValidityVerdict {
    bool valid = true;
    Valuation valuation;
    World world = 0;
    /// Position of the counter-valuation in the enumeration order.
    std::uint64_t valuation_index = 0;

    explicit operator bool() const { return valid; }
};

/// "VALID" or "COUNTER world=<id> valuation={p:{..},..}".
std::string format_verdict(const Frame& frame, const ValidityVerdict& v);

/// Number of valuations frame_validates would enumerate, as a power of two.
std::uint64_t valuation_count_log2(const Frame& frame, const Formula& f);

/// Exhaustive validity over valuations of atoms(f). Valuations are enumerated as a binary
/// counter whose bit (a * |W| + w) says whether world w is in the a-th atom (atoms sorted);
/// the reported counter-model is the first in that order, at its smallest failing world.
/// OpenMP-parallel over valuation blocks. Throws BudgetExceeded when 2^(|W|*|atoms|) > cap.
ValidityVerdict frame_validates(const Frame& frame, const Formula& f,
                                std::uint64_t cap = default_valuation_budget);

/// Serial reference for frame_validates: builds each Model and evaluates with satisfies().
/// Same enumeration order and result, orders of magnitude slower.
ValidityVerdict frame_validates_reference(const Frame& frame, const Formula& f,
                                          std::uint64_t cap = default_valuation_budget);

// ---------------------------------------------------------------------------
// Bisimulation

using WorldPairs = std::vector<std::pair<World, World>>;

struct BisimulationVerdict {
    bool holds = true;
    std::string clause; // "nonempty", "atoms", "forth" or "back"
    std::pair<World, World> pair{};
    World step = 0; // the unmatched successor (in model 1 for forth, model 2 for back)
    std::string atom;

    explicit operator bool() const { return holds; }
};

BisimulationVerdict is_bisimulation(const Model& m1, const Model& m2, const WorldPairs& z);

/// Greatest bisimulation between m1 and m2, sorted; nullopt when it is empty.
std::optional<WorldPairs> coarsest_bisimulation(const Model& m1, const Model& m2);

} // namespace stmodal
