#pragma once

#include "stmodal/world_set.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stmodal {

using World = std::size_t;
using Edge = std::pair<std::string, std::string>;

class UnknownWorld : public std::out_of_range {
public:
    explicit UnknownWorld(const std::string& name) : std::out_of_range("unknown world '" + name + "'") {}
};

/// Finite Kripke frame: worlds sorted lexicographically by identifier, one binary relation.
class Frame {
public:
    Frame() = default;
    /// Duplicate world names are rejected; duplicate edges collapse.
    Frame(std::vector<std::string> worlds, const std::vector<Edge>& edges);
    /// Index-based constructor; world i is named names[i], which must already be sorted.
    Frame(std::vector<std::string> sorted_names, std::vector<WorldSet> successors);

    /// Worlds named w0..w{n-1} with zero padding so that lexicographic and numeric order agree.
    static Frame numbered(std::size_t n, const std::vector<std::pair<World, World>>& edges);

    [[nodiscard]] std::size_t size() const { return names_.size(); }
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
    [[nodiscard]] const std::string& name(World w) const { return names_.at(w); }
    [[nodiscard]] World index(std::string_view name) const;
    [[nodiscard]] std::optional<World> find(std::string_view name) const;

    [[nodiscard]] bool related(World a, World b) const { return succ_[a].contains(b); }
    [[nodiscard]] const WorldSet& successors(World w) const { return succ_[w]; }
    [[nodiscard]] const WorldSet& predecessors(World w) const { return pred_[w]; }

    [[nodiscard]] WorldSet image(const WorldSet& s) const;
    [[nodiscard]] WorldSet preimage(const WorldSet& s) const;
    [[nodiscard]] WorldSet empty_set() const { return WorldSet(size()); }
    [[nodiscard]] WorldSet all() const { return WorldSet::full(size()); }

    [[nodiscard]] std::vector<std::pair<World, World>> pairs() const;
    [[nodiscard]] std::size_t edge_count() const;

    [[nodiscard]] Frame reversed() const;
    [[nodiscard]] Frame transitive_closure() const;
    /// Restriction to the given worlds (kept in their original order).
    [[nodiscard]] Frame restrict_to(const WorldSet& keep) const;

    friend bool operator==(const Frame&, const Frame&) = default;

private:
    std::vector<std::string> names_;
    std::vector<WorldSet> succ_;
    std::vector<WorldSet> pred_;
};

std::string format_set(const Frame& f, const WorldSet& s);

} // namespace stmodal
