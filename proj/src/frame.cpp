#include "stmodal/frame.hpp"

#include <algorithm>

namespace stmodal {

Frame::Frame(std::vector<std::string> worlds, const std::vector<Edge>& edges) : names_(std::move(worlds)) {
    std::sort(names_.begin(), names_.end());
    if (std::adjacent_find(names_.begin(), names_.end()) != names_.end())
        throw std::invalid_argument("duplicate world identifier");
    succ_.assign(size(), WorldSet(size()));
    pred_.assign(size(), WorldSet(size()));
    for (const auto& [a, b] : edges) {
        World i = index(a);
        World j = index(b);
        succ_[i].insert(j);
        pred_[j].insert(i);
    }
}

Frame::Frame(std::vector<std::string> sorted_names, std::vector<WorldSet> successors)
    : names_(std::move(sorted_names)), succ_(std::move(successors)) {
    if (!std::is_sorted(names_.begin(), names_.end()) ||
        std::adjacent_find(names_.begin(), names_.end()) != names_.end())
        throw std::invalid_argument("world names must be sorted and distinct");
    if (succ_.size() != size()) throw std::invalid_argument("successor table size mismatch");
    pred_.assign(size(), WorldSet(size()));
    for (World i = 0; i < size(); ++i)
        for (World j : succ_[i].members()) pred_[j].insert(i);
}

Frame Frame::numbered(std::size_t n, const std::vector<std::pair<World, World>>& edges) {
    const std::size_t width = std::to_string(n == 0 ? 0 : n - 1).size();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        std::string digits = std::to_string(i);
        names.push_back("w" + std::string(width - digits.size(), '0') + digits);
    }
    std::vector<WorldSet> succ(n, WorldSet(n));
    for (auto [a, b] : edges) succ.at(a).insert(b);
    return Frame(std::move(names), std::move(succ));
}

std::optional<World> Frame::find(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<World>(it - names_.begin());
}

World Frame::index(std::string_view name) const {
    if (auto w = find(name)) return *w;
    throw UnknownWorld(std::string(name));
}

WorldSet Frame::image(const WorldSet& s) const {
    WorldSet out(size());
    for (World w : s.members()) out |= succ_[w];
    return out;
}

WorldSet Frame::preimage(const WorldSet& s) const {
    WorldSet out(size());
    for (World w : s.members()) out |= pred_[w];
    return out;
}

std::vector<std::pair<World, World>> Frame::pairs() const {
    std::vector<std::pair<World, World>> out;
    for (World i = 0; i < size(); ++i)
        for (World j : succ_[i].members()) out.emplace_back(i, j);
    return out;
}

std::size_t Frame::edge_count() const {
    std::size_t n = 0;
    for (const auto& s : succ_) n += s.size();
    return n;
}

Frame Frame::reversed() const { return Frame(names_, pred_); }

Frame Frame::transitive_closure() const {
    // Warshall on bit rows.
    std::vector<WorldSet> reach = succ_;
    for (World k = 0; k < size(); ++k)
        for (World i = 0; i < size(); ++i)
            if (reach[i].contains(k)) reach[i] |= reach[k];
    return Frame(names_, std::move(reach));
}

Frame Frame::restrict_to(const WorldSet& keep) const {
    const auto kept = keep.members();
    std::vector<std::string> names;
    std::vector<std::size_t> remap(size(), size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
        names.push_back(names_[kept[i]]);
        remap[kept[i]] = i;
    }
    std::vector<WorldSet> succ(kept.size(), WorldSet(kept.size()));
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (World j : succ_[kept[i]].members())
            if (remap[j] != size()) succ[i].insert(remap[j]);
    return Frame(std::move(names), std::move(succ));
}

std::string format_set(const Frame& f, const WorldSet& s) {
    std::string out = "{";
    bool first = true;
    for (World w : s.members()) {
        if (!first) out += ',';
        out += f.name(w);
        first = false;
    }
    return out + "}";
}

} // namespace stmodal
