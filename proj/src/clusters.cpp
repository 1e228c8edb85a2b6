#include "stmodal/clusters.hpp"

#include "stmodal/errors.hpp"

#include <functional>

namespace stmodal {

ClusterDecomposition clusters(const Frame& frame) {
    if (!check_property(frame, FrameProperty::transitive)) throw NotTransitive();
    const std::size_t n = frame.size();
    ClusterDecomposition d;
    d.cluster_of.assign(n, n);
    for (World x = 0; x < n; ++x) {
        if (d.cluster_of[x] != n) continue;
        WorldSet c = frame.successors(x) & frame.predecessors(x);
        c.insert(x);
        for (World y : c.members()) d.cluster_of[y] = d.clusters.size();
        d.degenerate.push_back(c.size() == 1 && !frame.related(x, x));
        d.clusters.push_back(std::move(c));
    }
    const std::size_t k = d.clusters.size();
    d.order.assign(k, WorldSet(k));
    for (std::size_t i = 0; i < k; ++i) {
        const World rep = d.clusters[i].first();
        for (World y : frame.successors(rep).members())
            if (d.cluster_of[y] != i) d.order[i].insert(d.cluster_of[y]);
    }
    d.successor_clusters.assign(n, {});
    for (World x = 0; x < n; ++x) {
        const std::size_t own = d.cluster_of[x];
        for (std::size_t j : d.order[own].members()) {
            const WorldSet allowed = d.clusters[j] | d.clusters[own];
            bool immediate = true;
            for (World y : d.clusters[j].members())
                if (!(frame.successors(x) & frame.predecessors(y)).is_subset_of(allowed)) {
                    immediate = false;
                    break;
                }
            if (immediate) d.successor_clusters[x].push_back(j);
        }
    }
    return d;
}

Frame generated_subframe(const Frame& frame, World x) {
    WorldSet keep = frame.successors(x);
    keep.insert(x);
    return frame.restrict_to(keep);
}

std::vector<ClusterChain> chains_of_clusters(const Frame& frame, World x) {
    if (!check_property(frame, FrameProperty::transitive)) throw NotTransitive();
    WorldSet keep = frame.successors(x);
    keep.insert(x);
    const std::vector<World> ambient = keep.members();
    const Frame sub = frame.restrict_to(keep);
    const ClusterDecomposition d = clusters(sub);

    World local_x = 0;
    while (ambient[local_x] != x) ++local_x;

    // A cluster may follow the worlds `seen` iff each of its points is seen by exactly `seen`
    // plus, when non-degenerate, the cluster itself.
    auto fits = [&](std::size_t c, const WorldSet& seen) {
        WorldSet expected = seen;
        if (!d.degenerate[c]) expected |= d.clusters[c];
        for (World w : d.clusters[c].members())
            if (!(sub.predecessors(w) == expected)) return false;
        return true;
    };
    auto lift = [&](const WorldSet& local) {
        WorldSet out(frame.size());
        for (World w : local.members()) out.insert(ambient[w]);
        return out;
    };

    std::vector<ClusterChain> out;
    std::vector<std::size_t> path;
    std::function<void(const WorldSet&)> extend = [&](const WorldSet& seen) {
        bool extended = false;
        for (std::size_t c = 0; c < d.clusters.size(); ++c) {
            if (d.clusters[c].intersects(seen) || !fits(c, seen)) continue;
            extended = true;
            path.push_back(c);
            extend(seen | d.clusters[c]);
            path.pop_back();
        }
        if (!extended) {
            ClusterChain chain;
            for (std::size_t c : path) chain.clusters.push_back(lift(d.clusters[c]));
            out.push_back(std::move(chain));
        }
    };

    const std::size_t root = d.cluster_of[local_x];
    if (!fits(root, sub.empty_set())) return out;
    for (std::size_t s : d.successor_clusters[local_x]) {
        const WorldSet& root_set = d.clusters[root];
        if (!fits(s, root_set)) continue;
        path = {root, s};
        extend(root_set | d.clusters[s]);
    }
    return out;
}

Verdict aaf_cluster_criterion(const Frame& frame) {
    if (!check_property(frame, FrameProperty::transitive))
        throw PreconditionFailed("aaf cluster criterion requires a transitive frame");
    if (!check_property(frame, FrameProperty::dense))
        throw PreconditionFailed("aaf cluster criterion requires a dense frame");
    const ClusterDecomposition d = clusters(frame);
    for (World x = 0; x < frame.size(); ++x) {
        if (frame.related(x, x)) continue;
        WorldSet successor_union = frame.empty_set();
        for (std::size_t s : d.successor_clusters[x])
            if (!d.degenerate[s]) successor_union |= d.clusters[s];
        for (std::size_t s : d.successor_clusters[x]) {
            if (d.degenerate[s]) continue;
            const auto above = frame.image(d.clusters[s]).members();
            for (World y1 : above)
                for (World y2 : above) {
                    if (y1 >= y2 || frame.related(y1, y2) || frame.related(y2, y1)) continue;
                    const WorldSet uncovered =
                        successor_union - (frame.predecessors(y1) | frame.predecessors(y2));
                    if (!uncovered.empty())
                        return Verdict::fail({{"x", x},
                                              {"s", d.clusters[s].first()},
                                              {"y1", y1},
                                              {"y2", y2},
                                              {"t", uncovered.first()}});
                }
        }
    }
    return Verdict::ok();
}

} // namespace stmodal
