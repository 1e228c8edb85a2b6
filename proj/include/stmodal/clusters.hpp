#pragma once

#include "stmodal/frame.hpp"
#include "stmodal/properties.hpp"

#include <vector>

namespace stmodal {

/// Mutual-reachability classes of a transitive frame.
///
/// Clusters are indexed in order of their smallest world. `successor_clusters[x]` lists
/// S_x: clusters C != C_x lying in the future of x with no other cluster strictly between.
struct ClusterDecomposition {
    std::vector<WorldSet> clusters;
    std::vector<bool> degenerate;
    std::vector<std::size_t> cluster_of;
    std::vector<std::vector<std::size_t>> successor_clusters;
    /// order[i] contains j iff i != j and members of cluster i see members of cluster j.
    std::vector<WorldSet> order;
};

/// Ordered cluster tuple (C_1, ..., C_k) in which each point sees exactly the preceding clusters
/// (and its own when non-degenerate). Clusters are expressed over the ambient frame's worlds.
struct ClusterChain {
    std::vector<WorldSet> clusters;
};

/// Throws NotTransitive.
ClusterDecomposition clusters(const Frame& frame);

/// Worlds {x} u R(x) with the relation restricted.
Frame generated_subframe(const Frame& frame, World x);

/// Maximal chains ({x}-cluster, S, S_1, ...) for each successor cluster S of x, computed inside
/// generated_subframe(frame, x). Throws NotTransitive.
std::vector<ClusterChain> chains_of_clusters(const Frame& frame, World x);

/// Successor-cluster characterisation of the after formula on finite transitive dense frames.
/// Throws PreconditionFailed naming the missing property. Counterexamples bind
/// x, s (a world of the offending successor cluster), y1, y2 and the uncovered world t.
Verdict aaf_cluster_criterion(const Frame& frame);

} // namespace stmodal
