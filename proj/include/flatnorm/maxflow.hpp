#pragma once

#include <cstdint>
#include <vector>

namespace flatnorm {

/**
 * Dinic max-flow over a fixed node set with double capacities. Arc storage
 * is CSR built from a pre-declared per-node degree table, so construction
 * never reallocates and arc order (hence the canonical minimum cut) is the
 * insertion order. Blocking flows subtract exact path bottlenecks, which
 * zeroes at least one residual per augmentation, so plain `> 0` residual
 * tests need no epsilon.
 */
class FlowNetwork {
public:
    /// degree[i] must count every arc slot node i needs: one per add_edge
    /// call touching it (each edge consumes one slot at u and one at v).
    FlowNetwork(int num_nodes, const std::vector<int>& degree);

    /// Adds a u->v arc with capacity cap and its reverse with rev_cap
    /// (rev_cap = cap models an undirected edge).
    void add_edge(int u, int v, double cap, double rev_cap);

    double max_flow(int source, int sink);

    /// Source side of the canonical minimum cut: all nodes reachable from
    /// the source in the residual graph after max_flow. This is the unique
    /// inclusion-minimal source set among minimum cuts.
    std::vector<std::uint8_t> min_cut_source_side(int source) const;

    std::int64_t augmentations() const { return augmentations_; }

    int num_nodes() const { return n_; }

private:
    int n_;
    std::vector<std::int64_t> offset_; // n+1, CSR
    std::vector<std::int64_t> fill_;   // next free slot per node during build
    std::vector<int> to_;
    std::vector<std::int64_t> rev_;
    std::vector<double> cap_;

    std::vector<int> level_;
    std::vector<std::int64_t> iter_;
    std::int64_t augmentations_ = 0;

    bool bfs_levels(int source, int sink);
    double blocking_flow(int source, int sink);
};

} // namespace flatnorm
