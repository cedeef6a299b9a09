#include "flatnorm/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace flatnorm {

FlowNetwork::FlowNetwork(int num_nodes, const std::vector<int>& degree) : n_(num_nodes) {
    if (static_cast<int>(degree.size()) != num_nodes)
        throw std::invalid_argument("degree table size mismatch");
    offset_.assign(n_ + 1, 0);
    for (int i = 0; i < n_; ++i) offset_[i + 1] = offset_[i] + degree[i];
    fill_ = offset_;
    fill_.pop_back();
    std::int64_t arcs = offset_[n_];
    to_.assign(arcs, -1);
    rev_.assign(arcs, -1);
    cap_.assign(arcs, 0.0);
    level_.assign(n_, -1);
    iter_.assign(n_, 0);
}

void FlowNetwork::add_edge(int u, int v, double cap, double rev_cap) {
    std::int64_t a = fill_[u]++;
    std::int64_t b = fill_[v]++;
    if (a >= offset_[u + 1] || b >= offset_[v + 1])
        throw std::invalid_argument("declared node degree exceeded");
    to_[a] = v;
    rev_[a] = b;
    cap_[a] = cap;
    to_[b] = u;
    rev_[b] = a;
    cap_[b] = rev_cap;
}

bool FlowNetwork::bfs_levels(int source, int sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<int> queue;
    queue.reserve(n_);
    queue.push_back(source);
    level_[source] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (std::int64_t a = offset_[u]; a < offset_[u + 1]; ++a) {
            int v = to_[a];
            if (cap_[a] > 0.0 && level_[v] < 0) {
                level_[v] = level_[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return level_[sink] >= 0;
}

double FlowNetwork::blocking_flow(int source, int sink) {
    double total = 0.0;
    std::vector<std::int64_t> path; // arc indices along the DFS path
    path.reserve(64);
    for (;;) {
        // iterative DFS advance from wherever the current path ends
        int u = path.empty() ? source : to_[path.back()];
        if (u == sink) {
            double bottleneck = std::numeric_limits<double>::infinity();
            for (std::int64_t a : path) bottleneck = std::min(bottleneck, cap_[a]);
            for (std::int64_t a : path) {
                cap_[a] -= bottleneck;
                cap_[rev_[a]] += bottleneck;
            }
            total += bottleneck;
            ++augmentations_;
            // retreat to just below the first saturated arc
            std::size_t keep = 0;
            while (keep < path.size() && cap_[path[keep]] > 0.0) ++keep;
            path.resize(keep);
            continue;
        }
        std::int64_t a = iter_[u];
        for (; a < offset_[u + 1]; ++a) {
            int v = to_[a];
            if (cap_[a] > 0.0 && level_[v] == level_[u] + 1) break;
        }
        iter_[u] = a;
        if (a < offset_[u + 1]) {
            path.push_back(a);
        } else {
            level_[u] = -1; // dead end in this phase
            if (path.empty()) break;
            path.pop_back();
        }
    }
    return total;
}

double FlowNetwork::max_flow(int source, int sink) {
    if (source == sink) throw std::invalid_argument("source equals sink");
    double flow = 0.0;
    while (bfs_levels(source, sink)) {
        for (int i = 0; i < n_; ++i) iter_[i] = offset_[i];
        flow += blocking_flow(source, sink);
    }
    return flow;
}

std::vector<std::uint8_t> FlowNetwork::min_cut_source_side(int source) const {
    std::vector<std::uint8_t> side(n_, 0);
    std::vector<int> queue;
    queue.reserve(n_);
    queue.push_back(source);
    side[source] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (std::int64_t a = offset_[u]; a < offset_[u + 1]; ++a) {
            int v = to_[a];
            if (cap_[a] > 0.0 && !side[v]) {
                side[v] = 1;
                queue.push_back(v);
            }
        }
    }
    return side;
}

} // namespace flatnorm
