#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

namespace rgglab::detail {

inline constexpr double kUnreached = std::numeric_limits<double>::infinity();
inline constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

struct SearchTree {
    std::vector<double> dist;        // kUnreached when not reached
    std::vector<std::size_t> parent;  // kNoParent for the source and unreached vertices
};

/// Lazy-deletion binary-heap Dijkstra over an implicit graph.
///
/// `for_each_edge(u, relax)` must call relax(v, w) for every arc u -> v of weight w >= 0.
/// `settled(u, dist)` is called once per settled vertex in nondecreasing distance order; the
/// search stops as soon as it returns true.
template <class EdgeFn, class SettledFn>
SearchTree dijkstra(std::size_t vertex_count, std::size_t source, EdgeFn&& for_each_edge, SettledFn&& settled) {
    SearchTree tree{std::vector<double>(vertex_count, kUnreached), std::vector<std::size_t>(vertex_count, kNoParent)};
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    std::vector<bool> done(vertex_count, false);
    tree.dist[source] = 0.0;
    heap.emplace(0.0, source);
    while (!heap.empty()) {
        const auto [d, u] = heap.top();
        heap.pop();
        if (done[u]) continue;
        done[u] = true;
        if (settled(u, d)) break;
        for_each_edge(u, [&](std::size_t v, double w) {
            const double nd = d + w;
            if (nd < tree.dist[v]) {
                tree.dist[v] = nd;
                tree.parent[v] = u;
                heap.emplace(nd, v);
            }
        });
    }
    return tree;
}

}  // namespace rgglab::detail
