#include "rgglab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace rgglab {

GeometricGraph::GeometricGraph(PointSet vertices, std::vector<VertexPair> pairs) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    for (auto& [u, v] : pairs) {
        if (u >= n || v >= n) throw std::out_of_range("GeometricGraph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("GeometricGraph: self-loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    offsets_.assign(n + 1, 0);
    for (const auto& [u, v] : pairs) {
        ++offsets_[u + 1];
        ++offsets_[v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];

    adjacency_.resize(2 * pairs.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    // Sorted pairs fill every row in ascending neighbor order: row w first receives
    // the smaller endpoints of (u, w), then the larger endpoints of (w, v).
    for (const auto& [u, v] : pairs) {
        const double len = distance(vertices_[u], vertices_[v]);
        adjacency_[fill[u]++] = Neighbor{v, len};
        adjacency_[fill[v]++] = Neighbor{u, len};
    }
}

bool GeometricGraph::has_edge(std::size_t u, std::size_t v) const {
    if (u >= vertex_count() || v >= vertex_count()) return false;
    const auto row = neighbors(u);
    const auto it = std::lower_bound(row.begin(), row.end(), v,
                                     [](const Neighbor& a, std::size_t idx) { return a.index < idx; });
    return it != row.end() && it->index == v;
}

std::vector<VertexPair> GeometricGraph::edges() const {
    std::vector<VertexPair> out;
    out.reserve(edge_count());
    for (std::size_t u = 0; u < vertex_count(); ++u) {
        for (const auto& nb : neighbors(u)) {
            if (u < nb.index) out.emplace_back(static_cast<std::uint32_t>(u), nb.index);
        }
    }
    return out;
}

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

void write_graph(std::ostream& os, const GeometricGraph& g) {
    const auto& pts = g.vertices();
    os << pts.dim() << ' ' << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const PointView p = pts[i];
        for (std::size_t a = 0; a < p.size(); ++a) {
            if (a) os << ' ';
            os << format_double(p[a]);
        }
        os << '\n';
    }
    for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

namespace {

double parse_double(const std::string& tok) {
    double x = 0.0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
        throw std::runtime_error("read_graph: bad number '" + tok + "'");
    }
    return x;
}

}  // namespace

GeometricGraph read_graph(std::istream& is) {
    std::size_t d = 0, n = 0, m = 0;
    if (!(is >> d >> n >> m) || d == 0) throw std::runtime_error("read_graph: bad header");
    std::vector<double> flat(n * d);
    std::string tok;
    for (auto& c : flat) {
        if (!(is >> tok)) throw std::runtime_error("read_graph: truncated vertex block");
        c = parse_double(tok);
    }
    std::vector<VertexPair> pairs(m);
    for (auto& [u, v] : pairs) {
        if (!(is >> u >> v)) throw std::runtime_error("read_graph: truncated edge block");
    }
    return GeometricGraph(PointSet(d, std::move(flat)), std::move(pairs));
}

}  // namespace rgglab
