#include "rgglab/planners.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "rgglab/detail/dijkstra.hpp"
#include "rgglab/diagnostics.hpp"

namespace rgglab {

std::string planner_name(PlannerKind kind) {
    switch (kind) {
        case PlannerKind::prm: return "prm";
        case PlannerKind::soft_prm: return "soft_prm";
        case PlannerKind::bluetooth_prm: return "bluetooth_prm";
        case PlannerKind::embedded_prm: return "embedded_prm";
    }
    throw std::invalid_argument("unknown planner kind");
}

PlannerKind parse_planner(const std::string& name) {
    for (auto k : {PlannerKind::prm, PlannerKind::soft_prm, PlannerKind::bluetooth_prm, PlannerKind::embedded_prm}) {
        if (planner_name(k) == name) return k;
    }
    throw std::invalid_argument("unknown planner: " + name);
}

Roadmap build_roadmap(std::shared_ptr<const Environment> env, std::size_t n, const ConnectionModel& model,
                      std::uint64_t seed, const std::optional<Point>& x_init) {
    if (!env) throw std::invalid_argument("build_roadmap: null environment");
    if (n < 2) throw std::invalid_argument("build_roadmap: n must be >= 2");
    validate(model);
    const std::size_t d = env->dim();
    PointSet samples = sample_uniform(n, static_cast<int>(d), seed);
    PointSet points = samples;
    if (x_init) {
        if (x_init->dim() != d) throw std::invalid_argument("build_roadmap: x_init dimension mismatch");
        if (!is_free(*env, *x_init)) throw std::invalid_argument("build_roadmap: x_init is not free");
        std::vector<double> flat(x_init->coords());
        flat.insert(flat.end(), samples.flat().begin(), samples.flat().end());
        points = PointSet(d, std::move(flat), seed);
    }
    const Environment& e = *env;
    GeometricGraph graph = build_graph(points, model, [&](std::uint32_t u, std::uint32_t v) {
        return collision_free_segment(e, points[u], points[v]);
    });
    return Roadmap{std::move(graph), std::move(env), model, seed, x_init.has_value()};
}

ConnectionModel planner_model(PlannerKind kind, std::size_t n, int d, const PlannerParams& params,
                              std::uint64_t seed) {
    const auto th = thresholds(d);
    const auto nn = static_cast<std::int64_t>(n);
    switch (kind) {
        case PlannerKind::prm:
            return SoftModel{connection_radius(nn, params.gamma_multiplier * th.gamma_star, d), ConstantPhi{1.0}, seed};
        case PlannerKind::soft_prm:
            return SoftModel{connection_radius(nn, params.gamma_multiplier * th.soft_gamma, d), LinearDecay{}, seed};
        case PlannerKind::bluetooth_prm: {
            const int c = static_cast<int>(std::ceil(params.bluetooth_c_multiplier * bluetooth_threshold(nn)));
            return BluetoothModel{connection_radius(nn, params.gamma_multiplier * th.gamma_star_star, d), c, seed};
        }
        case PlannerKind::embedded_prm: {
            const double ln = std::log(static_cast<double>(n));
            const double p = params.embedded_beta * std::pow(ln, d) * std::log(ln) / static_cast<double>(n);
            return EmbeddedModel{std::clamp(p, 0.0, 1.0), seed};
        }
    }
    throw std::invalid_argument("unknown planner kind");
}

double default_gamma_query(int d) { return 1.2 * thresholds(d).gamma_star; }

QueryResult query(const Roadmap& rm, PointView s, PointView t, double gamma_query) {
    const Environment& env = *rm.env;
    const std::size_t d = env.dim();
    if (s.size() != d || t.size() != d) throw std::invalid_argument("query: dimension mismatch");
    if (!is_free(env, s)) throw std::invalid_argument("query: s is not free");
    if (!is_free(env, t)) throw std::invalid_argument("query: t is not free");
    if (!(gamma_query > 0.0)) throw std::invalid_argument("query: gamma_query must be > 0");
    if (gamma_query <= thresholds(static_cast<int>(d)).gamma_star) {
        warn("query: gamma_query at or below gamma*; connections to s and t may fail");
    }

    const GeometricGraph& g = rm.graph;
    const PointSet& pts = g.vertices();
    const std::size_t n = g.vertex_count();
    const double r = connection_radius(static_cast<std::int64_t>(n), gamma_query, static_cast<int>(d));
    const double r2 = r * r;
    constexpr double kNone = std::numeric_limits<double>::infinity();

    auto links = [&](PointView q) {
        std::vector<double> w(n, kNone);
        for (std::size_t v = 0; v < n; ++v) {
            const double d2 = squared_distance(q, pts[v]);
            if (d2 <= r2 && collision_free_segment(env, q, pts[v])) w[v] = std::sqrt(d2);
        }
        return w;
    };
    const std::vector<double> to_s = links(s);
    const std::vector<double> to_t = links(t);
    const double st2 = squared_distance(s, t);
    const double direct = (st2 <= r2 && collision_free_segment(env, s, t)) ? std::sqrt(st2) : kNone;

    const std::size_t vs = n;
    const std::size_t vt = n + 1;
    auto tree = detail::dijkstra(
        n + 2, vs,
        [&](std::size_t u, auto&& relax) {
            if (u == vs || u == vt) {
                const auto& w = u == vs ? to_s : to_t;
                for (std::size_t v = 0; v < n; ++v) {
                    if (w[v] != kNone) relax(v, w[v]);
                }
                if (direct != kNone) relax(u == vs ? vt : vs, direct);
                return;
            }
            for (const Neighbor& nb : g.neighbors(u)) relax(nb.index, nb.length);
            if (to_s[u] != kNone) relax(vs, to_s[u]);
            if (to_t[u] != kNone) relax(vt, to_t[u]);
        },
        [&](std::size_t u, double) { return u == vt; });

    QueryResult result;
    if (tree.dist[vt] == detail::kUnreached) return result;
    std::vector<std::size_t> chain;
    for (std::size_t v = vt; v != detail::kNoParent; v = tree.parent[v]) chain.push_back(v);
    std::reverse(chain.begin(), chain.end());
    result.success = true;
    for (std::size_t v : chain) {
        if (v == vs) {
            result.path.emplace_back(s);
        } else if (v == vt) {
            result.path.emplace_back(t);
        } else {
            result.path.push_back(pts.point(v));
            result.roadmap_vertices.push_back(v);
        }
    }
    result.length = path_length(result.path);
    return result;
}

double path_length(const std::vector<Point>& path) {
    if (path.empty()) throw std::invalid_argument("path_length: empty path");
    double total = 0.0;
    for (std::size_t i = 1; i < path.size(); ++i) {
        if (path[i].dim() != path[0].dim()) throw std::invalid_argument("path_length: dimension mismatch");
        total += distance(path[i - 1], path[i]);
    }
    return total;
}

void write_roadmap(std::ostream& os, const Roadmap& rm, const std::string& environment_reference) {
    if (environment_reference.find('\n') != std::string::npos) {
        throw std::invalid_argument("write_roadmap: reference must be a single line");
    }
    os << "environment " << environment_reference << '\n';
    write_graph(os, rm.graph);
}

}  // namespace rgglab
