#include "rgglab/environment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "rgglab/detail/dijkstra.hpp"
#include "rgglab/rng.hpp"

namespace rgglab {

Environment::Environment(std::size_t dim, std::vector<AxisBox> obstacles) : dim_(dim), obstacles_(std::move(obstacles)) {
    if (dim_ == 0) throw std::invalid_argument("Environment: dimension must be >= 1");
    const AxisBox cube = AxisBox::unit_cube(dim_);
    for (const auto& b : obstacles_) {
        if (b.dim() != dim_) throw std::invalid_argument("Environment: obstacle dimension mismatch");
        if (!cube.contains(b.lo()) || !cube.contains(b.hi())) throw std::invalid_argument("Environment: obstacle outside [0,1]^d");
    }
}

Environment make_toy_scenario(int d, double coverage) {
    if (d < 2) throw std::invalid_argument("make_toy_scenario: dimension must be >= 2");
    if (!(coverage >= 0.0 && coverage < 1.0)) throw std::invalid_argument("make_toy_scenario: coverage must lie in [0,1)");
    const auto dim = static_cast<std::size_t>(d);
    if (coverage == 0.0) return Environment(dim);
    const double cells = std::ldexp(1.0, d);
    const double side = std::pow(coverage / cells, 1.0 / d);
    if (!(side < 0.5)) throw std::invalid_argument("make_toy_scenario: coverage too large, obstacle side must stay below 1/2");
    std::vector<AxisBox> obstacles;
    const std::size_t count = std::size_t{1} << dim;
    for (std::size_t mask = 0; mask < count; ++mask) {
        std::vector<double> lo(dim), hi(dim);
        for (std::size_t a = 0; a < dim; ++a) {
            const double center = ((mask >> a) & 1U) ? 0.75 : 0.25;
            lo[a] = center - 0.5 * side;
            hi[a] = center + 0.5 * side;
        }
        obstacles.emplace_back(Point(std::move(lo)), Point(std::move(hi)));
    }
    return Environment(dim, std::move(obstacles));
}

bool is_free(const Environment& env, PointView x) {
    if (x.size() != env.dim()) throw std::invalid_argument("is_free: dimension mismatch");
    if (!in_unit_cube(x)) throw std::invalid_argument("is_free: point outside [0,1]^d");
    return std::none_of(env.obstacles().begin(), env.obstacles().end(),
                        [&](const AxisBox& b) { return b.contains_interior(x); });
}

namespace {

// Does the closed segment x + t (y - x), t in [0,1], meet the open box?
bool segment_hits_open_box(const AxisBox& box, PointView x, PointView y) {
    double enter = -std::numeric_limits<double>::infinity();
    double leave = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < x.size(); ++a) {
        const double lo = box.lo()[a], hi = box.hi()[a];
        const double dir = y[a] - x[a];
        if (dir == 0.0) {
            if (!(x[a] > lo && x[a] < hi)) return false;
            continue;
        }
        double t1 = (lo - x[a]) / dir;
        double t2 = (hi - x[a]) / dir;
        if (t1 > t2) std::swap(t1, t2);
        enter = std::max(enter, t1);
        leave = std::min(leave, t2);
        if (!(enter < leave)) return false;
    }
    // Open parameter interval (enter, leave) against the closed [0, 1].
    return enter < leave && enter < 1.0 && leave > 0.0;
}

}  // namespace

bool collision_free_segment(const Environment& env, PointView x, PointView y) {
    if (x.size() != env.dim() || y.size() != env.dim()) throw std::invalid_argument("collision_free_segment: dimension mismatch");
    return std::none_of(env.obstacles().begin(), env.obstacles().end(),
                        [&](const AxisBox& b) { return segment_hits_open_box(b, x, y); });
}

double free_volume(const Environment& env) {
    const auto& obs = env.obstacles();
    bool disjoint = true;
    for (std::size_t i = 0; i < obs.size() && disjoint; ++i) {
        for (std::size_t j = i + 1; j < obs.size() && disjoint; ++j) disjoint = !obs[i].overlaps_interior(obs[j]);
    }
    if (disjoint) {
        double covered = 0.0;
        for (const auto& b : obs) covered += b.volume();
        return 1.0 - covered;
    }
    constexpr std::size_t kSamples = 1'000'000;
    Xoshiro256ss rng(0x5EEDF1EEULL);
    std::vector<double> x(env.dim());
    std::size_t free = 0;
    for (std::size_t s = 0; s < kSamples; ++s) {
        for (auto& c : x) c = rng.uniform();
        free += is_free(env, x) ? 1 : 0;
    }
    return static_cast<double>(free) / static_cast<double>(kSamples);
}

// ---------------------------------------------------------------------------

namespace {

int default_resolution(std::size_t d) {
    switch (d) {
        case 1: return 4096;
        case 2: return 512;
        case 3: return 64;
        case 4: return 20;
        default: return 8;
    }
}

int default_move_radius(std::size_t d) {
    if (d <= 2) return 3;
    if (d == 3) return 2;
    return 1;
}

// Lattice offsets in [-k, k]^d whose components have gcd 1.
std::vector<std::vector<int>> primitive_moves(std::size_t d, int k) {
    std::vector<std::vector<int>> moves;
    std::vector<int> off(d, -k);
    for (;;) {
        int g = 0;
        for (int c : off) g = std::gcd(g, std::abs(c));
        if (g == 1) moves.push_back(off);
        std::size_t a = 0;
        while (a < d && off[a] == k) off[a++] = -k;
        if (a == d) break;
        ++off[a];
    }
    return moves;
}

class Lattice {
public:
    Lattice(std::size_t d, int resolution) : d_(d), res_(resolution), h_(1.0 / resolution) {
        const double total = std::pow(resolution + 1.0, static_cast<double>(d));
        if (total > 2e7) throw std::invalid_argument("geodesic_estimate: lattice too large for this dimension");
        count_ = static_cast<std::size_t>(total);
    }

    std::size_t count() const { return count_; }
    double spacing() const { return h_; }

    void coords(std::size_t id, std::vector<int>& cell) const {
        for (std::size_t a = 0; a < d_; ++a) {
            cell[a] = static_cast<int>(id % static_cast<std::size_t>(res_ + 1));
            id /= static_cast<std::size_t>(res_ + 1);
        }
    }
    std::size_t id(const std::vector<int>& cell) const {
        std::size_t id = 0;
        for (std::size_t a = d_; a-- > 0;) id = id * static_cast<std::size_t>(res_ + 1) + static_cast<std::size_t>(cell[a]);
        return id;
    }
    bool inside(const std::vector<int>& cell) const {
        return std::all_of(cell.begin(), cell.end(), [&](int c) { return c >= 0 && c <= res_; });
    }
    void position(const std::vector<int>& cell, std::vector<double>& p) const {
        for (std::size_t a = 0; a < d_; ++a) p[a] = static_cast<double>(cell[a]) / res_;
    }

private:
    std::size_t d_;
    int res_;
    double h_;
    std::size_t count_ = 0;
};

std::vector<std::vector<double>> shortcut(const Environment& env, const std::vector<std::vector<double>>& path) {
    std::vector<std::vector<double>> out{path.front()};
    std::size_t i = 0;
    while (i + 1 < path.size()) {
        std::size_t j = path.size() - 1;
        while (j > i + 1 && !collision_free_segment(env, path[i], path[j])) --j;
        out.push_back(path[j]);
        i = j;
    }
    return out;
}

double polyline_length(const std::vector<std::vector<double>>& path) {
    double len = 0.0;
    for (std::size_t k = 1; k < path.size(); ++k) len += distance(path[k - 1], path[k]);
    return len;
}

}  // namespace

std::optional<double> geodesic_estimate(const Environment& env, PointView x, PointView y, GeodesicOptions options) {
    const std::size_t d = env.dim();
    if (!is_free(env, x) || !is_free(env, y)) throw std::invalid_argument("geodesic_estimate: endpoints must be free");
    if (collision_free_segment(env, x, y)) return distance(x, y);

    const int res = options.resolution > 0 ? options.resolution : default_resolution(d);
    const int k = options.move_radius > 0 ? options.move_radius : default_move_radius(d);
    const Lattice lattice(d, res);
    const auto moves = primitive_moves(d, k);
    const std::size_t source = lattice.count();
    const std::size_t target = lattice.count() + 1;
    const double reach = k * lattice.spacing();

    std::vector<signed char> free_node(lattice.count(), -1);  // -1 unknown, 0 blocked, 1 free
    std::vector<int> cell(d), nb(d);
    std::vector<double> p(d), q(d);
    std::vector<int> probe_cell(d);
    std::vector<double> probe(d);
    auto node_free = [&](std::size_t id) {
        if (free_node[id] < 0) {
            lattice.coords(id, probe_cell);
            lattice.position(probe_cell, probe);
            free_node[id] = is_free(env, probe) ? 1 : 0;
        }
        return free_node[id] == 1;
    };
    auto near_endpoint = [&](PointView e, const std::vector<double>& pos) {
        for (std::size_t a = 0; a < d; ++a) {
            if (std::abs(pos[a] - e[a]) > reach) return false;
        }
        return true;
    };

    // Lattice nodes within `reach` (max-norm) of an endpoint.
    auto nodes_near = [&](PointView e) {
        std::vector<std::size_t> ids;
        std::vector<int> lo(d), c(d);
        for (std::size_t a = 0; a < d; ++a) lo[a] = static_cast<int>(std::floor(e[a] / lattice.spacing())) - k;
        const int span = 2 * k + 2;
        std::vector<int> off(d, 0);
        for (;;) {
            for (std::size_t a = 0; a < d; ++a) c[a] = lo[a] + off[a];
            if (lattice.inside(c)) {
                lattice.position(c, q);
                if (near_endpoint(e, q)) ids.push_back(lattice.id(c));
            }
            std::size_t a = 0;
            while (a < d && off[a] == span - 1) off[a++] = 0;
            if (a == d) break;
            ++off[a];
        }
        return ids;
    };
    const auto start_nodes = nodes_near(x);

    auto for_each_edge = [&](std::size_t u, auto&& relax) {
        if (u == source) {
            for (std::size_t id : start_nodes) {
                if (!node_free(id)) continue;
                lattice.coords(id, cell);
                lattice.position(cell, q);
                if (collision_free_segment(env, x, q)) relax(id, distance(x, q));
            }
            return;
        }
        lattice.coords(u, cell);
        lattice.position(cell, p);
        if (near_endpoint(y, p) && collision_free_segment(env, p, y)) relax(target, distance(p, y));
        for (const auto& m : moves) {
            for (std::size_t a = 0; a < d; ++a) nb[a] = cell[a] + m[a];
            if (!lattice.inside(nb)) continue;
            const std::size_t v = lattice.id(nb);
            if (!node_free(v)) continue;
            lattice.position(nb, q);
            if (collision_free_segment(env, p, q)) relax(v, distance(p, q));
        }
    };

    const auto tree = detail::dijkstra(lattice.count() + 2, source, for_each_edge,
                                       [&](std::size_t u, double) { return u == target; });
    if (tree.dist[target] == detail::kUnreached) return std::nullopt;
    if (!options.shortcut) return tree.dist[target];

    std::vector<std::vector<double>> path;
    for (std::size_t u = target; u != detail::kNoParent; u = tree.parent[u]) {
        if (u == target) {
            path.emplace_back(y.begin(), y.end());
        } else if (u == source) {
            path.emplace_back(x.begin(), x.end());
        } else {
            lattice.coords(u, cell);
            lattice.position(cell, p);
            path.push_back(p);
        }
    }
    std::reverse(path.begin(), path.end());
    return std::min(tree.dist[target], polyline_length(shortcut(env, path)));
}

// ---------------------------------------------------------------------------

Environment parse_environment(const std::string& json_text) {
    const auto doc = nlohmann::json::parse(json_text);
    const auto d = doc.at("dim").get<std::size_t>();
    std::vector<AxisBox> obstacles;
    if (doc.contains("obstacles")) {
        for (const auto& row : doc.at("obstacles")) {
            const auto v = row.get<std::vector<double>>();
            if (v.size() != 2 * d) throw std::invalid_argument("environment: each obstacle needs 2*dim numbers");
            obstacles.emplace_back(Point(std::vector<double>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(d))),
                                   Point(std::vector<double>(v.begin() + static_cast<std::ptrdiff_t>(d), v.end())));
        }
    }
    return Environment(d, std::move(obstacles));
}

Environment load_environment(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open environment file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_environment(buf.str());
}

std::string environment_to_json(const Environment& env) {
    nlohmann::json doc;
    doc["dim"] = env.dim();
    doc["obstacles"] = nlohmann::json::array();
    for (const auto& b : env.obstacles()) {
        std::vector<double> row(b.lo().coords());
        row.insert(row.end(), b.hi().coords().begin(), b.hi().coords().end());
        doc["obstacles"].push_back(row);
    }
    return doc.dump();
}

}  // namespace rgglab
