#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rgglab/environment.hpp"
#include "rgglab/geometry.hpp"
#include "rgglab/graph.hpp"
#include "rgglab/models.hpp"

namespace rgglab {

enum class PlannerKind { prm, soft_prm, bluetooth_prm, embedded_prm };

std::string planner_name(PlannerKind kind);
PlannerKind parse_planner(const std::string& name);

/// Roadmap built over samples from the whole cube. Colliding samples stay in the vertex
/// set; every edge touching them fails the collision test, so they end up isolated.
struct Roadmap {
    GeometricGraph graph;
    std::shared_ptr<const Environment> env;
    ConnectionModel model;
    std::uint64_t seed = 0;
    bool has_init = false;  // vertex 0 is x_init when set
};

/// Samples n configurations (seeded by `seed`), prepends x_init when given, and keeps
/// each candidate pair admitted by the model's rule whose segment is collision-free.
/// PRM is SoftModel with phi == 1, Embedded-PRM is EmbeddedModel, Bluetooth-PRM draws
/// its c-subset before collision checking.
Roadmap build_roadmap(std::shared_ptr<const Environment> env, std::size_t n, const ConnectionModel& model,
                      std::uint64_t seed, const std::optional<Point>& x_init = std::nullopt);

struct PlannerParams {
    double gamma_multiplier = 1.5;        // times the model's own threshold constant
    double bluetooth_c_multiplier = 1.1;  // c = ceil(mult * c*_n)
    double embedded_beta = 1.0;           // p = min(1, beta (ln n)^d ln ln n / n)
};

/// Connection model used by `kind` for n samples in dimension d; seeds its draws from `seed`.
ConnectionModel planner_model(PlannerKind kind, std::size_t n, int d, const PlannerParams& params, std::uint64_t seed);

/// Default query radius constant: 1.2 gamma*.
double default_gamma_query(int d);

struct QueryResult {
    bool success = false;
    std::vector<Point> path;  // s, roadmap vertices..., t
    double length = 0.0;
    std::vector<std::size_t> roadmap_vertices;  // interior vertices of the path
};

/// Connects s and t to every roadmap vertex within gamma_query (ln n / n)^(1/d) whose
/// segment is collision-free (and to each other under the same rule), then runs Dijkstra.
/// Throws when s or t is not free; warns when gamma_query <= gamma*.
QueryResult query(const Roadmap& rm, PointView s, PointView t, double gamma_query);

/// Sum of consecutive Euclidean distances.
double path_length(const std::vector<Point>& path);

/// Graph dump preceded by a line `environment <reference>`.
void write_roadmap(std::ostream& os, const Roadmap& rm, const std::string& environment_reference);

}  // namespace rgglab
