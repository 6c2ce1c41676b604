#include "rgglab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <span>
#include <thread>
#include <type_traits>
#include <variant>

#include "json.hpp"
#include "rgglab/analysis.hpp"
#include "rgglab/appendix.hpp"
#include "rgglab/graph.hpp"
#include "rgglab/planners.hpp"
#include "rgglab/rng.hpp"

namespace rgglab {

namespace {

// Substream tags below a trial seed.
constexpr std::uint64_t kModelStream = 0x30DE1;
constexpr std::uint64_t kStretchStream = 0x57;
constexpr std::uint64_t kQueryStream = 0xCA1;

constexpr double kInf = std::numeric_limits<double>::infinity();

const ExperimentKind kAllKinds[] = {ExperimentKind::connectivity, ExperimentKind::stretch,  ExperimentKind::obstacle,
                                    ExperimentKind::planner,      ExperimentKind::integral, ExperimentKind::calibrate};

}  // namespace

std::string experiment_name(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::connectivity: return "connectivity";
        case ExperimentKind::stretch: return "stretch";
        case ExperimentKind::obstacle: return "obstacle";
        case ExperimentKind::planner: return "planner";
        case ExperimentKind::integral: return "integral";
        case ExperimentKind::calibrate: return "calibrate";
    }
    throw std::invalid_argument("unknown experiment kind");
}

ExperimentKind parse_experiment(const std::string& name) {
    for (auto k : kAllKinds) {
        if (experiment_name(k) == name) return k;
    }
    throw std::invalid_argument("unknown experiment: " + name);
}

void validate(const ExperimentSpec& spec) {
    if (spec.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (spec.threads < 1) throw std::invalid_argument("threads must be >= 1");
    if (spec.dims.empty()) throw std::invalid_argument("dims must not be empty");
    if (spec.n_values.empty()) throw std::invalid_argument("n_values must not be empty");
    for (int d : spec.dims) {
        if (d < 2 || d > 20) throw std::invalid_argument("dims must lie in [2, 20]");
    }
    for (std::size_t i = 0; i < spec.n_values.size(); ++i) {
        if (spec.n_values[i] < 2) throw std::invalid_argument("n_values must be >= 2");
        if (i > 0 && spec.n_values[i] <= spec.n_values[i - 1]) {
            throw std::invalid_argument("n_values must be strictly ascending");
        }
        if (spec.n_values[i] > std::numeric_limits<std::uint32_t>::max() - 2) {
            throw std::invalid_argument("n_values too large");
        }
    }
    if (!(spec.gamma_multiplier >= 0.0)) throw std::invalid_argument("gamma_multiplier must be >= 0");
    if (spec.gamma && !(*spec.gamma >= 0.0)) throw std::invalid_argument("gamma must be >= 0");
    const auto& m = spec.model;
    if (m.name != "disk" && m.name != "soft" && m.name != "bluetooth" && m.name != "embedded") {
        throw std::invalid_argument("unknown model: " + m.name);
    }
    if (m.c && *m.c < 1) throw std::invalid_argument("model c must be >= 1");
    if (m.p && !(*m.p >= 0.0 && *m.p <= 1.0)) throw std::invalid_argument("model p must lie in [0, 1]");
    if (!(m.c_multiplier > 0.0)) throw std::invalid_argument("model c_multiplier must be > 0");
    if (!(m.beta >= 0.0)) throw std::invalid_argument("model beta must be >= 0");
    if (spec.stretch_vertices < 2) throw std::invalid_argument("stretch_vertices must be >= 2");
    if (!(spec.coverage >= 0.0 && spec.coverage < 1.0)) throw std::invalid_argument("coverage must lie in [0, 1)");
    if (!(spec.gamma_query_multiplier > 0.0)) throw std::invalid_argument("gamma_query_multiplier must be > 0");
    if (spec.outer_samples < 1 || spec.inner_samples < 1) throw std::invalid_argument("sample counts must be >= 1");
    if (spec.calibration_points < 1) throw std::invalid_argument("calibration_points must be >= 1");
    if (spec.kind == ExperimentKind::planner) {
        if (spec.planners.empty()) throw std::invalid_argument("planners must not be empty");
        for (const auto& p : spec.planners) parse_planner(p);
        if (spec.gamma) throw std::invalid_argument("planner runs take gamma_multiplier, not gamma");
    }
    for (const auto* p : {&spec.start, &spec.goal}) {
        if (!*p) continue;
        for (int d : spec.dims) {
            if ((*p)->dim() != static_cast<std::size_t>(d)) throw std::invalid_argument("start/goal dimension mismatch");
        }
    }
}

// ---------------------------------------------------------------------------
// Config parsing

namespace {

PhiSpec parse_phi(const nlohmann::json& j) {
    const auto type = j.at("type").get<std::string>();
    if (type == "linear") return LinearDecay{};
    if (type == "constant") return ConstantPhi{j.at("q").get<double>()};
    if (type == "table") {
        PiecewiseLinearPhi phi;
        for (const auto& row : j.at("points")) {
            const auto v = row.get<std::vector<double>>();
            if (v.size() != 2) throw std::invalid_argument("phi table rows are [z/r, p] pairs");
            phi.breakpoints.emplace_back(v[0], v[1]);
        }
        return phi;
    }
    throw std::invalid_argument("unknown phi type: " + type);
}

ModelSpec parse_model(const nlohmann::json& j) {
    ModelSpec m;
    for (const auto& [key, value] : j.items()) {
        if (key == "name") m.name = value.get<std::string>();
        else if (key == "phi") m.phi = parse_phi(value);
        else if (key == "c") m.c = value.get<int>();
        else if (key == "c_multiplier") m.c_multiplier = value.get<double>();
        else if (key == "p") m.p = value.get<double>();
        else if (key == "beta") m.beta = value.get<double>();
        else throw std::invalid_argument("unknown model key: " + key);
    }
    return m;
}

}  // namespace

ExperimentSpec parse_spec(const std::string& json_text, ExperimentKind kind, const std::string& base_dir) {
    const auto doc = nlohmann::json::parse(json_text);
    if (!doc.is_object()) throw std::invalid_argument("config must be a JSON object");
    ExperimentSpec spec;
    spec.kind = kind;
    for (const auto& [key, v] : doc.items()) {
        if (key == "kind") {
            if (parse_experiment(v.get<std::string>()) != kind) {
                throw std::invalid_argument("config kind does not match the subcommand");
            }
        } else if (key == "dims") {
            spec.dims = v.get<std::vector<int>>();
        } else if (key == "n_values") {
            spec.n_values = v.get<std::vector<std::int64_t>>();
        } else if (key == "gamma_multiplier") {
            spec.gamma_multiplier = v.get<double>();
        } else if (key == "gamma") {
            spec.gamma = v.get<double>();
        } else if (key == "model") {
            if (v.is_string()) {
                spec.model = ModelSpec{};
                spec.model.name = v.get<std::string>();
            } else {
                spec.model = parse_model(v);
            }
        } else if (key == "planners") {
            spec.planners = v.get<std::vector<std::string>>();
        } else if (key == "trials") {
            spec.trials = v.get<int>();
        } else if (key == "base_seed") {
            spec.base_seed = v.get<std::uint64_t>();
        } else if (key == "threads") {
            spec.threads = v.get<int>();
        } else if (key == "output") {
            spec.output = v.get<std::string>();
        } else if (key == "stretch_vertices") {
            spec.stretch_vertices = v.get<int>();
        } else if (key == "coverage") {
            spec.coverage = v.get<double>();
        } else if (key == "environment") {
            std::filesystem::path p(v.get<std::string>());
            if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
            spec.environment_file = p.string();
        } else if (key == "start") {
            spec.start = Point(v.get<std::vector<double>>());
        } else if (key == "goal") {
            spec.goal = Point(v.get<std::vector<double>>());
        } else if (key == "gamma_query_multiplier") {
            spec.gamma_query_multiplier = v.get<double>();
        } else if (key == "outer_samples") {
            spec.outer_samples = v.get<std::int64_t>();
        } else if (key == "inner_samples") {
            spec.inner_samples = v.get<std::int64_t>();
        } else if (key == "calibration_points") {
            spec.calibration_points = v.get<int>();
        } else {
            throw std::invalid_argument("unknown config key: " + key);
        }
    }
    validate(spec);
    return spec;
}

ExperimentSpec load_spec(const std::string& path, ExperimentKind kind) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str(), kind, std::filesystem::path(path).parent_path().string());
}

// ---------------------------------------------------------------------------

std::uint64_t trial_seed(std::uint64_t base_seed, int d, std::int64_t n, int trial) {
    return base_seed ^ hash_keys({static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(n),
                                  static_cast<std::uint64_t>(trial)});
}

double neighbor_target(std::int64_t n, int d) {
    return std::ldexp(1.0, d - 1) / d * std::log(static_cast<double>(n));
}

double calibrate_radius(const Environment& env, std::int64_t n, std::uint64_t seed, int query_points) {
    if (n < 2) throw std::invalid_argument("calibrate_radius: n must be >= 2");
    if (query_points < 1) throw std::invalid_argument("calibrate_radius: need at least one query point");
    const int d = static_cast<int>(env.dim());
    const PointSet samples = sample_uniform(static_cast<std::size_t>(n), d, seed);
    const auto k = static_cast<std::int64_t>(std::ceil(neighbor_target(n, d)));

    if (k >= n) {
        double best = 0.0;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            for (std::size_t j = i + 1; j < samples.size(); ++j) best = std::max(best, distance(samples[i], samples[j]));
        }
        return best;
    }

    Xoshiro256ss rng(derive_seed(seed, {kQueryStream}));
    std::vector<double> q(static_cast<std::size_t>(d));
    std::vector<double> dist(samples.size());
    double total = 0.0;
    for (int i = 0; i < query_points; ++i) {
        int attempts = 0;
        do {
            if (++attempts > 1'000'000) throw std::runtime_error("calibrate_radius: free space too small to sample");
            for (auto& c : q) c = rng.uniform();
        } while (!is_free(env, q));
        for (std::size_t j = 0; j < samples.size(); ++j) dist[j] = distance(q, samples[j]);
        auto kth = dist.begin() + (k - 1);
        std::nth_element(dist.begin(), kth, dist.end());
        total += *kth;
    }
    return total / query_points;
}

Environment experiment_environment(const ExperimentSpec& spec, int d) {
    if (spec.environment_file) {
        Environment env = load_environment(*spec.environment_file);
        if (env.dim() != static_cast<std::size_t>(d)) throw std::invalid_argument("environment dimension mismatch");
        return env;
    }
    return make_toy_scenario(d, spec.coverage);
}

// ---------------------------------------------------------------------------
// Trials

namespace {

struct Task {
    int d;
    std::int64_t n;
    int trial;
    std::string planner;
};

// Per-dimension data shared by all trials: environment, query endpoints, geodesic.
struct Scene {
    std::shared_ptr<const Environment> env;
    Point start;
    Point goal;
    std::optional<double> geodesic;
};

struct Sink {
    const Task& task;
    std::string experiment;
    double gamma;
    std::string model;
    std::uint64_t seed;
    std::vector<ExperimentRecord>& out;

    void operator()(const std::string& metric, double value) const {
        out.push_back({experiment, task.d, task.n, gamma, model, task.trial, seed, metric, value});
    }
};

double model_threshold(const std::string& name, int d) {
    const auto th = thresholds(d);
    if (name == "disk") return th.gamma_star;
    if (name == "soft") return th.soft_gamma;
    if (name == "bluetooth") return th.gamma_star_star;
    return kInf;
}

double spec_gamma(const ExperimentSpec& spec, int d) {
    if (spec.model.name == "embedded") return kInf;
    return spec.gamma ? *spec.gamma : spec.gamma_multiplier * model_threshold(spec.model.name, d);
}

ConnectionModel make_model(const ExperimentSpec& spec, int d, std::int64_t n, std::uint64_t seed) {
    const ModelSpec& m = spec.model;
    if (m.name == "embedded") {
        if (m.p) return EmbeddedModel{*m.p, seed};
        const double ln = std::log(static_cast<double>(n));
        const double p = m.beta * std::pow(ln, d) * std::log(ln) / static_cast<double>(n);
        return EmbeddedModel{std::clamp(p, 0.0, 1.0), seed};
    }
    const double r = connection_radius(n, spec_gamma(spec, d), d);
    if (m.name == "disk") return DiskModel{r};
    if (m.name == "soft") return SoftModel{r, m.phi, seed};
    const int c = m.c ? *m.c : static_cast<int>(std::ceil(m.c_multiplier * bluetooth_threshold(n)));
    return BluetoothModel{r, c, seed};
}

void emit_model_parameters(const ConnectionModel& model, const Sink& emit) {
    std::visit(
        [&](const auto& m) {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, EmbeddedModel>) {
                emit("p", m.p);
            } else {
                emit("radius", m.r);
                if constexpr (std::is_same_v<M, BluetoothModel>) emit("c", m.c);
            }
        },
        model);
}

void run_connectivity(const ExperimentSpec& spec, const Task& t, std::vector<ExperimentRecord>& out) {
    const std::uint64_t seed = trial_seed(spec.base_seed, t.d, t.n, t.trial);
    const Sink emit{t, "connectivity", spec_gamma(spec, t.d), spec.model.name, seed, out};
    const ConnectionModel model = make_model(spec, t.d, t.n, derive_seed(seed, {kModelStream}));
    const GeometricGraph g = build_graph(sample_uniform(static_cast<std::size_t>(t.n), t.d, seed), model);
    const std::size_t deficit = largest_component_deficit(g);
    emit_model_parameters(model, emit);
    emit("edges", static_cast<double>(g.edge_count()));
    emit("deficit", static_cast<double>(deficit));
    emit("connected", deficit == 0 ? 1.0 : 0.0);
}

std::vector<std::size_t> pick_vertices(std::size_t n, std::size_t m, std::uint64_t seed) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    m = std::min(m, n);
    Xoshiro256ss rng(seed);
    for (std::size_t i = 0; i < m; ++i) std::swap(all[i], all[i + rng.below(n - i)]);
    all.resize(m);
    return all;
}

void run_stretch(const ExperimentSpec& spec, const Task& t, std::vector<ExperimentRecord>& out) {
    const std::uint64_t seed = trial_seed(spec.base_seed, t.d, t.n, t.trial);
    const Sink emit{t, "stretch", spec_gamma(spec, t.d), spec.model.name, seed, out};
    const ConnectionModel model = make_model(spec, t.d, t.n, derive_seed(seed, {kModelStream}));
    const GeometricGraph g = build_graph(sample_uniform(static_cast<std::size_t>(t.n), t.d, seed), model);
    const auto chosen = pick_vertices(g.vertex_count(), static_cast<std::size_t>(spec.stretch_vertices),
                                      derive_seed(seed, {kStretchStream}));
    std::size_t pairs = 0;
    std::size_t skipped = 0;
    double max_stretch = 0.0;
    double min_stretch = kInf;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        const std::span<const std::size_t> targets(chosen.data() + i + 1, chosen.size() - i - 1);
        const auto dist = distances_to(g, chosen[i], targets);
        for (std::size_t k = 0; k < targets.size(); ++k) {
            ++pairs;
            const double euclid = distance(g.vertices()[chosen[i]], g.vertices()[targets[k]]);
            if (!dist[k] || euclid == 0.0) {
                ++skipped;
                continue;
            }
            const double s = *dist[k] / euclid;
            max_stretch = std::max(max_stretch, s);
            min_stretch = std::min(min_stretch, s);
        }
    }
    emit_model_parameters(model, emit);
    emit("pairs", static_cast<double>(pairs));
    emit("skipped_pairs", static_cast<double>(skipped));
    if (skipped < pairs) {
        emit("max_stretch", max_stretch);
        emit("min_stretch", min_stretch);
    }
}

void run_obstacle(const ExperimentSpec& spec, const Scene& scene, const Task& t, std::vector<ExperimentRecord>& out) {
    const std::uint64_t seed = trial_seed(spec.base_seed, t.d, t.n, t.trial);
    const Sink emit{t, "obstacle", spec_gamma(spec, t.d), spec.model.name, seed, out};
    const ConnectionModel model = make_model(spec, t.d, t.n, derive_seed(seed, {kModelStream}));
    const Roadmap rm = build_roadmap(scene.env, static_cast<std::size_t>(t.n), model, seed);
    const auto& pts = rm.graph.vertices();
    std::vector<bool> free(pts.size());
    std::size_t free_count = 0;
    for (std::size_t v = 0; v < pts.size(); ++v) free_count += (free[v] = is_free(*scene.env, pts[v]));
    const std::size_t deficit = largest_component_deficit(rm.graph, free);

    emit_model_parameters(model, emit);
    emit("edges", static_cast<double>(rm.graph.edge_count()));
    emit("free_vertices", static_cast<double>(free_count));
    emit("deficit", static_cast<double>(deficit));

    const double gq = spec.gamma_query_multiplier * thresholds(t.d).gamma_star;
    const QueryResult q = query(rm, scene.start, scene.goal, gq);
    emit("query_success", q.success ? 1.0 : 0.0);
    if (!q.success) return;
    emit("path_length", q.length);
    const double euclid = distance(scene.start, scene.goal);
    if (euclid > 0.0) emit("stretch_euclidean", q.length / euclid);
    if (scene.geodesic && *scene.geodesic > 0.0) emit("stretch_geodesic", q.length / *scene.geodesic);
}

void run_planner(const ExperimentSpec& spec, const Scene& scene, const Task& t, ExperimentOutput& out) {
    using Clock = std::chrono::steady_clock;
    const std::uint64_t seed = trial_seed(spec.base_seed, t.d, t.n, t.trial);
    const PlannerKind kind = parse_planner(t.planner);
    PlannerParams params;
    params.gamma_multiplier = spec.gamma_multiplier;
    params.bluetooth_c_multiplier = spec.model.c_multiplier;
    params.embedded_beta = spec.model.beta;
    const ConnectionModel model =
        planner_model(kind, static_cast<std::size_t>(t.n), t.d, params, derive_seed(seed, {kModelStream}));

    double gamma = kInf;
    const auto th = thresholds(t.d);
    if (kind == PlannerKind::prm) gamma = spec.gamma_multiplier * th.gamma_star;
    if (kind == PlannerKind::soft_prm) gamma = spec.gamma_multiplier * th.soft_gamma;
    if (kind == PlannerKind::bluetooth_prm) gamma = spec.gamma_multiplier * th.gamma_star_star;
    const Sink emit{t, "planner", gamma, t.planner, seed, out.records};
    const Sink time{t, "planner", gamma, t.planner, seed, out.timings};

    const auto t0 = Clock::now();
    const Roadmap rm = build_roadmap(scene.env, static_cast<std::size_t>(t.n), model, seed);
    const auto t1 = Clock::now();
    const QueryResult q = query(rm, scene.start, scene.goal, spec.gamma_query_multiplier * th.gamma_star);
    const auto t2 = Clock::now();

    emit_model_parameters(model, emit);
    emit("edges", static_cast<double>(rm.graph.edge_count()));
    emit("success", q.success ? 1.0 : 0.0);
    if (q.success) {
        emit("path_length", q.length);
        if (scene.geodesic && *scene.geodesic > 0.0) emit("length_over_geodesic", q.length / *scene.geodesic);
    }
    time("build_seconds", std::chrono::duration<double>(t1 - t0).count());
    time("query_seconds", std::chrono::duration<double>(t2 - t1).count());
}

void run_integral(const ExperimentSpec& spec, const Task& t, std::vector<ExperimentRecord>& out) {
    const std::uint64_t seed = trial_seed(spec.base_seed, t.d, t.n, t.trial);
    const double gamma = spec.gamma ? *spec.gamma : spec.gamma_multiplier * thresholds(t.d).soft_gamma;
    const Sink emit{t, "integral", gamma, "soft", seed, out};
    const IntegralEstimate est = estimate_In(t.n, gamma, t.d, spec.outer_samples, seed, spec.inner_samples);
    emit("radius", connection_radius(t.n, gamma, t.d));
    emit("In", est.value);
    emit("In_std_error", est.std_error);
}

void run_calibrate(const ExperimentSpec& spec, const Scene& scene, const Task& t, std::vector<ExperimentRecord>& out) {
    const std::uint64_t seed = trial_seed(spec.base_seed, t.d, t.n, t.trial);
    const double gamma_star = thresholds(t.d).gamma_star;
    const Sink emit{t, "calibrate", gamma_star, "disk", seed, out};
    const double r = calibrate_radius(*scene.env, t.n, seed, spec.calibration_points);
    const double reference = connection_radius(t.n, gamma_star, t.d);
    emit("nbr", neighbor_target(t.n, t.d));
    emit("calibrated_radius", r);
    emit("reference_radius", reference);
    emit("radius_ratio", r / reference);
}

Scene make_scene(const ExperimentSpec& spec, int d) {
    Scene s;
    s.env = std::make_shared<const Environment>(experiment_environment(spec, d));
    s.start = spec.start ? *spec.start : Point(std::vector<double>(static_cast<std::size_t>(d), 0.0));
    s.goal = spec.goal ? *spec.goal : Point(std::vector<double>(static_cast<std::size_t>(d), 0.5));
    if (spec.kind == ExperimentKind::obstacle || spec.kind == ExperimentKind::planner) {
        if (!is_free(*s.env, s.start) || !is_free(*s.env, s.goal)) {
            throw std::invalid_argument("start and goal must be free");
        }
        s.geodesic = geodesic_estimate(*s.env, s.start, s.goal);
    }
    return s;
}

}  // namespace

ExperimentOutput run_experiment(const ExperimentSpec& spec) {
    validate(spec);
    std::vector<Task> tasks;
    for (int d : spec.dims) {
        for (std::int64_t n : spec.n_values) {
            for (int trial = 0; trial < spec.trials; ++trial) {
                if (spec.kind == ExperimentKind::planner) {
                    for (const auto& p : spec.planners) tasks.push_back({d, n, trial, p});
                } else {
                    tasks.push_back({d, n, trial, {}});
                }
            }
        }
    }

    std::map<int, Scene> scenes;
    if (spec.kind == ExperimentKind::obstacle || spec.kind == ExperimentKind::planner ||
        spec.kind == ExperimentKind::calibrate) {
        for (int d : spec.dims) scenes.emplace(d, make_scene(spec, d));
    }

    std::vector<ExperimentOutput> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                const Task& t = tasks[i];
                auto& r = results[i];
                switch (spec.kind) {
                    case ExperimentKind::connectivity: run_connectivity(spec, t, r.records); break;
                    case ExperimentKind::stretch: run_stretch(spec, t, r.records); break;
                    case ExperimentKind::obstacle: run_obstacle(spec, scenes.at(t.d), t, r.records); break;
                    case ExperimentKind::planner: run_planner(spec, scenes.at(t.d), t, r); break;
                    case ExperimentKind::integral: run_integral(spec, t, r.records); break;
                    case ExperimentKind::calibrate: run_calibrate(spec, scenes.at(t.d), t, r.records); break;
                }
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(tasks.size());
                return;
            }
        }
    };
    const auto workers = std::min<std::size_t>(static_cast<std::size_t>(spec.threads), tasks.size());
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    ExperimentOutput merged;
    for (auto& r : results) {
        merged.records.insert(merged.records.end(), r.records.begin(), r.records.end());
        merged.timings.insert(merged.timings.end(), r.timings.begin(), r.timings.end());
    }
    return merged;
}

void write_csv(std::ostream& os, const std::vector<ExperimentRecord>& records) {
    os << "experiment,d,n,gamma,model,trial,seed,metric_name,metric_value\n";
    for (const auto& r : records) {
        os << r.experiment << ',' << r.d << ',' << r.n << ',' << format_double(r.gamma) << ',' << r.model << ','
           << r.trial << ',' << r.seed << ',' << r.metric_name << ',' << format_double(r.metric_value) << '\n';
    }
}

}  // namespace rgglab
