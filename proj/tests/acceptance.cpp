// Acceptance run: one PASS/FAIL line per criterion. Pass criterion numbers as
// arguments to run a subset.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rgglab/analysis.hpp"
#include "rgglab/appendix.hpp"
#include "rgglab/diagnostics.hpp"
#include "rgglab/environment.hpp"
#include "rgglab/experiments.hpp"
#include "rgglab/grid_index.hpp"
#include "rgglab/models.hpp"
#include "support/oracles.hpp"

using namespace rgglab;

namespace {

constexpr double kToyGeodesic = 0.790569415042095;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double median(std::vector<double> v) {
    if (v.empty()) return NAN;
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

// (n, trial) -> value of one metric.
std::map<std::pair<std::int64_t, int>, double> metric(const std::vector<ExperimentRecord>& records,
                                                      const std::string& name, const std::string& model = "") {
    std::map<std::pair<std::int64_t, int>, double> out;
    for (const auto& r : records) {
        if (r.metric_name == name && (model.empty() || r.model == model)) out[{r.n, r.trial}] = r.metric_value;
    }
    return out;
}

// Values of one metric at size n, with `missing` for trials that did not emit it.
std::vector<double> at_n(const std::map<std::pair<std::int64_t, int>, double>& m, std::int64_t n, int trials,
                         double missing) {
    std::vector<double> v;
    for (int t = 0; t < trials; ++t) {
        const auto it = m.find({n, t});
        v.push_back(it == m.end() ? missing : it->second);
    }
    return v;
}

int count_if(const std::vector<double>& v, const std::function<bool(double)>& f) {
    return static_cast<int>(std::count_if(v.begin(), v.end(), f));
}

ExperimentSpec base(ExperimentKind kind, std::vector<std::int64_t> ns, int trials) {
    ExperimentSpec s;
    s.kind = kind;
    s.dims = {2};
    s.n_values = std::move(ns);
    s.trials = trials;
    return s;
}

bool subset(const GeometricGraph& a, const GeometricGraph& b) {
    const auto ea = a.edges();
    const auto eb = b.edges();
    return std::includes(eb.begin(), eb.end(), ea.begin(), ea.end());
}

std::string csv(const std::vector<ExperimentRecord>& r) {
    std::ostringstream os;
    write_csv(os, r);
    return os.str();
}

Outcome constants() {
    double worst = 0.0;
    const auto th = thresholds(2);
    const auto rel = [&](double a, double b) { worst = std::max(worst, std::abs(a - b) / std::abs(b)); };
    rel(th.gamma_star, 1.0 / std::sqrt(std::numbers::pi));
    rel(th.gamma_star_star, 2.0 * std::pow(2.0, 1.5));
    rel(th.soft_gamma, std::sqrt(3.0) / std::sqrt(std::numbers::pi));
    for (int d = 1; d <= 20; ++d) {
        rel(unit_ball_volume(d), oracle::ball_volume_recurrence(d));
        if (d == 1) continue;
        rel(thresholds(d).theta_d, oracle::ball_volume_recurrence(d));
        rel(thresholds(d).gamma_star, 2.0 * std::pow(2.0 * d * oracle::ball_volume_recurrence(d), -1.0 / d));
    }
    return {worst <= 1e-12, fmt("max relative error %.3g", worst)};
}

Outcome neighbor_search() {
    int mismatches = 0, queries = 0;
    for (int d : {2, 3, 6}) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            oracle::Gen gen(seed * 31 + static_cast<std::uint64_t>(d));
            const PointSet pts = gen.points(1000, static_cast<std::size_t>(d));
            const double r = gen.range(0.02, 0.15 * d);
            const GridIndex index(pts, gen.range(0.5, 2.0) * r);
            for (int q = 0; q < 100; ++q) {
                const auto x = gen.point(static_cast<std::size_t>(d));
                ++queries;
                mismatches += radius_neighbors(pts, index, x, r) != oracle::neighbors(pts, x, r);
            }
        }
    }
    return {mismatches == 0, fmt("%d/%d queries differ", mismatches, queries)};
}

Outcome disk_transition() {
    auto spec = base(ExperimentKind::connectivity, {50000}, 100);
    spec.gamma_multiplier = 1.5;
    const auto above = at_n(metric(run_experiment(spec).records, "connected"), 50000, 100, 0.0);
    spec.gamma_multiplier = 0.7;
    const auto below = at_n(metric(run_experiment(spec).records, "connected"), 50000, 100, 1.0);
    const int conn = count_if(above, [](double c) { return c == 1.0; });
    const int disc = count_if(below, [](double c) { return c == 0.0; });
    return {conn >= 90 && disc >= 95, fmt("1.5 gamma*: %d/100 connected; 0.7 gamma*: %d/100 disconnected", conn, disc)};
}

Outcome soft_connectivity() {
    auto spec = base(ExperimentKind::connectivity, {50000}, 100);
    spec.model.name = "soft";
    const auto c = at_n(metric(run_experiment(spec).records, "connected"), 50000, 100, 0.0);
    const int conn = count_if(c, [](double x) { return x == 1.0; });
    return {conn >= 90, fmt("%d/100 connected", conn)};
}

Outcome bluetooth_connectivity() {
    auto spec = base(ExperimentKind::connectivity, {20000}, 100);
    spec.model.name = "bluetooth";
    const auto good = at_n(metric(run_experiment(spec).records, "connected"), 20000, 100, 0.0);
    spec.model.c = 1;
    const auto one = at_n(metric(run_experiment(spec).records, "connected"), 20000, 100, 1.0);
    const int conn = count_if(good, [](double x) { return x == 1.0; });
    const int disc = count_if(one, [](double x) { return x == 0.0; });
    const int c = static_cast<int>(std::ceil(1.1 * bluetooth_threshold(20000)));
    return {conn >= 90 && disc >= 80, fmt("c=%d: %d/100 connected; c=1: %d/100 disconnected", c, conn, disc)};
}

Outcome stretch_trend() {
    auto spec = base(ExperimentKind::stretch, {1000, 100000}, 20);
    spec.stretch_vertices = 50;
    const auto out = run_experiment(spec).records;
    const auto mx = metric(out, "max_stretch");
    const auto mn = metric(out, "min_stretch");
    double lowest = INFINITY;
    for (const auto& [k, v] : mn) lowest = std::min(lowest, v);
    const double small = median(at_n(mx, 1000, 20, INFINITY));
    const double large = median(at_n(mx, 100000, 20, INFINITY));
    return {large < small && lowest >= 1.0 - 1e-9 && !mn.empty(),
            fmt("median max stretch %.4f (n=1e3) -> %.4f (n=1e5); min stretch %.6f", small, large, lowest)};
}

Outcome obstacle_domain() {
    const Environment env = make_toy_scenario(2, 0.25);
    const Point s{0.0, 0.0}, t{0.5, 0.5};
    const auto lattice = geodesic_estimate(env, s, t);
    const double visibility = oracle::visibility_geodesic_2d(env.obstacles(), s, t);
    const bool oracles_ok = lattice && std::abs(*lattice / kToyGeodesic - 1.0) <= 0.01 &&
                            std::abs(visibility / kToyGeodesic - 1.0) <= 0.01;

    const std::vector<std::int64_t> ns{1000, 10000, 100000};
    auto spec = base(ExperimentKind::obstacle, ns, 20);
    spec.coverage = 0.25;
    spec.gamma_query_multiplier = 1.5;
    const auto out = run_experiment(spec).records;
    const auto deficit = median(at_n(metric(out, "deficit"), 100000, 20, INFINITY));
    std::vector<double> med;
    for (auto n : ns) med.push_back(median(at_n(metric(out, "stretch_geodesic"), n, 20, INFINITY)));
    const bool monotone = med[1] <= med[0] && med[2] <= med[1];
    return {oracles_ok && deficit == 0.0 && med[2] <= 1.2 && monotone,
            fmt("geodesic lattice %.6f, visibility %.6f; deficit median %g at 1e5; stretch medians %.4f %.4f %.4f",
                lattice.value_or(NAN), visibility, deficit, med[0], med[1], med[2])};
}

Outcome appendix_integral() {
    double worst = 0.0;
    for (int d : {2, 3, 4}) {
        for (double r : {0.01, 0.1, 0.4}) {
            double total = 0.0;
            for (int j = 0; j <= d; ++j) total += region_volume(d, j, r);
            worst = std::max(worst, std::abs(total - 1.0));
        }
    }
    const double closed = inner_integral(Point{0.5, 0.5}, 0.1, 0, 0).value;
    const double mc = oracle::linear_decay_integral_mc(Point{0.5, 0.5}, 0.1, 1'000'000, 7);
    const double inner_err = std::abs(closed / mc - 1.0);

    const std::int64_t outer = 20000;
    std::vector<double> hi;
    for (std::int64_t n : {1000, 10000, 100000}) hi.push_back(estimate_In(n, 1.5, 2, outer, 11).value);
    const double lo3 = estimate_In(1000, 0.5, 2, outer, 11).value;
    const double lo4 = estimate_In(10000, 0.5, 2, outer, 11).value;
    const bool pass = worst <= 1e-12 && inner_err <= 0.01 && hi[1] < hi[0] && hi[2] < hi[1] && hi[2] < 0.2 && lo4 > lo3;
    return {pass, fmt("region sum error %.2g; interior vs MC %.4f%%; I_n(1.5): %.4g %.4g %.4g; I_n(0.5): %.4g -> %.4g",
                      worst, 100.0 * inner_err, hi[0], hi[1], hi[2], lo3, lo4)};
}

Outcome planner_completeness() {
    auto spec = base(ExperimentKind::planner, {20000}, 100);
    spec.planners = {"prm", "soft_prm"};
    spec.gamma_query_multiplier = 1.5;
    const auto out = run_experiment(spec).records;
    bool pass = true;
    std::string detail;
    for (const std::string p : {"prm", "soft_prm"}) {
        const auto success = at_n(metric(out, "success", p), 20000, 100, 0.0);
        const int ok = count_if(success, [](double x) { return x == 1.0; });
        int within = 0;
        for (const auto& [k, len] : metric(out, "path_length", p)) {
            within += len >= kToyGeodesic - 1e-9 && len <= 1.2 * kToyGeodesic;
        }
        pass = pass && ok >= 95 && within * 10 >= ok * 9;
        detail += fmt("%s: %d/100 success, %d within 1.2 geodesic; ", p.c_str(), ok, within);
    }
    return {pass, detail};
}

Outcome model_relations() {
    int violations = 0, runs = 0;
    for (int d : {2, 3}) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const PointSet pts = sample_uniform(5000, d, seed);
            const double r = connection_radius(5000, 1.5 * thresholds(d).gamma_star, d);
            const GeometricGraph disk = build_graph(pts, DiskModel{r});
            violations += !subset(build_graph(pts, SoftModel{r, LinearDecay{}, seed}), disk);
            violations += !subset(build_graph(pts, BluetoothModel{r, 3, seed}), disk);
            violations += !(build_graph(pts, SoftModel{r, ConstantPhi{1.0}, seed}) == disk);
            const PointSet few = sample_uniform(300, d, seed);
            violations += build_graph(few, EmbeddedModel{1.0, seed}).edge_count() != 300 * 299 / 2;
            violations += build_graph(few, EmbeddedModel{0.0, seed}).edge_count() != 0;
            runs += 5;
        }
    }
    return {violations == 0, fmt("%d/%d relation checks violated", violations, runs)};
}

Outcome determinism() {
    int differ = 0;
    std::string names;
    for (auto kind : {ExperimentKind::connectivity, ExperimentKind::stretch, ExperimentKind::obstacle,
                      ExperimentKind::planner, ExperimentKind::integral, ExperimentKind::calibrate}) {
        const std::string name = experiment_name(kind);
        ExperimentSpec spec = load_spec(std::string(RGGLAB_CONFIG_DIR) + "/" + name + ".json", kind);
        const std::string first = csv(run_experiment(spec).records);
        spec.threads = spec.threads == 1 ? 2 : 1;
        const std::string second = csv(run_experiment(spec).records);
        if (first != second || first.find('\n') == first.size() - 1) {
            ++differ;
            names += " " + name;
        }
    }
    return {differ == 0, differ == 0 ? std::string("all six experiment kinds byte-identical") : "differs:" + names};
}

}  // namespace

int main(int argc, char** argv) {
    set_warning_handler({});
    const std::vector<std::pair<int, Outcome (*)()>> criteria{
        {1, constants},         {2, neighbor_search},   {3, disk_transition},    {4, soft_connectivity},
        {5, bluetooth_connectivity}, {6, stretch_trend}, {7, obstacle_domain},   {8, appendix_integral},
        {9, planner_completeness},   {10, model_relations}, {11, determinism},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
    int failed = 0;
    for (const auto& [id, fn] : criteria) {
        if (!only.empty() && !only.count(id)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %2d %s  %s [%.1fs]\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
