#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rgglab/environment.hpp"
#include "rgglab/geometry.hpp"
#include "rgglab/models.hpp"

namespace rgglab {

enum class ExperimentKind { connectivity, stretch, obstacle, planner, integral, calibrate };

std::string experiment_name(ExperimentKind kind);
ExperimentKind parse_experiment(const std::string& name);

struct ModelSpec {
    std::string name = "disk";  // disk, soft, bluetooth, embedded
    PhiSpec phi = LinearDecay{};
    std::optional<int> c;       // Bluetooth fan-out; default ceil(c_multiplier * c*_n)
    double c_multiplier = 1.1;
    std::optional<double> p;    // Embedded probability; default min(1, beta (ln n)^d ln ln n / n)
    double beta = 1.0;
};

struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::connectivity;
    std::vector<int> dims{2, 3};
    std::vector<std::int64_t> n_values{1000, 10000, 100000};
    double gamma_multiplier = 1.5;  // relative to the model's own threshold constant
    std::optional<double> gamma;    // absolute constant; overrides the multiplier
    ModelSpec model;
    std::vector<std::string> planners{"prm", "soft_prm"};
    int trials = 20;
    std::uint64_t base_seed = 0;
    int threads = 1;
    std::string output;  // empty: stdout

    int stretch_vertices = 50;

    double coverage = 0.25;
    std::optional<std::string> environment_file;  // replaces the toy scenario
    std::optional<Point> start;                   // default origin
    std::optional<Point> goal;                    // default cube center
    double gamma_query_multiplier = 1.2;          // times gamma*

    std::int64_t outer_samples = 1'000'000;
    std::int64_t inner_samples = 10'000;

    int calibration_points = 100;
};

/// Throws std::invalid_argument on inconsistent specs.
void validate(const ExperimentSpec& spec);

/// JSON config; keys mirror ExperimentSpec fields (see README). Unknown keys are errors.
/// A relative environment path is resolved against `base_dir` when it is non-empty.
ExperimentSpec parse_spec(const std::string& json_text, ExperimentKind kind, const std::string& base_dir = "");
ExperimentSpec load_spec(const std::string& path, ExperimentKind kind);

struct ExperimentRecord {
    std::string experiment;
    int d = 0;
    std::int64_t n = 0;
    double gamma = 0.0;
    std::string model;
    int trial = 0;
    std::uint64_t seed = 0;
    std::string metric_name;
    double metric_value = 0.0;
};

struct ExperimentOutput {
    std::vector<ExperimentRecord> records;
    std::vector<ExperimentRecord> timings;  // wall-clock seconds; planner runs only
};

/// base_seed xor hash(d, n, trial).
std::uint64_t trial_seed(std::uint64_t base_seed, int d, std::int64_t n, int trial);

/// Runs every (d, n, trial) task of the spec on `spec.threads` workers. Record order is
/// (d, n, trial, planner) regardless of scheduling.
ExperimentOutput run_experiment(const ExperimentSpec& spec);

/// Header plus one row per record: experiment,d,n,gamma,model,trial,seed,metric_name,metric_value.
void write_csv(std::ostream& os, const std::vector<ExperimentRecord>& records);

/// (2^(d-1) / d) ln n.
double neighbor_target(std::int64_t n, int d);

/// Mean over `query_points` free query points of the distance to the ceil(nbr(n))-th
/// nearest of n uniform samples. When that rank reaches n the maximum pairwise sample
/// distance is returned instead.
double calibrate_radius(const Environment& env, std::int64_t n, std::uint64_t seed, int query_points = 100);

/// The environment an obstacle/planner/calibrate run uses in dimension d.
Environment experiment_environment(const ExperimentSpec& spec, int d);

}  // namespace rgglab
