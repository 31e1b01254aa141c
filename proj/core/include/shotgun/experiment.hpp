#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shotgun/blocking.hpp"
#include "shotgun/generators.hpp"
#include "shotgun/jigsaw.hpp"
#include "shotgun/stats.hpp"

namespace shotgun {

enum class ModelKind { Lattice, Er, LabeledEr, Tree, Jigsaw };
enum class SweepAxis { Radius, Colors, Lambda };
enum class RunKind { Sweep, ExpectationCheck, Sampling };

const char* model_kind_name(ModelKind m);
std::optional<ModelKind> model_kind_from_name(const std::string& name);

// Declarative run description; parsed from a key = value config file and
// overridable from the CLI. The master seed plus (grid index, trial index)
// fully determine every draw, so results do not depend on thread count.
struct ExperimentConfig {
    RunKind kind = RunKind::Sweep;
    ModelKind model = ModelKind::Lattice;

    uint32_t n = 16;      // lattice/jigsaw side, tree levels
    uint32_t d = 2;       // lattice dimension
    uint32_t q = 2;       // alphabet / jig colors
    uint32_t N = 1000;    // ER vertices
    double lambda = 1.0;  // ER mean degree; p = lambda / N
    double p = -1.0;      // explicit ER edge probability, overrides lambda when >= 0
    std::vector<double> dist_weights;  // non-uniform labels when nonempty

    SweepAxis axis = SweepAxis::Radius;
    std::vector<double> grid;  // empty: auto-placed around the threshold predictions
    uint32_t radius = 1;       // fixed radius when the axis is not Radius

    double epsilon = 0.1;           // sampling failure tolerance
    std::vector<uint64_t> m_grid;   // sampling sample-count grid; empty: auto

    uint32_t trials = 100;
    uint64_t master_seed = 1;
    uint32_t threads = 1;
    DetectorSet detectors;      // zero-initialized: defaults chosen per model
    bool detectors_explicit = false;

    uint64_t iso_budget = 1u << 20;
    uint64_t memory_budget = 1ull << 26;

    double er_probability() const { return p >= 0.0 ? p : lambda / N; }
};

// Parses the "key = value" sections format (see FORMATS.md); throws
// std::invalid_argument with a message naming the offending line.
ExperimentConfig parse_config(std::istream& is);
ExperimentConfig parse_config_file(const std::string& path);

struct TrialOutcome {
    uint32_t grid_index = 0;
    uint32_t trial = 0;
    VerdictStatus status = VerdictStatus::Undetermined;
    std::string certificate;
    std::optional<BlockingWitness> witness;
    double blocking_count = 0.0;
    // jigsaw extras
    bool assembled = false;
    bool assembly_exact = false;
    std::string assembly_status;
};

struct GridPointResult {
    double axis_value = 0.0;
    uint32_t trials = 0;
    uint32_t identifiable = 0;
    uint32_t non_identifiable = 0;
    uint32_t undetermined = 0;
    double blocking_mean = 0.0;
    double blocking_se = 0.0;
    double analytic_expectation = 0.0;  // NaN when no closed form applies
    uint32_t assembled = 0;             // jigsaw only
    uint32_t ambiguous_corner = 0;      // jigsaw only
};

struct SweepResult {
    ExperimentConfig config;
    std::vector<GridPointResult> points;
    std::vector<TrialOutcome> outcomes;  // ordered by (grid index, trial)
};

SweepResult run_sweep(const ExperimentConfig& cfg);

// Deterministic CSV renderings (no timing fields; byte-stable across thread
// counts). Wall-clock diagnostics go to a side channel, never into these.
std::string sweep_to_csv(const SweepResult& result);

struct ExpectationRow {
    std::string name;
    double analytic = 0.0;
    double empirical = 0.0;
    double se = 0.0;
    double z = 0.0;
    bool is_upper_bound = false;  // pass criterion: empirical <= analytic + 3 SE
    bool pass = false;
};
std::vector<ExpectationRow> run_expectation_check(const ExperimentConfig& cfg);
std::string expectation_to_csv(const std::vector<ExpectationRow>& rows);

struct SamplingRow {
    uint64_t m = 0;
    double success = 0.0;
    uint64_t upper = 0;
    uint64_t lower = 0;
};
struct SamplingReport {
    uint64_t neighborhoods = 0;
    bool overlap_uniqueness = false;
    std::vector<SamplingRow> rows;
};
SamplingReport run_sampling_experiment(const ExperimentConfig& cfg);
std::string sampling_to_csv(const SamplingReport& report);

}  // namespace shotgun
