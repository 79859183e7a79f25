#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rclab/matrix.hpp"
#include "rclab/metrics.hpp"
#include "rclab/readout.hpp"
#include "rclab/tasks.hpp"
#include "rclab/types.hpp"

namespace rclab::harness {

struct InputConfig {
    InputVariant variant = InputVariant::Sparse;
    double scale = 1.0;
};

/// Task parameters; -1 fields fall back to the task defaults resolved by
/// `resolve_task`.
struct TaskConfig {
    tasks::TaskKind kind = tasks::TaskKind::SequenceMemorization;
    int train_episodes = -1;
    int test_episodes = -1;
    int delay = -1;
    int input_len = -1;
    int input_dim = -1;
    int readout_len = -1;
    int output_dim = -1;
    int patches = 6;     // pct
    int classes = -1;    // pct: class count; sgt: prototype count
    double gap = 0.1;    // pct
    int cells = 10;      // cat
    int rule = 110;      // cat
    double sigma = 0.1;  // sgt
};

/// Recognized sweep parameters: w, s, N, delay, activation, topology,
/// input_variant, rule, train_episodes. Values are kept as raw tokens and
/// parsed per axis.
struct SweepAxis {
    std::string parameter;
    std::vector<std::string> values;
    int repeats = 1;
};

struct OutputConfig {
    std::string directory = "out";
    bool pca = false;
    int pca_episodes = 500;
};

/// Probe protocol: per episode the first input_dim neurons receive one
/// random input vector, then the reservoir runs freely up to `steps`.
struct DynamicsConfig {
    int episodes = 1000;
    int input_dim = 10;
    int steps = 11;
    std::vector<double> couplings;
};

struct ExperimentConfig {
    std::uint64_t seed = 42;
    int max_episodes = 0;  // > 0 caps both splits
    ReservoirParams reservoir;
    bool scale_with_n = true;  // effective coupling = reservoir.coupling / sqrt(N)
    InputConfig input;
    TaskConfig task;
    std::optional<SweepAxis> sweep;
    OutputConfig output;
    DynamicsConfig dynamics;

    double effective_coupling() const;
};

struct RunReport {
    std::string sweep_value;  // empty for single runs
    int repeat = 0;
    std::uint64_t seed = 0;
    double accuracy = 0.0;
    DynamicsReport dynamics;
    double wall_ms = 0.0;
    int unique_train_states = -1;  // CA prediction only
    int unique_test_states = -1;
};

struct PcaRow {
    double pc1 = 0.0;
    double pc2 = 0.0;
    int label = -1;
    int episode = 0;
};

/// Extra outputs of a single run that do not belong in the report table.
struct RunArtifacts {
    ReadoutLayer readout;
    std::vector<PcaRow> pca;
};

/// Builds reservoir, input matrix and dataset from independent seed
/// streams, trains the readout on the training split and scores the test
/// split. Dynamics are measured over the test traces. An episode length of
/// one leaves the lag-1 correlation without valid products; it is reported
/// as zero in that case.
RunReport run_experiment(const ExperimentConfig& config, std::uint64_t seed,
                         RunArtifacts* artifacts = nullptr,
                         const tasks::TaskDataset* fixed_dataset = nullptr);

/// Per-repeat run seeds are derived from the root seed and the repeat index
/// only, so runs at different sweep values are seed-matched point by point.
std::uint64_t sweep_run_seed(std::uint64_t root, int repeat);

struct SweepResult {
    std::vector<RunReport> runs;  // value-major, repeat-minor order
};

SweepResult run_sweep(const ExperimentConfig& config);

struct DynamicsPoint {
    double coupling = 0.0;
    DynamicsReport report;
};

/// Fig-style dynamics scan: no readout; runs the probe protocol over
/// config.dynamics.couplings and reports the four measures per point.
std::vector<DynamicsPoint> dynamics_probe(const ExperimentConfig& config);

// --- configuration files ------------------------------------------------

/// Section -> key -> raw value. The key=value text format and the JSON
/// format both parse into this map.
using ConfigMap = std::map<std::string, std::map<std::string, std::string>>;

ConfigMap parse_config_text(const std::string& text);
ConfigMap parse_config_json(const std::string& text);

/// Applies a "section.key=value" override.
void set_key(ConfigMap& map, const std::string& assignment);

/// Validates sections/keys and builds the typed config. Unknown keys are
/// configuration errors.
ExperimentConfig build_config(const ConfigMap& map);

ExperimentConfig load_config(const std::string& path,
                             const std::vector<std::string>& overrides = {});

// --- result serialization -------------------------------------------------

/// Shortest decimal text that parses back to exactly the same double.
std::string format_double(double value);

/// Fixed column order: sweep_value,repeat,seed,A,F,C0,C1,alpha.
std::string report_csv(const std::vector<RunReport>& runs);

/// Per-sweep-value aggregation (mean plus min/max of A).
std::string summary_csv(const std::vector<RunReport>& runs);

std::string dynamics_csv(const std::vector<DynamicsPoint>& points);

/// Columns pc1,pc2,class,episode.
std::string pca_csv(const std::vector<PcaRow>& rows);

/// JSON bundle with the full config echo and all reports; optionally the
/// trained readout layer.
std::string bundle_json(const ExperimentConfig& config, const std::vector<RunReport>& runs,
                        const RunArtifacts* artifacts = nullptr);

/// Reads the reports back out of a bundle; lossless for every numeric field.
std::vector<RunReport> reports_from_bundle(const std::string& json_text);

void write_file(const std::string& path, const std::string& content);

}  // namespace rclab::harness
