#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rclab/matrix.hpp"
#include "rclab/types.hpp"

namespace rclab::tasks {

enum class TaskKind {
    SequenceMemorization,   // smt
    PatchesClassification,  // pct
    CaPrediction,           // cat
    SequenceGeneration,     // sgt
};

std::string to_string(TaskKind kind);
TaskKind parse_task_kind(const std::string& name);

/// Random balanced checkerboard over [-1,+1]^2: patches_per_side^2 square
/// patches, each class assigned to exactly patches_per_side^2 / classes of
/// them. Interior patch borders carry data-free gap bands of total width
/// `gap`; the outer border has no gap.
struct PatchGrid {
    int patches_per_side = 6;
    int classes = 2;
    double gap = 0.1;
    std::vector<int> labels;  // row-major patch labels

    int label_at(double x0, double x1) const;
    bool in_gap(double x0, double x1) const;
};

/// Elementary cellular automaton state; cells outside the vector are fixed
/// at zero.
struct CaState {
    std::vector<std::uint8_t> cells;

    bool operator==(const CaState&) const = default;
};

/// One update under the Wolfram rule: cell i looks at (left, self, right)
/// and takes bit (left<<2 | self<<1 | right) of the rule number.
CaState ca_step(const CaState& state, int rule);

struct UniquenessCounts {
    int train_only = 0;
    int test_only = 0;
};

struct TaskDataset {
    TaskKind kind = TaskKind::SequenceMemorization;
    int input_len = 1;      // TI
    int readout_len = 1;    // TO
    int input_dim = 1;      // M
    int output_dim = 1;     // K
    int readout_delay = 0;  // task-default delay

    std::vector<Matrix> train_inputs;   // input_len x input_dim each
    std::vector<Matrix> test_inputs;
    std::vector<Matrix> train_targets;  // readout_len x output_dim each
    std::vector<Matrix> test_targets;
    std::vector<int> train_labels;      // classification / generation classes
    std::vector<int> test_labels;

    PatchGrid grid;      // PatchesClassification only
    int ca_rule = -1;    // CaPrediction only
    Matrix prototypes;   // SequenceGeneration: classes x input_dim
};

/// Delayed autoencoding: inputs are uniform in [-1,+1], the target sequence
/// is the input sequence itself.
TaskDataset gen_smt(int input_len, int input_dim, int episodes, std::mt19937_64& rng,
                    int readout_delay = 5);

/// 2-D points classified by a random balanced patch grid; samples inside
/// gap bands are rejected. Targets are one-hot class scores.
TaskDataset gen_pct(int patches_per_side, int classes, double gap, int episodes,
                    std::mt19937_64& rng);

/// Cellular-automaton successor prediction: initial states drawn uniformly
/// (with replacement) from all 2^cells configurations, encoded as +-1.
TaskDataset gen_cat(int cells, int rule, int train_episodes, int test_episodes,
                    std::mt19937_64& rng);

/// Class-conditioned sequence generation: noisy prototype input, fixed
/// random target sequence per class.
TaskDataset gen_sgt(int classes, double sigma, int input_dim, int readout_len, int output_dim,
                    int episodes, std::mt19937_64& rng);

/// A = 1 / (1 + rms_error / target_std) over all output elements of all
/// episodes; target_std is the population standard deviation of all target
/// values. Throws NumericError when the targets are constant.
double rms_accuracy(const std::vector<Matrix>& outputs, const std::vector<Matrix>& targets);

double classification_accuracy(const std::vector<int>& predicted, const std::vector<int>& labels);

/// Fraction of output rows matching the target row exactly in every component.
double exact_match_accuracy(const std::vector<Matrix>& outputs, const std::vector<Matrix>& targets);

/// CA-state bookkeeping: how many distinct initial states appear only in
/// the training split and only in the test split.
UniquenessCounts split_uniqueness(const TaskDataset& dataset);

void save_dataset(const TaskDataset& dataset, const std::string& path);
TaskDataset load_dataset(const std::string& path);

}  // namespace rclab::tasks
