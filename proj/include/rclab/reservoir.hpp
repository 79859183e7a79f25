#pragma once

#include <random>
#include <vector>

#include "rclab/matrix.hpp"
#include "rclab/types.hpp"

namespace rclab {

/// Activation value for a pre-activation u. The scaling factor multiplies
/// the argument for every kind; gaussian is exp(-(scaling*u)^2) and the
/// heaviside step uses the convention Theta(0) = 0.
double activate(Activation kind, double scaling, double u);

/// Random recurrent weight matrix: entry (m, n) is the connection from
/// neuron n to neuron m, built as |normal magnitude| * density mask * sign.
Matrix build_weight_matrix(const ReservoirParams& params, std::mt19937_64& rng);

/// Masks a weight matrix down to the requested connectivity. `AutapseOnly`
/// keeps the diagonal; `NeuralLoop` keeps only the successor links
/// n -> (n+1) mod N, i.e. entries ((n+1) mod N, n).
Matrix apply_topology(Matrix weights, Topology topology);

Vector build_biases(const ReservoirParams& params, std::mt19937_64& rng);

struct InputMatrix {
    Matrix weights;  // neurons x inputs
    InputVariant variant = InputVariant::Sparse;
    double scale = 1.0;

    int inputs() const { return static_cast<int>(weights.cols()); }
};

/// Dense: i.i.d. N(0, scale) entries. Sparse: input m feeds neuron m with
/// weight `scale`; requires inputs <= neurons.
InputMatrix build_input_matrix(InputVariant variant, int neurons, int inputs, double scale,
                               std::mt19937_64& rng);

struct Reservoir {
    Matrix weights;  // N x N
    Vector biases;   // N
    ReservoirParams params;

    int size() const { return static_cast<int>(weights.rows()); }

    /// One synchronous update from `state` with input vector `x`:
    /// y_m = f(bias_m + sum_n I_mn x_n + sum_n W_mn state_n).
    Vector step(const InputMatrix& input, const Vector& state, const Vector& x) const;
};

/// Draws weights and biases from independent streams derived from
/// params.seed and applies the topology mask.
Reservoir build_reservoir(const ReservoirParams& params);

/// Episode-start state. Drawn once per experiment (uniform mode) or all
/// zeros; the same vector is reused at the start of every episode.
Vector make_reset_state(const ReservoirParams& params, std::mt19937_64& rng);

/// Episode clock. Input slot k is presented during the update that produces
/// state k+1, so a vector injected at slot 0 first appears in state 1.
/// Slots at or beyond input_len carry zero vectors (free-running phase).
struct EpisodeTiming {
    int input_len = 1;      // number of input slots
    int total_steps = 1;    // states 1..total_steps are computed
    int readout_delay = 0;  // states skipped before the readout window
    int readout_len = 1;    // readout window length

    void validate() const;  // throws ConfigError
};

struct EpisodeTrace {
    Matrix states;  // (total_steps + 1) x N; row 0 is the reset state
    Matrix inputs;  // input_len x M
    EpisodeTiming timing;

    int steps() const { return timing.total_steps; }
    int neurons() const { return static_cast<int>(states.cols()); }

    // States the readout consumes: rows readout_delay+1 .. readout_delay+readout_len.
    Matrix readout_states() const;
};

EpisodeTrace run_episode(const Reservoir& reservoir, const InputMatrix& input,
                         const Matrix& inputs, const EpisodeTiming& timing,
                         const Vector& reset_state);

/// Batch episode driver. Episodes are independent given the fixed reset
/// state and run in parallel; results are stored in episode order, so the
/// output is identical to the serial reference for any thread count.
std::vector<EpisodeTrace> run_episodes(const Reservoir& reservoir, const InputMatrix& input,
                                       const std::vector<Matrix>& inputs,
                                       const EpisodeTiming& timing, const Vector& reset_state);

}  // namespace rclab
