#include "rclab/reservoir.hpp"

#include <cmath>
#include <cstdint>

#include "rclab/rng.hpp"

namespace rclab {

double activate(Activation kind, double scaling, double u) {
    const double v = scaling * u;
    switch (kind) {
        case Activation::Tanh: return std::tanh(v);
        case Activation::Linear: return v;
        case Activation::Gaussian: return std::exp(-v * v);
        case Activation::Sin: return std::sin(v);
        case Activation::Heaviside: return v > 0.0 ? 1.0 : 0.0;
    }
    return 0.0;
}

namespace {

void apply_activation(const ReservoirParams& params, Vector& values) {
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        values(i) = activate(params.activation, params.scaling, values(i));
    }
}

}  // namespace

Matrix build_weight_matrix(const ReservoirParams& params, std::mt19937_64& rng) {
    params.validate();
    const int n = params.neurons;

    // Standard normals scaled by the coupling strength, so the sparsity and
    // sign patterns stay bit-identical when only the coupling changes.
    Matrix magnitudes(n, n);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int m = 0; m < n; ++m)
        for (int c = 0; c < n; ++c) magnitudes(m, c) = std::abs(normal(rng)) * params.coupling;

    Matrix mask(n, n);
    std::bernoulli_distribution nonzero(params.density);
    for (int m = 0; m < n; ++m)
        for (int c = 0; c < n; ++c) mask(m, c) = nonzero(rng) ? 1.0 : 0.0;

    Matrix sign(n, n);
    std::bernoulli_distribution positive((1.0 + params.balance) / 2.0);
    for (int m = 0; m < n; ++m)
        for (int c = 0; c < n; ++c) sign(m, c) = positive(rng) ? 1.0 : -1.0;

    return magnitudes.cwiseProduct(mask).cwiseProduct(sign);
}

Matrix apply_topology(Matrix weights, Topology topology) {
    const Eigen::Index n = weights.rows();
    switch (topology) {
        case Topology::Standard:
            return weights;
        case Topology::AutapseOnly: {
            Matrix masked = Matrix::Zero(n, n);
            masked.diagonal() = weights.diagonal();
            return masked;
        }
        case Topology::NeuralLoop: {
            Matrix masked = Matrix::Zero(n, n);
            for (Eigen::Index src = 0; src < n; ++src) {
                const Eigen::Index dst = (src + 1) % n;
                masked(dst, src) = weights(dst, src);
            }
            return masked;
        }
    }
    return weights;
}

Vector build_biases(const ReservoirParams& params, std::mt19937_64& rng) {
    params.validate();
    Vector biases(params.neurons);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int i = 0; i < params.neurons; ++i) biases(i) = normal(rng) * params.bias_std;
    return biases;
}

InputMatrix build_input_matrix(InputVariant variant, int neurons, int inputs, double scale,
                               std::mt19937_64& rng) {
    if (neurons < 1) throw ConfigError("input matrix: neurons must be >= 1");
    if (inputs < 1) throw ConfigError("input matrix: inputs must be >= 1");
    InputMatrix result;
    result.variant = variant;
    result.scale = scale;
    if (variant == InputVariant::Dense) {
        result.weights.resize(neurons, inputs);
        std::normal_distribution<double> normal(0.0, 1.0);
        for (int m = 0; m < neurons; ++m)
            for (int c = 0; c < inputs; ++c) result.weights(m, c) = normal(rng) * scale;
    } else {
        if (inputs > neurons)
            throw ConfigError("sparse input matrix requires inputs <= neurons");
        result.weights = Matrix::Zero(neurons, inputs);
        for (int m = 0; m < inputs; ++m) result.weights(m, m) = scale;
    }
    return result;
}

Vector Reservoir::step(const InputMatrix& input, const Vector& state, const Vector& x) const {
    if (state.size() != size()) throw ConfigError("step: state size mismatch");
    if (input.weights.rows() != size()) throw ConfigError("step: input matrix row mismatch");
    if (x.size() != input.weights.cols()) throw ConfigError("step: input vector size mismatch");
    Vector pre = biases;
    pre.noalias() += input.weights * x;
    pre.noalias() += weights * state;
    apply_activation(params, pre);
    return pre;
}

Reservoir build_reservoir(const ReservoirParams& params) {
    params.validate();
    Reservoir reservoir;
    reservoir.params = params;
    auto weights_rng = make_rng(params.seed, SeedStream::Weights);
    reservoir.weights = apply_topology(build_weight_matrix(params, weights_rng), params.topology);
    auto bias_rng = make_rng(params.seed, SeedStream::Biases);
    reservoir.biases = build_biases(params, bias_rng);
    return reservoir;
}

Vector make_reset_state(const ReservoirParams& params, std::mt19937_64& rng) {
    if (params.reset_mode == ResetMode::Zero) return Vector::Zero(params.neurons);
    Vector state(params.neurons);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    for (int i = 0; i < params.neurons; ++i) state(i) = uniform(rng);
    return state;
}

void EpisodeTiming::validate() const {
    if (input_len < 0) throw ConfigError("episode timing: input_len must be >= 0");
    if (readout_delay < 0) throw ConfigError("episode timing: readout_delay must be >= 0");
    if (readout_len < 1) throw ConfigError("episode timing: readout_len must be >= 1");
    if (total_steps < readout_delay + readout_len)
        throw ConfigError("episode timing: total_steps must cover readout_delay + readout_len");
    if (input_len > total_steps)
        throw ConfigError("episode timing: input_len must not exceed total_steps");
}

Matrix EpisodeTrace::readout_states() const {
    return states.middleRows(timing.readout_delay + 1, timing.readout_len);
}

EpisodeTrace run_episode(const Reservoir& reservoir, const InputMatrix& input,
                         const Matrix& inputs, const EpisodeTiming& timing,
                         const Vector& reset_state) {
    timing.validate();
    if (inputs.rows() != timing.input_len) throw ConfigError("run_episode: input row mismatch");
    if (inputs.cols() != input.weights.cols())
        throw ConfigError("run_episode: input width mismatch");
    if (reset_state.size() != reservoir.size())
        throw ConfigError("run_episode: reset state size mismatch");

    EpisodeTrace trace;
    trace.timing = timing;
    trace.inputs = inputs;
    trace.states.resize(timing.total_steps + 1, reservoir.size());
    trace.states.row(0) = reset_state.transpose();

    const Vector zero = Vector::Zero(input.weights.cols());
    Vector state = reset_state;
    for (int step = 1; step <= timing.total_steps; ++step) {
        const int slot = step - 1;
        if (slot < timing.input_len) {
            state = reservoir.step(input, state, inputs.row(slot).transpose());
        } else {
            state = reservoir.step(input, state, zero);
        }
        trace.states.row(step) = state.transpose();
    }
    return trace;
}

std::vector<EpisodeTrace> run_episodes(const Reservoir& reservoir, const InputMatrix& input,
                                       const std::vector<Matrix>& inputs,
                                       const EpisodeTiming& timing, const Vector& reset_state) {
    timing.validate();
    for (const Matrix& episode : inputs) {
        if (episode.rows() != timing.input_len || episode.cols() != input.weights.cols())
            throw ConfigError("run_episodes: episode input shape mismatch");
    }
    if (reset_state.size() != reservoir.size())
        throw ConfigError("run_episodes: reset state size mismatch");

    std::vector<EpisodeTrace> traces(inputs.size());
    const std::int64_t count = static_cast<std::int64_t>(inputs.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < count; ++i) {
        traces[i] = run_episode(reservoir, input, inputs[i], timing, reset_state);
    }
    return traces;
}

}  // namespace rclab
