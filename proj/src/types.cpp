#include "rclab/types.hpp"

namespace rclab {

std::string to_string(Activation kind) {
    switch (kind) {
        case Activation::Tanh: return "tanh";
        case Activation::Linear: return "linear";
        case Activation::Gaussian: return "gaussian";
        case Activation::Sin: return "sin";
        case Activation::Heaviside: return "heaviside";
    }
    return "?";
}

std::string to_string(Topology topology) {
    switch (topology) {
        case Topology::Standard: return "standard";
        case Topology::AutapseOnly: return "autapse_only";
        case Topology::NeuralLoop: return "neural_loop";
    }
    return "?";
}

std::string to_string(ResetMode mode) {
    return mode == ResetMode::Zero ? "zero" : "uniform_random";
}

std::string to_string(InputVariant variant) {
    return variant == InputVariant::Dense ? "dense" : "sparse";
}

Activation parse_activation(const std::string& name) {
    if (name == "tanh") return Activation::Tanh;
    if (name == "linear") return Activation::Linear;
    if (name == "gaussian") return Activation::Gaussian;
    if (name == "sin") return Activation::Sin;
    if (name == "heaviside") return Activation::Heaviside;
    throw ConfigError("unknown activation: " + name);
}

Topology parse_topology(const std::string& name) {
    if (name == "standard") return Topology::Standard;
    if (name == "autapse_only") return Topology::AutapseOnly;
    if (name == "neural_loop") return Topology::NeuralLoop;
    throw ConfigError("unknown topology: " + name);
}

ResetMode parse_reset_mode(const std::string& name) {
    if (name == "zero") return ResetMode::Zero;
    if (name == "uniform_random") return ResetMode::UniformRandom;
    throw ConfigError("unknown reset mode: " + name);
}

InputVariant parse_input_variant(const std::string& name) {
    if (name == "dense") return InputVariant::Dense;
    if (name == "sparse") return InputVariant::Sparse;
    throw ConfigError("unknown input variant: " + name);
}

void ReservoirParams::validate() const {
    if (neurons < 1) throw ConfigError("reservoir: neurons must be >= 1");
    if (density < 0.0 || density > 1.0) throw ConfigError("reservoir: density must be in [0, 1]");
    if (balance < -1.0 || balance > 1.0) throw ConfigError("reservoir: balance must be in [-1, +1]");
    if (coupling < 0.0) throw ConfigError("reservoir: coupling must be >= 0");
    if (bias_std < 0.0) throw ConfigError("reservoir: bias_std must be >= 0");
    if (!(scaling > 0.0)) throw ConfigError("reservoir: scaling must be > 0");
}

}  // namespace rclab
