#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rclab {

// Invalid parameters, malformed configs, dimension mismatches.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation received or produced unusable numbers.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Activation { Tanh, Linear, Gaussian, Sin, Heaviside };
enum class Topology { Standard, AutapseOnly, NeuralLoop };
enum class ResetMode { Zero, UniformRandom };
enum class InputVariant { Dense, Sparse };

std::string to_string(Activation kind);
std::string to_string(Topology topology);
std::string to_string(ResetMode mode);
std::string to_string(InputVariant variant);

Activation parse_activation(const std::string& name);
Topology parse_topology(const std::string& name);
ResetMode parse_reset_mode(const std::string& name);
InputVariant parse_input_variant(const std::string& name);

/// Full generative description of a reservoir. `coupling` is the standard
/// deviation of the recurrent weight magnitudes, `balance` shifts the sign
/// probability to (1+balance)/2 positive, and `scaling` multiplies the
/// argument of the activation function.
struct ReservoirParams {
    int neurons = 50;
    double density = 1.0;
    double balance = 0.0;
    double coupling = 0.3 / std::sqrt(50.0);
    double bias_std = 0.1;
    Activation activation = Activation::Tanh;
    double scaling = 1.0;
    Topology topology = Topology::Standard;
    ResetMode reset_mode = ResetMode::Zero;
    std::uint64_t seed = 0;

    void validate() const;  // throws ConfigError
};

}  // namespace rclab
