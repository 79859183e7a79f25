#pragma once

#include <cstdint>
#include <random>

namespace rclab {

// One splitmix64 step; advances the state and returns the next value.
std::uint64_t splitmix64(std::uint64_t& state);

/// Named random substreams of one experiment. Every structure draws from
/// its own stream derived from the root seed, so changing e.g. the dataset
/// parameters leaves the generated weight matrix bit-identical.
enum class SeedStream : std::uint64_t {
    Weights = 1,
    Biases = 2,
    InputMatrix = 3,
    Dataset = 4,
    Reset = 5,
    SweepRepeat = 6,  // base offset for per-repeat run seeds
};

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream);

std::mt19937_64 make_rng(std::uint64_t root, SeedStream stream);

}  // namespace rclab
