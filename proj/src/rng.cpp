#include "rclab/rng.hpp"

namespace rclab {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) {
    std::uint64_t state = root ^ (stream * 0xD6E8FEB86659FD93ULL);
    splitmix64(state);
    return splitmix64(state);
}

std::mt19937_64 make_rng(std::uint64_t root, SeedStream stream) {
    return std::mt19937_64(derive_seed(root, static_cast<std::uint64_t>(stream)));
}

}  // namespace rclab
