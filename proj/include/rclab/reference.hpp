#pragma once

#include <vector>

#include "rclab/metrics.hpp"
#include "rclab/reservoir.hpp"

// Plain single-threaded implementations of the batch kernels. They define
// the semantics the parallel versions must reproduce; the unit tests and
// the benchmark tool compare against them. The correlation reference walks
// every ordered neuron pair literally instead of using the row-sum
// factorization.
namespace rclab::ref {

std::vector<EpisodeTrace> run_episodes(const Reservoir& reservoir, const InputMatrix& input,
                                       const std::vector<Matrix>& inputs,
                                       const EpisodeTiming& timing, const Vector& reset_state);

double fluctuation(const std::vector<EpisodeTrace>& traces);
double correlation(const std::vector<EpisodeTrace>& traces, int lag);
double nonlinearity(const std::vector<EpisodeTrace>& traces);

}  // namespace rclab::ref
