#pragma once

#include <vector>

#include "rclab/matrix.hpp"
#include "rclab/reservoir.hpp"

namespace rclab {

struct DynamicsReport {
    double fluctuation = 0.0;   // F
    double correlation0 = 0.0;  // C at lag 0
    double correlation1 = 0.0;  // C at lag 1
    double nonlinearity = 0.0;  // alpha
};

/// Mean over neurons of the population standard deviation of each neuron's
/// activation series, concatenated across episodes without the reset state.
double fluctuation(const std::vector<EpisodeTrace>& traces);

/// <y_m(t) * y_n(t+lag)> averaged over all ordered neuron pairs (m == n
/// included) and over valid time steps within each episode; no products
/// across episode boundaries, no mean subtraction, no normalization.
double correlation(const std::vector<EpisodeTrace>& traces, int lag);

/// f_A - f_B + f_C over the activation bands [-1,-0.5), [-0.5,+0.5],
/// (+0.5,+1]. Values outside [-1,+1] (possible for linear activations)
/// count toward the total but toward no band.
double nonlinearity(const std::vector<EpisodeTrace>& traces);

/// All four measures in one pass over the traces.
DynamicsReport dynamics_report(const std::vector<EpisodeTrace>& traces);

struct PcaResult {
    Matrix projected;           // R x k
    Vector explained_variance;  // k entries, descending
    Vector explained_ratio;     // fractions of total variance
};

/// Projects mean-centered rows onto the top-k principal axes. Each axis is
/// oriented so that its largest-magnitude loading is positive.
PcaResult pca_project(const Matrix& states, int components);

}  // namespace rclab
