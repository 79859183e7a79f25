#include "rclab/reference.hpp"

#include <cmath>

namespace rclab::ref {

std::vector<EpisodeTrace> run_episodes(const Reservoir& reservoir, const InputMatrix& input,
                                       const std::vector<Matrix>& inputs,
                                       const EpisodeTiming& timing, const Vector& reset_state) {
    std::vector<EpisodeTrace> traces;
    traces.reserve(inputs.size());
    for (const Matrix& episode : inputs) {
        traces.push_back(run_episode(reservoir, input, episode, timing, reset_state));
    }
    return traces;
}

double fluctuation(const std::vector<EpisodeTrace>& traces) {
    if (traces.empty()) throw ConfigError("metrics: empty trace set");
    const Eigen::Index neurons = traces.front().states.cols();

    double acc = 0.0;
    for (Eigen::Index n = 0; n < neurons; ++n) {
        std::vector<double> series;
        for (const EpisodeTrace& trace : traces) {
            for (Eigen::Index t = 1; t < trace.states.rows(); ++t) {
                series.push_back(trace.states(t, n));
            }
        }
        double mean = 0.0;
        for (double y : series) mean += y;
        mean /= static_cast<double>(series.size());
        double variance = 0.0;
        for (double y : series) variance += (y - mean) * (y - mean);
        variance /= static_cast<double>(series.size());
        acc += std::sqrt(variance);
    }
    return acc / static_cast<double>(neurons);
}

double correlation(const std::vector<EpisodeTrace>& traces, int lag) {
    if (traces.empty()) throw ConfigError("metrics: empty trace set");
    const Eigen::Index neurons = traces.front().states.cols();

    double sum = 0.0;
    long count = 0;
    for (const EpisodeTrace& trace : traces) {
        const Eigen::Index steps = trace.states.rows() - 1;
        if (steps < lag + 1) throw ConfigError("correlation: episode shorter than lag + 1");
        for (Eigen::Index t = 1; t + lag <= steps; ++t) {
            for (Eigen::Index m = 0; m < neurons; ++m) {
                for (Eigen::Index n = 0; n < neurons; ++n) {
                    sum += trace.states(t, m) * trace.states(t + lag, n);
                }
            }
            ++count;
        }
    }
    return sum / (static_cast<double>(count) * static_cast<double>(neurons) *
                  static_cast<double>(neurons));
}

double nonlinearity(const std::vector<EpisodeTrace>& traces) {
    if (traces.empty()) throw ConfigError("metrics: empty trace set");
    long low = 0, mid = 0, high = 0, total = 0;
    for (const EpisodeTrace& trace : traces) {
        for (Eigen::Index t = 1; t < trace.states.rows(); ++t) {
            for (Eigen::Index n = 0; n < trace.states.cols(); ++n) {
                const double y = trace.states(t, n);
                ++total;
                if (y >= -1.0 && y < -0.5) ++low;
                else if (y >= -0.5 && y <= 0.5) ++mid;
                else if (y > 0.5 && y <= 1.0) ++high;
            }
        }
    }
    return (static_cast<double>(low) - static_cast<double>(mid) + static_cast<double>(high)) /
           static_cast<double>(total);
}

}  // namespace rclab::ref
