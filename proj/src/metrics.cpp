#include "rclab/metrics.hpp"

#include <cmath>
#include <cstdint>

#include <Eigen/SVD>

namespace rclab {

namespace {

// Partial sums of one episode over the states tau = 1..T. Partials are
// merged in episode order, which keeps every metric independent of the
// thread count.
struct EpisodeStats {
    Vector sum;     // per neuron
    Vector sum_sq;  // per neuron
    long samples = 0;
    double lag0 = 0.0;
    long lag0_count = 0;
    double lag1 = 0.0;
    long lag1_count = 0;
    long band_low = 0;
    long band_mid = 0;
    long band_high = 0;
};

void check_traces(const std::vector<EpisodeTrace>& traces) {
    if (traces.empty()) throw ConfigError("metrics: empty trace set");
    const Eigen::Index neurons = traces.front().states.cols();
    for (const EpisodeTrace& trace : traces) {
        if (trace.states.cols() != neurons)
            throw ConfigError("metrics: traces disagree on neuron count");
        if (trace.states.rows() < 2) throw ConfigError("metrics: trace holds no states");
    }
}

EpisodeStats episode_stats(const EpisodeTrace& trace) {
    const int steps = static_cast<int>(trace.states.rows()) - 1;
    const Eigen::Index neurons = trace.states.cols();

    EpisodeStats stats;
    stats.sum = Vector::Zero(neurons);
    stats.sum_sq = Vector::Zero(neurons);
    stats.samples = steps;

    Vector row_sums(steps + 1);
    for (int t = 1; t <= steps; ++t) {
        double row_sum = 0.0;
        for (Eigen::Index n = 0; n < neurons; ++n) {
            const double y = trace.states(t, n);
            stats.sum(n) += y;
            stats.sum_sq(n) += y * y;
            row_sum += y;
            if (y >= -1.0 && y < -0.5) {
                ++stats.band_low;
            } else if (y >= -0.5 && y <= 0.5) {
                ++stats.band_mid;
            } else if (y > 0.5 && y <= 1.0) {
                ++stats.band_high;
            }
        }
        row_sums(t) = row_sum;
    }

    // sum_{m,n} y_m(t) y_n(t+lag) factorizes into the product of row sums.
    for (int t = 1; t <= steps; ++t) {
        stats.lag0 += row_sums(t) * row_sums(t);
        ++stats.lag0_count;
        if (t + 1 <= steps) {
            stats.lag1 += row_sums(t) * row_sums(t + 1);
            ++stats.lag1_count;
        }
    }
    return stats;
}

EpisodeStats collect_stats(const std::vector<EpisodeTrace>& traces) {
    const std::int64_t count = static_cast<std::int64_t>(traces.size());
    std::vector<EpisodeStats> partials(traces.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < count; ++i) partials[i] = episode_stats(traces[i]);

    EpisodeStats total = std::move(partials.front());
    for (std::size_t i = 1; i < partials.size(); ++i) {
        const EpisodeStats& p = partials[i];
        total.sum += p.sum;
        total.sum_sq += p.sum_sq;
        total.samples += p.samples;
        total.lag0 += p.lag0;
        total.lag0_count += p.lag0_count;
        total.lag1 += p.lag1;
        total.lag1_count += p.lag1_count;
        total.band_low += p.band_low;
        total.band_mid += p.band_mid;
        total.band_high += p.band_high;
    }
    return total;
}

double fluctuation_from(const EpisodeStats& stats) {
    const Eigen::Index neurons = stats.sum.size();
    const double count = static_cast<double>(stats.samples);
    double acc = 0.0;
    for (Eigen::Index n = 0; n < neurons; ++n) {
        const double mean = stats.sum(n) / count;
        const double variance = std::max(0.0, stats.sum_sq(n) / count - mean * mean);
        acc += std::sqrt(variance);
    }
    return acc / static_cast<double>(neurons);
}

double nonlinearity_from(const EpisodeStats& stats) {
    const double total = static_cast<double>(stats.samples) * static_cast<double>(stats.sum.size());
    const double f_low = static_cast<double>(stats.band_low) / total;
    const double f_mid = static_cast<double>(stats.band_mid) / total;
    const double f_high = static_cast<double>(stats.band_high) / total;
    return f_low - f_mid + f_high;
}

}  // namespace

double fluctuation(const std::vector<EpisodeTrace>& traces) {
    check_traces(traces);
    return fluctuation_from(collect_stats(traces));
}

double correlation(const std::vector<EpisodeTrace>& traces, int lag) {
    check_traces(traces);
    if (lag < 0 || lag > 1) throw ConfigError("correlation: lag must be 0 or 1");
    for (const EpisodeTrace& trace : traces) {
        if (trace.states.rows() - 1 < lag + 1)
            throw ConfigError("correlation: episode shorter than lag + 1");
    }
    const EpisodeStats stats = collect_stats(traces);
    const double pairs = static_cast<double>(stats.sum.size()) * static_cast<double>(stats.sum.size());
    if (lag == 0) return stats.lag0 / (static_cast<double>(stats.lag0_count) * pairs);
    return stats.lag1 / (static_cast<double>(stats.lag1_count) * pairs);
}

double nonlinearity(const std::vector<EpisodeTrace>& traces) {
    check_traces(traces);
    return nonlinearity_from(collect_stats(traces));
}

DynamicsReport dynamics_report(const std::vector<EpisodeTrace>& traces) {
    check_traces(traces);
    const EpisodeStats stats = collect_stats(traces);
    const double pairs = static_cast<double>(stats.sum.size()) * static_cast<double>(stats.sum.size());

    DynamicsReport report;
    report.fluctuation = fluctuation_from(stats);
    report.correlation0 = stats.lag0 / (static_cast<double>(stats.lag0_count) * pairs);
    // Single-state episodes contribute no lag-1 products; with none at all
    // the unnormalized correlation is reported as zero.
    report.correlation1 =
        stats.lag1_count > 0 ? stats.lag1 / (static_cast<double>(stats.lag1_count) * pairs) : 0.0;
    report.nonlinearity = nonlinearity_from(stats);
    return report;
}

PcaResult pca_project(const Matrix& states, int components) {
    const Eigen::Index rows = states.rows();
    const Eigen::Index cols = states.cols();
    if (rows < 2) throw ConfigError("pca_project: need at least two states");
    if (components < 1 || components > std::min(rows, cols))
        throw ConfigError("pca_project: invalid component count");

    const Eigen::RowVectorXd mean = states.colwise().mean();
    Matrix centered = states;
    centered.rowwise() -= mean;

    Eigen::BDCSVD<Matrix> svd(centered, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Matrix axes = svd.matrixV().leftCols(components);

    // Orient each axis so its largest-magnitude loading is positive.
    for (int c = 0; c < components; ++c) {
        Eigen::Index strongest = 0;
        axes.col(c).cwiseAbs().maxCoeff(&strongest);
        if (axes(strongest, c) < 0.0) axes.col(c) = -axes.col(c);
    }

    PcaResult result;
    result.projected = centered * axes;
    result.explained_variance.resize(components);
    for (int c = 0; c < components; ++c) {
        const double sv = svd.singularValues()(c);
        result.explained_variance(c) = sv * sv / static_cast<double>(rows);
    }
    const double total = centered.squaredNorm() / static_cast<double>(rows);
    result.explained_ratio.resize(components);
    for (int c = 0; c < components; ++c) {
        result.explained_ratio(c) = total > 0.0 ? result.explained_variance(c) / total : 0.0;
    }
    return result;
}

}  // namespace rclab
