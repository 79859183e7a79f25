#include "rclab/readout.hpp"

#include <limits>

#include <Eigen/SVD>

namespace rclab {

Matrix pseudoinverse(const Matrix& a) {
    if (a.rows() < 1 || a.cols() < 1) throw ConfigError("pseudoinverse: empty matrix");
    if (!a.allFinite()) throw NumericError("pseudoinverse: non-finite input");

    Eigen::BDCSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Vector& sv = svd.singularValues();
    const double cutoff = static_cast<double>(std::max(a.rows(), a.cols())) *
                          std::numeric_limits<double>::epsilon() * (sv.size() > 0 ? sv(0) : 0.0);
    Vector inverted = Vector::Zero(sv.size());
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) inverted(i) = 1.0 / sv(i);
    }
    return svd.matrixV() * inverted.asDiagonal() * svd.matrixU().transpose();
}

Vector ReadoutLayer::apply(const Vector& state) const {
    if (state.size() != weights.cols()) throw ConfigError("readout: state size mismatch");
    return biases + weights * state;
}

Matrix ReadoutLayer::apply_rows(const Matrix& states) const {
    if (states.cols() != weights.cols()) throw ConfigError("readout: state width mismatch");
    Matrix scores = states * weights.transpose();
    scores.rowwise() += biases.transpose();
    return scores;
}

ReadoutLayer train_readout(const TrainingBatch& batch) {
    const Eigen::Index rows = batch.states.rows();
    if (rows < 1) throw ConfigError("train_readout: empty training batch");
    if (batch.targets.rows() != rows)
        throw ConfigError("train_readout: states and targets disagree on row count");

    const Eigen::Index n = batch.states.cols();
    Matrix with_bias(rows, n + 1);
    with_bias.leftCols(n) = batch.states;
    with_bias.col(n).setOnes();

    // (N+1) x K solution; the first N rows are the readout weights and the
    // last row holds the biases.
    const Matrix solution = pseudoinverse(with_bias) * batch.targets;

    ReadoutLayer layer;
    layer.weights = solution.topRows(n).transpose();
    layer.biases = solution.row(n).transpose();
    return layer;
}

Vector binarize(const Vector& scores) {
    Vector result(scores.size());
    for (Eigen::Index i = 0; i < scores.size(); ++i) result(i) = scores(i) < 0.0 ? -1.0 : 1.0;
    return result;
}

int classify(const Vector& scores) {
    if (scores.size() < 1) throw ConfigError("classify: empty score vector");
    int best = 0;
    for (Eigen::Index i = 1; i < scores.size(); ++i) {
        if (scores(i) > scores(best)) best = static_cast<int>(i);
    }
    return best;
}

}  // namespace rclab
