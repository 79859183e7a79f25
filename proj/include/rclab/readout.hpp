#pragma once

#include "rclab/matrix.hpp"
#include "rclab/types.hpp"

namespace rclab {

/// Moore-Penrose pseudoinverse via SVD. Singular values at or below
/// max(rows, cols) * eps * sigma_max are treated as zero and stay zero
/// in the reciprocated spectrum.
Matrix pseudoinverse(const Matrix& a);

struct ReadoutLayer {
    Matrix weights;  // K x N
    Vector biases;   // K

    int outputs() const { return static_cast<int>(weights.rows()); }

    Vector apply(const Vector& state) const;

    /// Row-wise application: states is R x N, result is R x K.
    Matrix apply_rows(const Matrix& states) const;
};

struct TrainingBatch {
    Matrix states;   // R x N, one row per readout-eligible time step
    Matrix targets;  // R x K, aligned row-wise
};

/// Least-squares readout: appends a ones column to the states and solves
/// through the pseudoinverse. The result minimizes the Frobenius residual
/// and has minimum norm among the minimizers.
ReadoutLayer train_readout(const TrainingBatch& batch);

/// Component-wise sign with sgn(0) = +1.
Vector binarize(const Vector& scores);

/// Index of the maximum score; ties break toward the lowest index.
int classify(const Vector& scores);

}  // namespace rclab
