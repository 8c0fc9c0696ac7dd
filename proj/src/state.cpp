#include "qcap/state.hpp"

#include <cmath>
#include <stdexcept>

#include "qcap/qmath.hpp"

namespace qcap {

DensityMatrix::DensityMatrix(const ComplexMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw std::invalid_argument("DensityMatrix: matrix must be square and non-empty");
    }
    const double drift = m.hermiticity_drift();
    if (drift > kHermTol) {
        throw std::invalid_argument("DensityMatrix: hermiticity drift exceeds tolerance");
    }
    // absorb roundoff from channel applications
    matrix_ = ComplexMatrix(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            matrix_(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

    const double tr = matrix_.trace().real();
    if (std::abs(tr - 1.0) > kTraceTol) {
        throw std::invalid_argument("DensityMatrix: trace differs from 1 beyond tolerance");
    }
    eigenvalues_ = hermitian_eigenvalues(matrix_);
    for (double& lambda : eigenvalues_) {
        if (lambda < kEigNegTol) {
            throw std::invalid_argument("DensityMatrix: negative eigenvalue beyond tolerance");
        }
        if (lambda < 0.0) lambda = 0.0;
        if (lambda > 1.0) lambda = 1.0;
    }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("maximally_mixed: dim must be positive");
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0 / static_cast<double>(dim);
    return DensityMatrix(m);
}

PureState::PureState(std::size_t dim, std::vector<Complex> amplitudes)
    : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != dim || dim == 0) {
        throw std::invalid_argument("PureState: amplitude count must equal dim");
    }
    double norm2 = 0.0;
    for (const Complex& a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("PureState: non-finite amplitude");
        }
        norm2 += std::norm(a);
    }
    if (std::abs(std::sqrt(norm2) - 1.0) > kNormTol) {
        throw std::invalid_argument("PureState: norm differs from 1 beyond tolerance");
    }
}

DensityMatrix PureState::projector() const {
    const std::size_t n = dim();
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = amplitudes_[i] * std::conj(amplitudes_[j]);
    return DensityMatrix(m);
}

}  // namespace qcap
