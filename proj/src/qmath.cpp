#include "qcap/qmath.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace qcap {

namespace {

using EigenCMat =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Symmetrized copy as an Eigen matrix; rejects drift beyond kHermTol.
EigenCMat to_eigen_symmetrized(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("hermitian eigensolver: matrix not square");
    }
    if (m.hermiticity_drift() > kHermTol) {
        throw std::invalid_argument("hermitian eigensolver: input not Hermitian");
    }
    const std::size_t n = m.rows();
    EigenCMat a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    return a;
}

}  // namespace

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const Complex w = a(ia, ja);
            if (w == Complex(0.0, 0.0)) continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib)
                for (std::size_t jb = 0; jb < b.cols(); ++jb)
                    out(ia * b.rows() + ib, ja * b.cols() + jb) = w * b(ib, jb);
        }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t da, std::size_t db,
                            Subsystem keep) {
    if (rho.dim() != da * db || da == 0 || db == 0) {
        throw std::invalid_argument("partial_trace: dimensions do not factor the state");
    }
    const ComplexMatrix& m = rho.matrix();
    if (keep == Subsystem::A) {
        ComplexMatrix out(da, da);
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < da; ++j) {
                Complex s = 0.0;
                for (std::size_t k = 0; k < db; ++k) s += m(i * db + k, j * db + k);
                out(i, j) = s;
            }
        return DensityMatrix(out);
    }
    ComplexMatrix out(db, db);
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < da; ++k) s += m(k * db + i, k * db + j);
            out(i, j) = s;
        }
    return DensityMatrix(out);
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    Eigen::SelfAdjointEigenSolver<EigenCMat> solver(to_eigen_symmetrized(m),
                                                    Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eigenvalues: eigensolver failed to converge");
    }
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& m) {
    Eigen::SelfAdjointEigenSolver<EigenCMat> solver(to_eigen_symmetrized(m));
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eigensystem: eigensolver failed to converge");
    }
    EigenSystem out;
    const auto& ev = solver.eigenvalues();
    out.values.assign(ev.data(), ev.data() + ev.size());
    const std::size_t n = m.rows();
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.vectors(i, j) = solver.eigenvectors()(i, j);
    return out;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    double s = 0.0;
    for (double lambda : rho.eigenvalues()) {
        if (lambda > 0.0) s -= lambda * std::log2(lambda);
    }
    return std::max(s, 0.0);
}

PureState maximally_entangled(std::size_t d) {
    if (d < 2) throw std::invalid_argument("maximally_entangled: d must be at least 2");
    std::vector<Complex> amps(d * d, Complex(0.0, 0.0));
    const double w = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t i = 0; i < d; ++i) amps[i * d + i] = w;
    return PureState(d * d, std::move(amps));
}

}  // namespace qcap
