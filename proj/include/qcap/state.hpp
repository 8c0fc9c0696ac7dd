#pragma once

#include <cstddef>
#include <vector>

#include "qcap/matrix.hpp"

namespace qcap {

/// Validation tolerances shared by the state types.
inline constexpr double kHermTol = 1e-10;       // max |M - M^dagger| entry
inline constexpr double kTraceTol = 1e-10;      // |tr - 1|
inline constexpr double kEigNegTol = -1e-10;    // eigenvalues below this are invalid
inline constexpr double kNormTol = 1e-10;       // pure-state norm drift

/// Hermitian, positive semidefinite, unit-trace state.
///
/// Construction validates all three invariants; hermiticity drift up to
/// kHermTol is absorbed by symmetrizing (M + M^dagger)/2, eigenvalues in
/// [kEigNegTol, 0) are treated as roundoff and clamped to zero when the
/// spectrum is consumed. The eigenvalues found during validation are
/// kept, ascending, so entropy evaluations need no second solve.
class DensityMatrix {
public:
    explicit DensityMatrix(const ComplexMatrix& m);

    static DensityMatrix maximally_mixed(std::size_t dim);

    std::size_t dim() const { return matrix_.rows(); }
    const ComplexMatrix& matrix() const { return matrix_; }

    /// Ascending, clamped into [0, 1]; sums to 1 within validation tolerance.
    const std::vector<double>& eigenvalues() const { return eigenvalues_; }

private:
    ComplexMatrix matrix_;
    std::vector<double> eigenvalues_;
};

/// Unit-norm complex amplitude vector.
class PureState {
public:
    PureState(std::size_t dim, std::vector<Complex> amplitudes);

    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }

    /// |psi><psi| as a validated DensityMatrix.
    DensityMatrix projector() const;

private:
    std::vector<Complex> amplitudes_;
};

}  // namespace qcap
