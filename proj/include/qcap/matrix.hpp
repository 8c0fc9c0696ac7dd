#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qcap {

using Complex = std::complex<double>;

/// Dense complex matrix in row-major order. Workhorse for states,
/// unitaries and Kraus elements; target dimensions stay below a few
/// hundred, so everything is stored densely.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    /// Zero-filled rows x cols matrix.
    ComplexMatrix(std::size_t rows, std::size_t cols);

    /// Construct from row-major entries. Rejects NaN/Inf entries and
    /// size mismatches.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Complex>& entries() const { return data_; }

    ComplexMatrix adjoint() const;
    Complex trace() const;

    /// Largest entrywise |m_ij|.
    double max_abs() const;

    /// max |M - M^dagger| over all entries.
    double hermiticity_drift() const;
    bool is_hermitian(double tol) const { return rows_ == cols_ && hermiticity_drift() <= tol; }

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
    friend ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// max_ij |a_ij - b_ij|; throws on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qcap
