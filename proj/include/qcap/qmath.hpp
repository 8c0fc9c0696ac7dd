#pragma once

#include <cstddef>
#include <vector>

#include "qcap/matrix.hpp"
#include "qcap/state.hpp"

namespace qcap {

/// Which factor of a bipartite system survives a partial trace.
enum class Subsystem { A, B };

/// Kronecker product, a-index major: result((ia,ib),(ja,jb)) = a(ia,ja) * b(ib,jb).
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced state of rho on the kept factor of a da x db bipartition.
/// Throws if rho.dim() != da * db.
DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t da, std::size_t db,
                            Subsystem keep);

/// Eigenvalues of a Hermitian matrix, ascending. The input may carry
/// hermiticity drift up to kHermTol (it is symmetrized before the
/// solve); anything larger is rejected.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

struct EigenSystem {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column k is the eigenvector of values[k]
};

/// Full eigendecomposition under the same contract as hermitian_eigenvalues.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m);

/// Von Neumann entropy -sum lambda log2 lambda in bits, with 0 log 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// sum_i |ii> / sqrt(d) in dimension d^2 (first index major). Requires d >= 2.
PureState maximally_entangled(std::size_t d);

}  // namespace qcap
