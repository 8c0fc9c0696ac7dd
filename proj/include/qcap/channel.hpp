#pragma once

#include <cstddef>
#include <vector>

#include "qcap/matrix.hpp"
#include "qcap/qmath.hpp"
#include "qcap/shannon.hpp"
#include "qcap/state.hpp"

namespace qcap {

/// Entrywise tolerance on the Kraus completeness sum.
inline constexpr double kTracePreservingTol = 1e-9;

/// Completely positive trace-preserving map as a Kraus list, each
/// element dout x din. Construction validates sum K_i^dagger K_i = I.
class QuantumChannel {
public:
    QuantumChannel(std::size_t din, std::size_t dout, std::vector<ComplexMatrix> kraus);

    std::size_t din() const { return din_; }
    std::size_t dout() const { return dout_; }
    bool square() const { return din_ == dout_; }
    const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

private:
    std::size_t din_;
    std::size_t dout_;
    std::vector<ComplexMatrix> kraus_;
};

/// (N (x) I) applied to the maximally entangled din (x) din pair; state
/// dimension dout * din with the channel output as the first factor.
/// Tracing out the output factor leaves I/din.
class ChoiState {
public:
    ChoiState(std::size_t din, std::size_t dout, DensityMatrix state);

    std::size_t din() const { return din_; }
    std::size_t dout() const { return dout_; }
    const DensityMatrix& state() const { return state_; }

private:
    std::size_t din_;
    std::size_t dout_;
    DensityMatrix state_;
};

/// d-dimensional depolarizing channel: input kept with probability 1-x,
/// replaced by I/d with probability x. Kraus set is the generalized
/// Pauli mixture whose identity component carries weight 1-x+x/d^2.
QuantumChannel depolarizing(std::size_t d, double x);

/// Quantum erasure channel: d-dim input delivered intact (embedded in a
/// (d+1)-dim output space) with probability 1-x, otherwise replaced by
/// the erasure symbol, the last output basis vector.
QuantumChannel erasure(std::size_t d, double x);

/// Qubit dephasing: sigma_z applied with probability x/2.
QuantumChannel dephasing(double x);

/// Mixture of generalized Pauli unitaries X^a Z^b with weights
/// probs[a*d + b] (shift power major).
QuantumChannel bell_diagonal(std::size_t d, const Distribution& probs);

/// sum K_i rho K_i^dagger as a validated DensityMatrix.
DensityMatrix apply(const QuantumChannel& ch, const DensityMatrix& rho);

ChoiState choi(const QuantumChannel& ch);

/// Entropy exchange S([N (x) I](Psi_rho)) for any purification of rho,
/// evaluated as the entropy of the index-space matrix
/// W_ij = tr(K_i rho K_j^dagger).
double entropy_exchange(const QuantumChannel& ch, const DensityMatrix& rho);

}  // namespace qcap
