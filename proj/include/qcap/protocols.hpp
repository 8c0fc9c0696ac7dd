#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qcap/channel.hpp"
#include "qcap/matrix.hpp"
#include "qcap/shannon.hpp"
#include "qcap/state.hpp"

namespace qcap {

/// Label (a, b) of the generalized Pauli X^a Z^b, 0 <= a, b < d.
struct PauliLabel {
    std::size_t a;  // shift power
    std::size_t b;  // clock power
};

/// X^a Z^b with X|j> = |j+1 mod d>, Z|j> = w^j |j>, w = exp(2 pi i / d).
ComplexMatrix generalized_pauli(std::size_t d, std::size_t a, std::size_t b);

/// The d^2 maximally entangled states (U_ab (x) I)|Phi_d>, indexed a*d+b.
/// Pairwise orthonormal; used as the superdense decoding measurement and
/// the teleportation encoding basis.
class BellBasis {
public:
    explicit BellBasis(std::size_t d);

    std::size_t d() const { return d_; }
    const PureState& state(std::size_t a, std::size_t b) const { return states_[a * d_ + b]; }
    const PureState& state(PauliLabel l) const { return state(l.a, l.b); }
    const std::vector<PureState>& states() const { return states_; }

private:
    std::size_t d_;
    std::vector<PureState> states_;
};

/// Classical channel induced by superdense coding over ch: Alice encodes
/// m on her half of a shared pair with U_m, sends it through ch, Bob
/// measures in the Bell basis,
///   p(n|m) = <Psi_n| (N (x) I)[(U_m (x) I) Psi (U_m (x) I)^dag] |Psi_n>.
/// Square channels give a d^2-ary channel; erasure-type channels
/// (dout = din + 1) get one extra outcome, the projector onto
/// (erasure symbol (x) anything).
DiscreteChannel superdense_induced(const QuantumChannel& ch);

/// Entanglement-assisted capacity achieved by the superdense protocol:
/// Shannon capacity of the induced classical channel.
double c_sd(const QuantumChannel& ch);

/// Quantum channel simulated by teleportation when the classical arm is
/// cch (alphabet d^2, optionally with a trailing erasure output). Bob
/// applies the correction U_n^dag for outcome n and prepares the erasure
/// symbol when the flag arrives. Kraus operators are extracted from the
/// induced map's Choi matrix by eigendecomposition.
QuantumChannel teleport_induced(const DiscreteChannel& cch, std::size_t d);

/// Forward classical communication cost of that simulation: the Shannon
/// capacity of the classical arm.
double fccc_tp(const DiscreteChannel& cch);

struct BellDiagonalReport {
    bool pass;
    double choi_deviation;  // max |Choi(Tp(Sd(N))) - Choi(N)|
    double c_sd;
    double fccc_tp;
    double bound_gap;  // |c_sd - fccc_tp|
    double ce;         // the common value when the bounds coincide
};

/// Checks Tp(Sd(ch)) = ch and the coincidence of the superdense and
/// teleportation bounds; on PASS both equal C_E exactly.
BellDiagonalReport verify_bell_diagonal(const QuantumChannel& ch, double tol);

/// Measure/re-prepare simulation over a shared Haar-random basis with a
/// d-ary symmetric classical arm of randomization r. The Haar average is
/// exact (second-moment identity), giving
///   xi -> (1-r) (xi + tr(xi) I)/(d+1) + r tr(xi) I/d,
/// which is the depolarizing channel of parameter 1 - (1-r)/(d+1).
QuantumChannel measure_reprepare(std::size_t d, double r);

/// Monte Carlo cross-check of the Haar average: mean Choi state over
/// `samples` random bases. Deterministic for a given seed.
ChoiState measure_reprepare_mc(std::size_t d, double r, std::size_t samples, std::uint64_t seed);

}  // namespace qcap
