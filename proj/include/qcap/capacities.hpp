#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qcap/channel.hpp"
#include "qcap/rng.hpp"
#include "qcap/state.hpp"

namespace qcap {

/// One-shot classical capacity of the d-dimensional depolarizing channel:
/// log2 d - H_d(1 - x(d-1)/d). Achieved by a uniform orthonormal input
/// ensemble measured in the same basis; saturates the Holevo bound.
double c1_depolarizing(std::size_t d, double x);

/// Forward classical cost of the measure/re-prepare simulation,
/// log2 d - H_d(d - x(d - 1/d)), defined for x >= d/(d+1); throws
/// std::domain_error below the simulability threshold.
double fccc_mr_depolarizing(std::size_t d, double x);

/// Entanglement-assisted classical capacity of the depolarizing channel:
/// 2 log2 d - H_{d^2}(1 - x(d^2-1)/d^2).
double ce_depolarizing(std::size_t d, double x);

struct ErasureCapacities {
    double classical;  // (1-x) log2 d
    double quantum;    // max{0, 1-2x} log2 d
    double assisted;   // 2(1-x) log2 d
};

ErasureCapacities erasure_capacities(std::size_t d, double x);

/// C_E of the qubit dephasing channel, 2 - H2(x/2).
double ce_dephasing(double x);

/// Random-hashing lower bound on the quantum capacity,
/// log2 d - S(choi(ch)); may be negative (vacuous) unless clamped.
double hashing_bound(const QuantumChannel& ch, bool clamp = false);

/// Q_E = C_E / 2, valid for every channel.
double qe_from_ce(double ce);

/// S(rho) + S(N(rho)) - S([N (x) I](Psi_rho)) in bits.
double quantum_mutual_information(const QuantumChannel& ch, const DensityMatrix& rho);

struct CeOptimum {
    double value;                        // best objective found, bits
    DensityMatrix argmax;                // maximizing channel input
    std::vector<double> restart_values;  // best value per restart
};

/// Numerical maximization of the quantum mutual information over channel
/// inputs, parametrized as rho = LL^dag / tr(LL^dag) with a complex
/// lower-triangular L (din^2 real parameters). Multi-start downhill
/// simplex: restart 0 is the maximally mixed state, the rest draw random
/// factors from seeds derived per restart. The objective is not assumed
/// concave; agreement with the closed forms is checked by tests rather
/// than by construction. Throws if no restart converges within the
/// evaluation cap.
CeOptimum ce_optimize(const QuantumChannel& ch, double tol = 1e-8, std::size_t restarts = 8,
                      std::uint64_t seed = kDefaultSeed, std::size_t max_evals_per_restart = 60000);

struct BoundsBand {
    double lower;  // C1
    double upper;  // min(C_E, (1-x) log2 d)
};

/// The band of possible values for the depolarizing channel's unassisted
/// classical capacity C.
BoundsBand depolarizing_bounds(std::size_t d, double x);

enum class Method { closed_form, optimized, simulated };

const char* method_name(Method m);

struct CapacityEntry {
    std::string name;  // C1, C_E, FCCC_MR, FCCC_Tp, C_Sd, Q_hash, Q_E, ...
    double value;      // bits per channel use
    Method method;
    double bracket;  // residual bound width (0 for closed forms)
};

struct CapacityReport {
    std::string channel;
    std::vector<CapacityEntry> entries;
};

}  // namespace qcap
