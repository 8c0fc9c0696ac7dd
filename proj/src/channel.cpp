#include "qcap/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "qcap/protocols.hpp"

namespace qcap {

QuantumChannel::QuantumChannel(std::size_t din, std::size_t dout,
                               std::vector<ComplexMatrix> kraus)
    : din_(din), dout_(dout), kraus_(std::move(kraus)) {
    if (din_ == 0 || dout_ == 0) {
        throw std::invalid_argument("QuantumChannel: dimensions must be positive");
    }
    if (kraus_.empty()) {
        throw std::invalid_argument("QuantumChannel: need at least one Kraus element");
    }
    for (const ComplexMatrix& k : kraus_) {
        if (k.rows() != dout_ || k.cols() != din_) {
            throw std::invalid_argument("QuantumChannel: Kraus element shape must be dout x din");
        }
    }
    ComplexMatrix completeness(din_, din_);
    for (const ComplexMatrix& k : kraus_) completeness += k.adjoint() * k;
    if (max_abs_diff(completeness, ComplexMatrix::identity(din_)) > kTracePreservingTol) {
        throw std::domain_error("QuantumChannel: Kraus set is not trace preserving");
    }
}

ChoiState::ChoiState(std::size_t din, std::size_t dout, DensityMatrix state)
    : din_(din), dout_(dout), state_(std::move(state)) {
    if (state_.dim() != din_ * dout_) {
        throw std::invalid_argument("ChoiState: state dimension must be dout*din");
    }
    const DensityMatrix reduced = partial_trace(state_, dout_, din_, Subsystem::B);
    const DensityMatrix mixed = DensityMatrix::maximally_mixed(din_);
    if (max_abs_diff(reduced.matrix(), mixed.matrix()) > 1e-9) {
        throw std::invalid_argument("ChoiState: reduction over the output factor is not I/din");
    }
}

QuantumChannel depolarizing(std::size_t d, double x) {
    if (d < 2) throw std::invalid_argument("depolarizing: d must be at least 2");
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("depolarizing: x outside [0,1]");
    const double dd = static_cast<double>(d);
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(d * d);
    ComplexMatrix id = ComplexMatrix::identity(d);
    id *= std::sqrt(1.0 - x + x / (dd * dd));
    kraus.push_back(std::move(id));
    const double w = std::sqrt(x) / dd;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            if (a == 0 && b == 0) continue;
            if (w == 0.0) continue;
            kraus.push_back(w * generalized_pauli(d, a, b));
        }
    return QuantumChannel(d, d, std::move(kraus));
}

QuantumChannel erasure(std::size_t d, double x) {
    if (d < 2) throw std::invalid_argument("erasure: d must be at least 2");
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("erasure: x outside [0,1]");
    std::vector<ComplexMatrix> kraus;
    ComplexMatrix embed(d + 1, d);
    for (std::size_t i = 0; i < d; ++i) embed(i, i) = std::sqrt(1.0 - x);
    kraus.push_back(std::move(embed));
    if (x > 0.0) {
        for (std::size_t i = 0; i < d; ++i) {
            ComplexMatrix flag(d + 1, d);
            flag(d, i) = std::sqrt(x);
            kraus.push_back(std::move(flag));
        }
    }
    return QuantumChannel(d, d + 1, std::move(kraus));
}

QuantumChannel dephasing(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("dephasing: x outside [0,1]");
    std::vector<ComplexMatrix> kraus;
    ComplexMatrix id = ComplexMatrix::identity(2);
    id *= std::sqrt(1.0 - 0.5 * x);
    kraus.push_back(std::move(id));
    if (x > 0.0) {
        ComplexMatrix z(2, 2);
        z(0, 0) = std::sqrt(0.5 * x);
        z(1, 1) = -std::sqrt(0.5 * x);
        kraus.push_back(std::move(z));
    }
    return QuantumChannel(2, 2, std::move(kraus));
}

QuantumChannel bell_diagonal(std::size_t d, const Distribution& probs) {
    if (d < 2) throw std::invalid_argument("bell_diagonal: d must be at least 2");
    if (probs.size() != d * d) {
        throw std::invalid_argument("bell_diagonal: need d^2 probabilities");
    }
    std::vector<ComplexMatrix> kraus;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            const double p = probs[a * d + b];
            if (p == 0.0) continue;
            kraus.push_back(std::sqrt(p) * generalized_pauli(d, a, b));
        }
    return QuantumChannel(d, d, std::move(kraus));
}

DensityMatrix apply(const QuantumChannel& ch, const DensityMatrix& rho) {
    if (rho.dim() != ch.din()) {
        throw std::invalid_argument("apply: state dimension must match channel input");
    }
    ComplexMatrix out(ch.dout(), ch.dout());
    for (const ComplexMatrix& k : ch.kraus()) out += k * rho.matrix() * k.adjoint();
    return DensityMatrix(out);
}

ChoiState choi(const QuantumChannel& ch) {
    const std::size_t din = ch.din();
    const std::size_t dout = ch.dout();
    const std::size_t dim = dout * din;
    // (K (x) I) |Phi> is the row-major vectorization of K / sqrt(din)
    ComplexMatrix state(dim, dim);
    for (const ComplexMatrix& k : ch.kraus()) {
        for (std::size_t p = 0; p < dim; ++p)
            for (std::size_t q = 0; q < dim; ++q) {
                state(p, q) += k.entries()[p] * std::conj(k.entries()[q]);
            }
    }
    state *= Complex(1.0 / static_cast<double>(din), 0.0);
    return ChoiState(din, dout, DensityMatrix(state));
}

double entropy_exchange(const QuantumChannel& ch, const DensityMatrix& rho) {
    if (rho.dim() != ch.din()) {
        throw std::invalid_argument("entropy_exchange: state dimension must match channel input");
    }
    const std::size_t k = ch.kraus().size();
    ComplexMatrix w(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        const ComplexMatrix ki_rho = ch.kraus()[i] * rho.matrix();
        for (std::size_t j = 0; j < k; ++j) {
            // tr(K_i rho K_j^dagger) without forming the product matrix
            const ComplexMatrix& kj = ch.kraus()[j];
            Complex t = 0.0;
            for (std::size_t r = 0; r < ch.dout(); ++r)
                for (std::size_t c = 0; c < ch.din(); ++c)
                    t += ki_rho(r, c) * std::conj(kj(r, c));
            w(i, j) = t;
        }
    }
    return von_neumann_entropy(DensityMatrix(w));
}

}  // namespace qcap
