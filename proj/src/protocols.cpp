#include "qcap/protocols.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qcap/qmath.hpp"
#include "qcap/rng.hpp"

namespace qcap {

namespace {

// vec_r(M)/sqrt(din): the state (M (x) I)|Phi> for a dout x din matrix M.
std::vector<Complex> vec_state(const ComplexMatrix& m) {
    std::vector<Complex> v(m.entries());
    const double w = 1.0 / std::sqrt(static_cast<double>(m.cols()));
    for (Complex& z : v) z *= w;
    return v;
}

Complex inner(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    Complex s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += std::conj(a[k]) * b[k];
    return s;
}

// (d+1) x d isometric embedding onto the first d output basis states.
ComplexMatrix erasure_embedding(std::size_t d) {
    ComplexMatrix v(d + 1, d);
    for (std::size_t i = 0; i < d; ++i) v(i, i) = 1.0;
    return v;
}

}  // namespace

ComplexMatrix generalized_pauli(std::size_t d, std::size_t a, std::size_t b) {
    if (d < 2) throw std::invalid_argument("generalized_pauli: d must be at least 2");
    if (a >= d || b >= d) throw std::invalid_argument("generalized_pauli: label out of range");
    ComplexMatrix u(d, d);
    const double theta = 2.0 * std::numbers::pi / static_cast<double>(d);
    for (std::size_t k = 0; k < d; ++k) {
        const double phase = theta * static_cast<double>(b * k % d);
        u((k + a) % d, k) = Complex(std::cos(phase), std::sin(phase));
    }
    return u;
}

BellBasis::BellBasis(std::size_t d) : d_(d) {
    if (d < 2) throw std::invalid_argument("BellBasis: d must be at least 2");
    states_.reserve(d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            states_.emplace_back(d * d, vec_state(generalized_pauli(d, a, b)));
        }
}

DiscreteChannel superdense_induced(const QuantumChannel& ch) {
    const std::size_t d = ch.din();
    const bool flagged = ch.dout() == d + 1;
    if (!ch.square() && !flagged) {
        throw std::invalid_argument(
            "superdense_induced: channel must be square or erasure-type (dout = din+1)");
    }
    const std::size_t m_count = d * d;
    const std::size_t n_count = flagged ? m_count + 1 : m_count;

    // decoder states: embedded Bell vectors vec(V U_n)/sqrt(d)
    const ComplexMatrix embed =
        flagged ? erasure_embedding(d) : ComplexMatrix::identity(d);
    std::vector<std::vector<Complex>> decoder;
    decoder.reserve(m_count);
    std::vector<ComplexMatrix> paulis;
    paulis.reserve(m_count);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            paulis.push_back(generalized_pauli(d, a, b));
            decoder.push_back(vec_state(embed * paulis.back()));
        }

    std::vector<double> p(m_count * n_count, 0.0);
    for (std::size_t m = 0; m < m_count; ++m) {
        for (const ComplexMatrix& k : ch.kraus()) {
            const std::vector<Complex> branch = vec_state(k * paulis[m]);
            for (std::size_t n = 0; n < m_count; ++n) {
                p[m * n_count + n] += std::norm(inner(decoder[n], branch));
            }
            if (flagged) {
                // weight on the (erasure symbol (x) anything) subspace
                double w = 0.0;
                for (std::size_t q = 0; q < d; ++q) w += std::norm(branch[d * d + q]);
                p[m * n_count + m_count] += w;
            }
        }
    }
    return DiscreteChannel(m_count, n_count, std::move(p));
}

double c_sd(const QuantumChannel& ch) { return ba_capacity(superdense_induced(ch), 1e-9); }

QuantumChannel teleport_induced(const DiscreteChannel& cch, std::size_t d) {
    if (d < 2) throw std::invalid_argument("teleport_induced: d must be at least 2");
    const std::size_t m_count = d * d;
    const bool flagged = cch.outputs() == m_count + 1;
    if (cch.inputs() != m_count || (cch.outputs() != m_count && !flagged)) {
        throw std::invalid_argument("teleport_induced: classical alphabet must be d^2 or d^2+1");
    }
    const std::size_t dout = flagged ? d + 1 : d;
    const ComplexMatrix embed =
        flagged ? erasure_embedding(d) : ComplexMatrix::identity(d);

    std::vector<ComplexMatrix> paulis;
    paulis.reserve(m_count);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) paulis.push_back(generalized_pauli(d, a, b));

    // Choi matrix of xi -> sum_{m,n} p(n|m)/d^2 U_n^dag U_m xi U_m^dag U_n,
    // with the erasure branch xi -> tr(xi) |e><e|
    const std::size_t dim = dout * d;
    ComplexMatrix c(dim, dim);
    for (std::size_t m = 0; m < m_count; ++m) {
        for (std::size_t n = 0; n < m_count; ++n) {
            const double w = cch.transition(m, n) / static_cast<double>(m_count);
            if (w == 0.0) continue;
            // v v^dag is the Choi state of the branch unitary
            const std::vector<Complex> v = vec_state(embed * (paulis[n].adjoint() * paulis[m]));
            for (std::size_t p = 0; p < dim; ++p)
                for (std::size_t q = 0; q < dim; ++q) c(p, q) += w * v[p] * std::conj(v[q]);
        }
        if (flagged) {
            // xi -> tr(xi)|e><e| has Choi |e><e| (x) I/d
            const double w = cch.transition(m, m_count) / static_cast<double>(m_count * d);
            for (std::size_t q = 0; q < d; ++q) c(d * d + q, d * d + q) += w;
        }
    }

    // Kraus extraction: keep eigenpairs above the rank cutoff
    const EigenSystem es = hermitian_eigensystem(c);
    std::vector<ComplexMatrix> kraus;
    for (std::size_t k = 0; k < es.values.size(); ++k) {
        const double lambda = es.values[k];
        if (lambda <= 1e-12) continue;
        const double scale = std::sqrt(lambda * static_cast<double>(d));
        ComplexMatrix op(dout, d);
        for (std::size_t p = 0; p < dout; ++p)
            for (std::size_t q = 0; q < d; ++q) op(p, q) = scale * es.vectors(p * d + q, k);
        kraus.push_back(std::move(op));
    }
    return QuantumChannel(d, dout, std::move(kraus));
}

double fccc_tp(const DiscreteChannel& cch) { return ba_capacity(cch, 1e-9); }

BellDiagonalReport verify_bell_diagonal(const QuantumChannel& ch, double tol) {
    if (!ch.square()) {
        throw std::invalid_argument("verify_bell_diagonal: channel must be square");
    }
    const DiscreteChannel induced = superdense_induced(ch);
    const QuantumChannel rebuilt = teleport_induced(induced, ch.din());

    BellDiagonalReport report{};
    report.choi_deviation =
        max_abs_diff(choi(rebuilt).state().matrix(), choi(ch).state().matrix());
    report.c_sd = c_sd(ch);
    report.fccc_tp = fccc_tp(induced);
    report.bound_gap = std::abs(report.c_sd - report.fccc_tp);
    report.pass = report.choi_deviation <= tol && report.bound_gap <= tol;
    report.ce = 0.5 * (report.c_sd + report.fccc_tp);
    return report;
}

QuantumChannel measure_reprepare(std::size_t d, double r) {
    if (d < 2) throw std::invalid_argument("measure_reprepare: d must be at least 2");
    if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("measure_reprepare: r outside [0,1]");
    // Haar average of measure-and-reprepare is (xi + tr(xi) I)/(d+1); the
    // noisy d-ary arm mixes in r tr(xi) I/d, landing exactly on the
    // depolarizing family.
    const double x = 1.0 - (1.0 - r) / static_cast<double>(d + 1);
    return depolarizing(d, x);
}

ChoiState measure_reprepare_mc(std::size_t d, double r, std::size_t samples,
                               std::uint64_t seed) {
    if (d < 2) throw std::invalid_argument("measure_reprepare_mc: d must be at least 2");
    if (!(r >= 0.0 && r <= 1.0)) {
        throw std::invalid_argument("measure_reprepare_mc: r outside [0,1]");
    }
    if (samples < 1) throw std::invalid_argument("measure_reprepare_mc: need samples >= 1");

    const std::size_t dim = d * d;
    const double p_same = (1.0 - r) + r / static_cast<double>(d);
    const double p_other = r / static_cast<double>(d);
    Rng rng(seed);
    ComplexMatrix acc(dim, dim);
    std::vector<Complex> v(dim);
    for (std::size_t s = 0; s < samples; ++s) {
        const ComplexMatrix u = haar_unitary(d, rng);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                const double p = i == j ? p_same : p_other;
                if (p == 0.0) continue;
                // Kraus sqrt(p) U|j><i|U^dag; its Choi vector is
                // sqrt(p/d) (column j of U) (x) conj(column i of U)
                const double w = p / static_cast<double>(d);
                for (std::size_t row = 0; row < d; ++row)
                    for (std::size_t col = 0; col < d; ++col)
                        v[row * d + col] = u(row, j) * std::conj(u(col, i));
                for (std::size_t pq = 0; pq < dim; ++pq)
                    for (std::size_t qq = 0; qq < dim; ++qq)
                        acc(pq, qq) += w * v[pq] * std::conj(v[qq]);
            }
        }
    }
    acc *= Complex(1.0 / static_cast<double>(samples), 0.0);
    return ChoiState(d, d, DensityMatrix(acc));
}

}  // namespace qcap
