#include "qcap/shannon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcap {

namespace {

constexpr double kProbSumTol = 1e-10;
constexpr double kProbGrace = 1e-12;  // roundoff slack on [0,1] checks

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

double checked_probability(double p, const char* what) {
    if (!(p >= -kProbGrace && p <= 1.0 + kProbGrace)) {
        throw std::invalid_argument(std::string(what) + ": probability outside [0,1]");
    }
    return std::clamp(p, 0.0, 1.0);
}

}  // namespace

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw std::invalid_argument("Distribution: empty");
    double sum = 0.0;
    for (double p : probs_) {
        if (!(p >= 0.0) || !std::isfinite(p)) {
            throw std::invalid_argument("Distribution: entries must be finite and >= 0");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > kProbSumTol) {
        throw std::invalid_argument("Distribution: probabilities must sum to 1");
    }
}

Distribution Distribution::uniform(std::size_t n) {
    if (n == 0) throw std::invalid_argument("Distribution::uniform: n must be positive");
    return Distribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

DiscreteChannel::DiscreteChannel(std::size_t inputs, std::size_t outputs,
                                 std::vector<double> row_major)
    : inputs_(inputs), outputs_(outputs), matrix_(std::move(row_major)) {
    if (inputs_ == 0 || outputs_ == 0 || matrix_.size() != inputs_ * outputs_) {
        throw std::invalid_argument("DiscreteChannel: matrix size must be inputs*outputs");
    }
    for (double& p : matrix_) p = checked_probability(p, "DiscreteChannel");
    for (std::size_t i = 0; i < inputs_; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < outputs_; ++j) row += matrix_[i * outputs_ + j];
        if (std::abs(row - 1.0) > kProbSumTol) {
            throw std::invalid_argument("DiscreteChannel: row does not sum to 1");
        }
    }
}

double shannon_entropy(const Distribution& p) {
    double h = 0.0;
    for (double x : p.probs()) h -= xlog2x(x);
    return std::max(h, 0.0);
}

double h_dary(double p, std::size_t d) {
    if (d < 2) throw std::invalid_argument("h_dary: d must be at least 2");
    p = checked_probability(p, "h_dary");
    const double q = 1.0 - p;
    double h = -xlog2x(p);
    if (q > 0.0) h -= q * std::log2(q / static_cast<double>(d - 1));
    return h;
}

DiscreteChannel dary_symmetric(std::size_t d, double x) {
    if (d < 2) throw std::invalid_argument("dary_symmetric: d must be at least 2");
    x = checked_probability(x, "dary_symmetric");
    std::vector<double> m(d * d, x / static_cast<double>(d));
    for (std::size_t i = 0; i < d; ++i) m[i * d + i] += 1.0 - x;
    return DiscreteChannel(d, d, std::move(m));
}

DiscreteChannel classical_erasure(std::size_t m, double x) {
    if (m < 1) throw std::invalid_argument("classical_erasure: need at least one input");
    x = checked_probability(x, "classical_erasure");
    std::vector<double> t(m * (m + 1), 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        t[i * (m + 1) + i] = 1.0 - x;
        t[i * (m + 1) + m] = x;
    }
    return DiscreteChannel(m, m + 1, std::move(t));
}

BaResult ba_capacity_full(const DiscreteChannel& ch, double tol, std::size_t max_iters) {
    if (!(tol > 0.0)) throw std::invalid_argument("ba_capacity: tol must be positive");
    const std::size_t ni = ch.inputs();
    const std::size_t no = ch.outputs();
    std::vector<double> prior(ni, 1.0 / static_cast<double>(ni));
    std::vector<double> output(no, 0.0);
    std::vector<double> divergence(ni, 0.0);

    for (std::size_t iter = 1; iter <= max_iters; ++iter) {
        std::fill(output.begin(), output.end(), 0.0);
        for (std::size_t i = 0; i < ni; ++i) {
            if (prior[i] == 0.0) continue;
            for (std::size_t j = 0; j < no; ++j) output[j] += prior[i] * ch.transition(i, j);
        }
        double lower = 0.0;
        double upper = -1.0;
        for (std::size_t i = 0; i < ni; ++i) {
            double div = 0.0;
            for (std::size_t j = 0; j < no; ++j) {
                const double p = ch.transition(i, j);
                if (p > 0.0) div += p * std::log2(p / output[j]);
            }
            divergence[i] = div;
            if (prior[i] > 0.0) {
                lower += prior[i] * div;
                upper = std::max(upper, div);
            }
        }
        if (upper - lower <= tol) {
            const double cap = 0.5 * (upper + lower);
            const double roof = std::log2(static_cast<double>(std::min(ni, no)));
            return {std::clamp(cap, 0.0, roof), upper - lower, iter};
        }
        // multiplicative update, renormalized
        double z = 0.0;
        for (std::size_t i = 0; i < ni; ++i) {
            prior[i] *= std::exp2(divergence[i] - lower);  // shift keeps exponents tame
            z += prior[i];
        }
        for (double& q : prior) q /= z;
    }
    throw std::runtime_error("ba_capacity: bracket failed to close within iteration cap");
}

double ba_capacity(const DiscreteChannel& ch, double tol) {
    return ba_capacity_full(ch, tol).capacity;
}

double dary_symmetric_capacity(std::size_t d, double x) {
    if (d < 2) throw std::invalid_argument("dary_symmetric_capacity: d must be at least 2");
    x = checked_probability(x, "dary_symmetric_capacity");
    const double dd = static_cast<double>(d);
    return std::log2(dd) - h_dary(1.0 - x * (dd - 1.0) / dd, d);
}

}  // namespace qcap
