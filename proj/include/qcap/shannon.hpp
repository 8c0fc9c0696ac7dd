#pragma once

#include <cstddef>
#include <vector>

namespace qcap {

/// Probability vector: entries >= 0, sum within 1e-10 of 1.
class Distribution {
public:
    explicit Distribution(std::vector<double> probs);

    static Distribution uniform(std::size_t n);

    std::size_t size() const { return probs_.size(); }
    const std::vector<double>& probs() const { return probs_; }
    double operator[](std::size_t i) const { return probs_[i]; }

private:
    std::vector<double> probs_;
};

/// Discrete memoryless channel as a row-stochastic matrix p(out|in),
/// rows indexed by input symbol.
class DiscreteChannel {
public:
    DiscreteChannel(std::size_t inputs, std::size_t outputs, std::vector<double> row_major);

    std::size_t inputs() const { return inputs_; }
    std::size_t outputs() const { return outputs_; }

    /// p(out | in)
    double transition(std::size_t in, std::size_t out) const {
        return matrix_[in * outputs_ + out];
    }
    const std::vector<double>& matrix() const { return matrix_; }

private:
    std::size_t inputs_;
    std::size_t outputs_;
    std::vector<double> matrix_;
};

/// -sum p_i log2 p_i in bits, 0 log 0 = 0.
double shannon_entropy(const Distribution& p);

/// Entropy of a d-ary distribution with one element of probability p and
/// d-1 elements sharing 1-p equally:
///   -p log2 p - (1-p) log2((1-p)/(d-1)).
double h_dary(double p, std::size_t d);

/// d-ary symmetric channel of randomization probability x: the symbol is
/// replaced by a uniform draw over all d symbols (including itself) with
/// probability x, so p(j|i) = (1-x) delta_ij + x/d and the crossover
/// probability is x(d-1)/d.
DiscreteChannel dary_symmetric(std::size_t d, double x);

/// m-input, (m+1)-output erasure channel: p(i|i) = 1-x, p(erasure|i) = x,
/// the erasure symbol being the extra output m.
DiscreteChannel classical_erasure(std::size_t m, double x);

struct BaResult {
    double capacity;       // bracket midpoint, bits
    double bracket;        // upper - lower bound at termination
    std::size_t iterations;
};

/// Blahut-Arimoto capacity iteration from the uniform prior. Terminates
/// when the standard bracket (max vs prior-weighted average of the
/// input-wise divergences) closes to <= tol bits; inputs whose prior has
/// decayed to zero are excluded from the max. Throws on non-convergence
/// within max_iters.
BaResult ba_capacity_full(const DiscreteChannel& ch, double tol, std::size_t max_iters = 1000000);

/// Capacity only, in bits.
double ba_capacity(const DiscreteChannel& ch, double tol = 1e-9);

/// Closed form log2 d - H_d(1 - x(d-1)/d) for the d-ary symmetric channel.
double dary_symmetric_capacity(std::size_t d, double x);

}  // namespace qcap
