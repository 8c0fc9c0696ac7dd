#include "qcap/capacities.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qcap/nelder_mead.hpp"
#include "qcap/qmath.hpp"
#include "qcap/shannon.hpp"

namespace qcap {

namespace {

void check_probability(double x, const char* what) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument(std::string(what) + ": x outside [0,1]");
    }
}

// rho = LL^dag / tr(LL^dag) from din^2 real parameters: real diagonal
// followed by (re, im) pairs of the strictly lower triangle.
DensityMatrix density_from_factor(const std::vector<double>& params, std::size_t d) {
    ComplexMatrix l(d, d);
    std::size_t k = 0;
    for (std::size_t i = 0; i < d; ++i) l(i, i) = params[k++];
    for (std::size_t i = 1; i < d; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            l(i, j) = Complex(params[k], params[k + 1]);
            k += 2;
        }
    ComplexMatrix m = l * l.adjoint();
    const double tr = m.trace().real();
    if (!(tr > 1e-14)) throw std::invalid_argument("degenerate factor");
    m *= Complex(1.0 / tr, 0.0);
    return DensityMatrix(m);
}

}  // namespace

double c1_depolarizing(std::size_t d, double x) {
    check_probability(x, "c1_depolarizing");
    return dary_symmetric_capacity(d, x);
}

double fccc_mr_depolarizing(std::size_t d, double x) {
    if (d < 2) throw std::invalid_argument("fccc_mr_depolarizing: d must be at least 2");
    check_probability(x, "fccc_mr_depolarizing");
    const double dd = static_cast<double>(d);
    const double threshold = dd / (dd + 1.0);
    if (x < threshold) {
        throw std::domain_error(
            "fccc_mr_depolarizing: channel is not measure/re-prepare simulable below x = d/(d+1)");
    }
    return std::log2(dd) - h_dary(dd - x * (dd - 1.0 / dd), d);
}

double ce_depolarizing(std::size_t d, double x) {
    if (d < 2) throw std::invalid_argument("ce_depolarizing: d must be at least 2");
    check_probability(x, "ce_depolarizing");
    const double d2 = static_cast<double>(d) * static_cast<double>(d);
    return 2.0 * std::log2(static_cast<double>(d)) - h_dary(1.0 - x * (d2 - 1.0) / d2, d * d);
}

ErasureCapacities erasure_capacities(std::size_t d, double x) {
    if (d < 2) throw std::invalid_argument("erasure_capacities: d must be at least 2");
    check_probability(x, "erasure_capacities");
    const double logd = std::log2(static_cast<double>(d));
    const double classical = (1.0 - x) * logd;
    return {classical, std::max(0.0, 1.0 - 2.0 * x) * logd, 2.0 * classical};
}

double ce_dephasing(double x) {
    check_probability(x, "ce_dephasing");
    return 2.0 - h_dary(0.5 * x, 2);
}

double hashing_bound(const QuantumChannel& ch, bool clamp) {
    if (!ch.square()) throw std::invalid_argument("hashing_bound: channel must be square");
    const double raw =
        std::log2(static_cast<double>(ch.din())) - von_neumann_entropy(choi(ch).state());
    return clamp ? std::max(raw, 0.0) : raw;
}

double qe_from_ce(double ce) {
    if (!(ce >= 0.0)) throw std::invalid_argument("qe_from_ce: C_E must be nonnegative");
    return 0.5 * ce;
}

double quantum_mutual_information(const QuantumChannel& ch, const DensityMatrix& rho) {
    return von_neumann_entropy(rho) + von_neumann_entropy(apply(ch, rho)) -
           entropy_exchange(ch, rho);
}

CeOptimum ce_optimize(const QuantumChannel& ch, double tol, std::size_t restarts,
                      std::uint64_t seed, std::size_t max_evals_per_restart) {
    if (!(tol > 0.0)) throw std::invalid_argument("ce_optimize: tol must be positive");
    if (restarts < 1) throw std::invalid_argument("ce_optimize: need at least one restart");
    const std::size_t d = ch.din();
    const std::size_t nparams = d * d;

    const auto objective = [&](const std::vector<double>& params) {
        // minimize the negated mutual information; punt on degenerate factors
        try {
            return -quantum_mutual_information(ch, density_from_factor(params, d));
        } catch (const std::invalid_argument&) {
            return 1e6;
        }
    };

    NelderMeadOptions opt;
    opt.value_tol = tol;
    opt.max_evals = max_evals_per_restart;

    const Rng master(seed);
    std::vector<double> restart_values;
    restart_values.reserve(restarts);
    bool any_converged = false;
    double best = 0.0;
    std::vector<double> best_params;
    for (std::size_t r = 0; r < restarts; ++r) {
        std::vector<double> start(nparams, 0.0);
        if (r == 0) {
            for (std::size_t i = 0; i < d; ++i) start[i] = 1.0;  // L = I: maximally mixed
        } else {
            Rng rng = master.fork(r);
            for (double& p : start) p = rng.gaussian();
        }
        const NelderMeadResult res = nelder_mead(objective, std::move(start), opt);
        restart_values.push_back(-res.value);
        any_converged = any_converged || res.converged;
        if (best_params.empty() || -res.value > best) {
            best = -res.value;
            best_params = res.x;
        }
    }
    if (!any_converged) {
        throw std::runtime_error("ce_optimize: no restart converged within the evaluation cap");
    }
    return {best, density_from_factor(best_params, d), std::move(restart_values)};
}

BoundsBand depolarizing_bounds(std::size_t d, double x) {
    const double erasure_upper = (1.0 - x) * std::log2(static_cast<double>(d));
    return {c1_depolarizing(d, x), std::min(ce_depolarizing(d, x), erasure_upper)};
}

const char* method_name(Method m) {
    switch (m) {
        case Method::closed_form: return "closed_form";
        case Method::optimized: return "optimized";
        case Method::simulated: return "simulated";
    }
    return "unknown";
}

}  // namespace qcap
