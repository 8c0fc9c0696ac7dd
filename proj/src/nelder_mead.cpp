#include "qcap/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qcap {

namespace {

double diameter(const std::vector<std::vector<double>>& simplex) {
    double dia = 0.0;
    for (std::size_t i = 1; i < simplex.size(); ++i)
        for (std::size_t k = 0; k < simplex[i].size(); ++k)
            dia = std::max(dia, std::abs(simplex[i][k] - simplex[0][k]));
    return dia;
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> start, const NelderMeadOptions& opt) {
    const std::size_t n = start.size();
    if (n == 0) throw std::invalid_argument("nelder_mead: empty parameter vector");

    std::vector<std::vector<double>> simplex(n + 1, start);
    for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += opt.initial_step;

    std::size_t evals = 0;
    auto eval = [&](const std::vector<double>& x) {
        ++evals;
        return f(x);
    };
    std::vector<double> values(n + 1);
    for (std::size_t i = 0; i <= n; ++i) values[i] = eval(simplex[i]);

    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), candidate(n);
    bool converged = false;
    while (evals < opt.max_evals) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();

        if (values[worst] - values[best] <= opt.value_tol || diameter(simplex) <= opt.param_tol) {
            converged = true;
            break;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        auto blend = [&](double t) {
            for (std::size_t k = 0; k < n; ++k)
                candidate[k] = centroid[k] + t * (simplex[worst][k] - centroid[k]);
        };

        blend(-1.0);  // reflect
        const double reflected = eval(candidate);
        if (reflected < values[best]) {
            const std::vector<double> reflected_point = candidate;
            blend(-2.0);  // expand
            const double expanded = eval(candidate);
            if (expanded < reflected) {
                simplex[worst] = candidate;
                values[worst] = expanded;
            } else {
                simplex[worst] = reflected_point;
                values[worst] = reflected;
            }
            continue;
        }
        const std::size_t second_worst = order[n - 1];
        if (reflected < values[second_worst]) {
            simplex[worst] = candidate;
            values[worst] = reflected;
            continue;
        }
        blend(reflected < values[worst] ? -0.5 : 0.5);  // contract toward the better side
        const double contracted = eval(candidate);
        if (contracted < std::min(reflected, values[worst])) {
            simplex[worst] = candidate;
            values[worst] = contracted;
            continue;
        }
        // shrink toward the best vertex
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == best) continue;
            for (std::size_t k = 0; k < n; ++k)
                simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
            values[i] = eval(simplex[i]);
        }
    }

    const std::size_t best =
        std::distance(values.begin(), std::min_element(values.begin(), values.end()));
    return {simplex[best], values[best], evals, converged};
}

}  // namespace qcap
