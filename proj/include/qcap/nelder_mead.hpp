#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace qcap {

struct NelderMeadOptions {
    double initial_step = 0.5;   // vertex offset along each coordinate
    double param_tol = 1e-10;    // simplex diameter in parameter space
    double value_tol = 1e-8;     // best-to-worst objective spread
    std::size_t max_evals = 60000;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value;
    std::size_t evals;
    bool converged;
};

/// Downhill simplex minimization (reflection 1, expansion 2, contraction
/// 1/2, shrink 1/2). Stops when either the simplex diameter or the
/// objective spread falls below its tolerance.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> start, const NelderMeadOptions& opt = {});

}  // namespace qcap
