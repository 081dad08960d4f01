#pragma once

#include <functional>
#include <vector>

namespace hawkesnn {

struct NelderMeadOptions {
  double step_tol = 1e-8;   // simplex diameter on the transformed scale
  double f_tol = 1e-10;     // spread of objective values across the simplex
  int max_iter = 2000;
  double initial_step = 0.25;
};

struct NelderMeadResult {
  std::vector<double> x;
  double f = 0.0;
  bool converged = false;
  int iterations = 0;
};

// Minimises f.  Infinite objective values act as barriers.
NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> x0, const NelderMeadOptions& opts = {});

// Golden-section minimisation of a univariate function on [lo, hi].
double golden_section(const std::function<double(double)>& f, double lo,
                      double hi, double tol = 1e-9, int max_iter = 200);

}  // namespace hawkesnn
