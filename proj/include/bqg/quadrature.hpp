#pragma once

#include <complex>
#include <functional>

namespace bqg {

// Adaptive Simpson integration of a complex-valued function on [a, b].
std::complex<double> adaptive_simpson(const std::function<std::complex<double>(double)>& f,
                                      double a, double b, double abs_tol = 1e-12,
                                      int max_depth = 24);

}  // namespace bqg
