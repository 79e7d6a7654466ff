#include "bqg/quadrature.hpp"

#include <cmath>

namespace bqg {

namespace {

using C = std::complex<double>;
using Fn = std::function<C(double)>;

C recurse(const Fn& f, double a, double b, const C& fa, const C& fm, const C& fb,
          const C& whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    C flm = f(lm);
    C frm = f(rm);
    C left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    C right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    C delta = left + right - whole;
    // Stop at the requested tolerance or at double precision, whichever is
    // coarser; the relative floor keeps large-magnitude integrands from
    // recursing forever.
    double floor = 1e-15 * (std::abs(left) + std::abs(right));
    if (depth <= 0 || std::abs(delta) <= 15.0 * std::max(tol, floor))
        return left + right + delta / 15.0;
    return recurse(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           recurse(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

}  // namespace

C adaptive_simpson(const Fn& f, double a, double b, double abs_tol, int max_depth) {
    C fa = f(a);
    C fb = f(b);
    C fm = f(0.5 * (a + b));
    C whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return recurse(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

}  // namespace bqg
