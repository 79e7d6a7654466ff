#include "bqg/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace bqg {

namespace {

constexpr double kPi = std::numbers::pi;

Complex sin_over(Complex omega) {
    if (std::abs(omega) < 1e-4) {
        Complex w2 = omega * omega;
        return 1.0 - w2 / 6.0 + w2 * w2 / 120.0 - w2 * w2 * w2 / 5040.0;
    }
    return std::sin(omega) / omega;
}

}  // namespace

std::vector<double> QuantumSpectrum::alpha_interior() const {
    std::vector<double> out;
    for (double a : alpha)
        if (a < kPi) out.push_back(a);
    return out;
}

QuantumSpectrum quantum_spectrum(const DeltaSpectrum& ds, const Graph& g) {
    QuantumSpectrum qs;
    qs.vertex_count = g.vertex_count();
    qs.edge_count = g.edge_count();
    qs.special_multiplicity = g.edge_count() - g.vertex_count() + 2;

    for (double nu : ds.raw) {
        if (nu < -1e-12 || nu > 2.0 + 1e-12) {
            std::ostringstream msg;
            msg << "nu out of [0,2]: " << nu;
            throw std::runtime_error(msg.str());
        }
    }
    for (double nu : ds.interior()) {
        double a = std::acos(1.0 - nu);  // in (0, pi)
        qs.alpha.push_back(a);
        qs.alpha.push_back(2.0 * kPi - a);
    }
    std::sort(qs.alpha.begin(), qs.alpha.end());
    return qs;
}

std::vector<std::pair<double, int>> eigenvalues_in_window(const QuantumSpectrum& qs,
                                                          double lambda_max) {
    std::vector<double> points;
    points.reserve(64);
    std::vector<int> mults;

    points.push_back(0.0);
    mults.push_back(qs.zero_multiplicity);

    for (double a : qs.alpha) {
        for (long m = 0;; ++m) {
            double root = a + 2.0 * kPi * m;
            double lambda = root * root;
            if (lambda > lambda_max) break;
            points.push_back(lambda);
            mults.push_back(1);
        }
    }
    for (long n = 1; n * n * kPi * kPi <= lambda_max; ++n) {
        points.push_back(n * n * kPi * kPi);
        mults.push_back(qs.special_multiplicity);
    }

    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return points[i] < points[j]; });

    std::vector<std::pair<double, int>> out;
    for (std::size_t i : order) {
        double tol = 1e-10 * std::max(1.0, points[i]);
        if (!out.empty() && points[i] - out.back().first <= tol) {
            out.back().second += mults[i];
        } else {
            out.emplace_back(points[i], mults[i]);
        }
    }
    return out;
}

TraceValue trace_series(const QuantumSpectrum& qs, Complex lambda, long m_max) {
    if (m_max < 1) throw std::invalid_argument("m_max must be >= 1");

    // Reject lambda within clustering distance of an enumerated eigenvalue.
    double bound_check = std::abs(lambda) + 1.0;
    if (std::abs(lambda.imag()) < 1e-9) {
        for (const auto& [ev, mult] : eigenvalues_in_window(qs, bound_check)) {
            if (std::abs(lambda.real() - ev) < 1e-9 * std::max(1.0, ev))
                throw PoleError("lambda is an eigenvalue");
        }
    }

    // Kahan-compensated accumulation keeps the summation error well below
    // the reported tail bound.
    Complex sum = -1.0 / lambda * static_cast<double>(qs.zero_multiplicity);
    Complex comp = 0.0;
    auto accumulate = [&](Complex term) {
        Complex y = term - comp;
        Complex t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    };
    for (double a : qs.alpha_interior()) {
        for (long m = -m_max; m <= m_max; ++m) {
            double root = a + 2.0 * kPi * m;
            accumulate(1.0 / (root * root - lambda));
        }
    }
    const long n_max = 2 * m_max + 1;
    for (long n = 1; n <= n_max; ++n) {
        double root = n * kPi;
        accumulate(static_cast<double>(qs.special_multiplicity) / (root * root - lambda));
    }

    // Tail: each discarded term has |root| >= 2 pi m_max, so
    // |term| <= 1/((2 pi m)^2 - |lambda|).  Summed by integral comparison.
    double abs_lambda = std::abs(lambda);
    double cutoff = 4.0 * kPi * kPi * static_cast<double>(m_max) * m_max;
    double tail = std::numeric_limits<double>::infinity();
    if (abs_lambda < 0.5 * cutoff) {
        double q = abs_lambda / cutoff;
        int interior_families = static_cast<int>(qs.alpha_interior().size());
        double alpha_tail = interior_families * 2.0 /
                            (4.0 * kPi * kPi * (1.0 - q) * static_cast<double>(m_max));
        double special_tail = qs.special_multiplicity /
                              (kPi * kPi * (1.0 - q) * static_cast<double>(n_max));
        tail = alpha_tail + special_tail;
    }
    return TraceValue{lambda, sum, tail};
}

TraceValue trace_closed_form(const QuantumSpectrum& qs, Complex lambda) {
    if (std::abs(lambda) < 1e-12) throw PoleError("pole at lambda = 0");
    Complex omega = std::sqrt(lambda);
    Complex cw = std::cos(omega);
    Complex sw = std::sin(omega);
    double scale = std::max(1.0, std::abs(cw));

    Complex sum = 0.0;
    for (double a : qs.alpha_interior()) {
        Complex denom = cw - std::cos(a);
        if (std::abs(denom) < 1e-12 * scale) throw PoleError("pole: cos(sqrt(lambda)) = cos(alpha)");
        sum += 1.0 / denom;
    }
    if (std::abs(sw) < 1e-12) throw PoleError("pole: sin(sqrt(lambda)) = 0");

    const double n_e = qs.edge_count;
    const double n_v = qs.vertex_count;
    Complex value = (n_e - n_v) / (2.0 * lambda) + sin_over(omega) / 2.0 * sum -
                    (n_e - n_v + 2.0) * cw / (2.0 * lambda * sin_over(omega));
    return TraceValue{lambda, value, 0.0};
}

TraceValue trace_complete_bipartite(int m_b, int m_r, Complex lambda) {
    if (std::abs(lambda) < 1e-12) throw PoleError("pole at lambda = 0");
    Complex omega = std::sqrt(lambda);
    Complex cw = std::cos(omega);
    Complex sw = std::sin(omega);
    if (std::abs(sw) < 1e-12) throw PoleError("pole: sin(sqrt(lambda)) = 0");
    if (std::abs(cw) < 1e-12) throw PoleError("pole: cos(sqrt(lambda)) = 0");

    const double delta_sum = (m_b - 1) + (m_r - 1);
    const double product = static_cast<double>(m_b) * m_r;
    const double vertex_sum = m_b + m_r;
    // tan(omega)/omega = s/(lambda * ... ): write through sin/cos for stability.
    Complex value = (product - vertex_sum) / (2.0 * lambda) +
                    delta_sum * sw / (2.0 * omega * cw) -
                    (product - vertex_sum + 2.0) * cw / (2.0 * omega * sw);
    return TraceValue{lambda, value, 0.0};
}

ResidueCheck residue_identity_check(double alpha, Complex lambda, long m_max) {
    Complex partial = 0.0;
    for (long m = -m_max; m <= m_max; ++m) {
        double root = alpha + 2.0 * kPi * m;
        partial += 1.0 / (root * root - lambda);
    }
    Complex omega = std::sqrt(lambda);
    Complex closed = sin_over(omega) / 2.0 / (std::cos(omega) - std::cos(alpha));

    double abs_lambda = std::abs(lambda);
    double cutoff = 4.0 * kPi * kPi * static_cast<double>(m_max) * m_max;
    double tail = std::numeric_limits<double>::infinity();
    if (abs_lambda < 0.5 * cutoff) {
        double q = abs_lambda / cutoff;
        tail = 2.0 / (4.0 * kPi * kPi * (1.0 - q) * static_cast<double>(m_max));
    }
    return ResidueCheck{partial, closed, std::abs(partial - closed), tail};
}

std::vector<TraceRoot> trace_root_brackets(const QuantumSpectrum& qs, double a, double b) {
    if (!(a < b)) throw std::invalid_argument("empty interval");
    std::vector<double> distinct;
    for (const auto& [ev, mult] : eigenvalues_in_window(qs, b + 1.0)) {
        if (ev >= a && ev <= b) distinct.push_back(ev);
    }

    auto eval = [&](double x) { return trace_closed_form(qs, Complex(x, 0.0)).value.real(); };

    std::vector<TraceRoot> roots;
    for (std::size_t i = 0; i + 1 < distinct.size(); ++i) {
        double lo = distinct[i];
        double hi = distinct[i + 1];
        double pad = 1e-7 * std::max(1.0, hi - lo);
        double x0 = lo + pad;
        double x1 = hi - pad;
        TraceRoot root{lo, hi, 0.0, false};
        double f0 = eval(x0);
        double f1 = eval(x1);
        // The trace runs from -inf to +inf across each gap; widen the pad if
        // the endpoint samples have not yet picked up the divergent sign.
        for (int widen = 0; widen < 30 && !(f0 < 0.0 && f1 > 0.0); ++widen) {
            pad *= 0.5;
            x0 = lo + pad;
            x1 = hi - pad;
            f0 = eval(x0);
            f1 = eval(x1);
        }
        if (f0 < 0.0 && f1 > 0.0) {
            for (int iter = 0; iter < 200 && (x1 - x0) > 1e-13 * std::max(1.0, x1); ++iter) {
                double mid = 0.5 * (x0 + x1);
                if (eval(mid) < 0.0)
                    x0 = mid;
                else
                    x1 = mid;
            }
            root.root = 0.5 * (x0 + x1);
            root.converged = true;
        }
        roots.push_back(root);
    }
    return roots;
}

}  // namespace bqg
