#include "bqg/tree.hpp"

#include <cmath>
#include <stdexcept>

namespace bqg {

namespace {

void require_profile(const BiregularProfile& profile) {
    if (profile.delta_r() < 1 || profile.delta_b() < 1)
        throw std::invalid_argument("tree operations require degrees >= 2 in both classes");
}

Complex sin_over(Complex omega) {
    if (std::abs(omega) < 1e-4) {
        Complex w2 = omega * omega;
        return 1.0 - w2 / 6.0 + w2 * w2 / 120.0 - w2 * w2 * w2 / 5040.0;
    }
    return std::sin(omega) / omega;
}

struct EigPair {
    Complex small;  // |small| <= |large|
    Complex large;
};

EigPair eig_pair(Complex tr, Complex det) {
    Complex w = std::sqrt(tr * tr / 4.0 - det);
    Complex r1 = tr / 2.0 + w;
    Complex r2 = tr / 2.0 - w;
    // Recompute the smaller root from the product for accuracy.
    if (std::abs(r1) >= std::abs(r2)) {
        r2 = std::abs(r1) > 0.0 ? det / r1 : r2;
        return EigPair{r2, r1};
    }
    r1 = std::abs(r2) > 0.0 ? det / r2 : r1;
    return EigPair{r1, r2};
}

}  // namespace

BasisValues basis_values(Complex lambda) {
    Complex omega = std::sqrt(lambda);
    Complex c = std::cos(omega);
    Complex s = sin_over(omega);
    Complex cp = -omega * std::sin(omega);
    return BasisValues{c, s, cp, c};
}

Mat2 transition_matrix(Complex lambda, const BiregularProfile& profile,
                       Direction direction) {
    require_profile(profile);
    const double dr = profile.delta_r();
    const double db = profile.delta_b();
    auto [c, s, cp, sp] = basis_values(lambda);

    Mat2 m0{c, s, cp, sp};
    Mat2 jr{1.0, 0.0, 0.0, 1.0 / dr};
    Mat2 jb{1.0, 0.0, 0.0, 1.0 / db};
    if (direction == Direction::rooted_at_r) return jr * m0 * jb * m0;

    Mat2 m1{sp, -s, -cp, c};
    return jb * m1 * jr * m1;
}

MultiplierState multipliers(Complex lambda, const BiregularProfile& profile) {
    require_profile(profile);
    const double dr = profile.delta_r();
    const double db = profile.delta_b();

    MultiplierState ms;
    ms.lambda = lambda;
    ms.omega = std::sqrt(lambda);
    auto bv = basis_values(lambda);
    ms.c = bv.c;
    ms.s = bv.s;
    ms.cp = bv.cp;
    ms.sp = bv.sp;
    ms.det_t = 1.0 / (dr * db);
    // tr T = c^2 (1 + 1/(dB dR)) - sin^2(omega) (1/dR + 1/dB); sin^2 = -s*cp.
    ms.tr_t = bv.c * bv.c * (1.0 + 1.0 / (dr * db)) + bv.s * bv.cp * (1.0 / dr + 1.0 / db);
    ms.in_band = in_band(lambda, profile);

    auto pair = eig_pair(ms.tr_t, ms.det_t);
    double gap = std::abs(pair.large) - std::abs(pair.small);
    if (gap > 1e-12 * std::abs(pair.large)) {
        ms.mu_minus = pair.small;
        ms.mu_plus = pair.large;
        return ms;
    }

    // Coalescing moduli: real lambda on the band.  Label by the limit from
    // the upper half plane.
    double eps = 1e-9 * (1.0 + std::abs(lambda));
    MultiplierState shifted = multipliers(lambda + Complex(0.0, eps), profile);
    if (std::abs(pair.small - shifted.mu_minus) <= std::abs(pair.large - shifted.mu_minus)) {
        ms.mu_minus = pair.small;
        ms.mu_plus = pair.large;
    } else {
        ms.mu_minus = pair.large;
        ms.mu_plus = pair.small;
    }
    return ms;
}

std::pair<double, double> multiplier_asymptotics(double lambda_neg,
                                                 const BiregularProfile& profile) {
    require_profile(profile);
    if (lambda_neg > -100.0)
        throw std::invalid_argument("asymptotic regime requires lambda <= -100");
    const double dr = profile.delta_r();
    const double db = profile.delta_b();

    const double y = std::sqrt(-lambda_neg);  // |Im sqrt(lambda)|
    const double q = std::exp(-2.0 * y);
    // exp(-2y) cos^2 = ((1+q)/2)^2, exp(-2y) sin^2 = -((1-q)/2)^2.
    double cos2_scaled = (1.0 + q) * (1.0 + q) / 4.0;
    double sin2_scaled = -(1.0 - q) * (1.0 - q) / 4.0;
    double tr_scaled = cos2_scaled * (1.0 + 1.0 / (dr * db)) - sin2_scaled * (1.0 / dr + 1.0 / db);
    double det_scaled = q * q / (dr * db);

    double mu_plus_scaled = tr_scaled / 2.0 + std::sqrt(tr_scaled * tr_scaled / 4.0 - det_scaled);
    double mu_minus_scaled = (1.0 / (dr * db)) / mu_plus_scaled;
    return {mu_plus_scaled, mu_minus_scaled};
}

namespace {

double discriminant_real(double lambda, const BiregularProfile& profile) {
    const double dr = profile.delta_r();
    const double db = profile.delta_b();
    double c2, s2;  // cos^2(omega), sin^2(omega) for real lambda
    if (lambda >= 0.0) {
        double w = std::sqrt(lambda);
        c2 = std::cos(w) * std::cos(w);
        s2 = 1.0 - c2;
    } else {
        double y = std::sqrt(-lambda);
        double ch = std::cosh(y);
        c2 = ch * ch;
        s2 = 1.0 - c2;  // sin^2(iy) = -sinh^2(y)
    }
    double tr = c2 * (1.0 + 1.0 / (dr * db)) - s2 * (1.0 / dr + 1.0 / db);
    return tr * tr - 4.0 / (dr * db);
}

}  // namespace

bool in_band(Complex lambda, const BiregularProfile& profile) {
    require_profile(profile);
    if (lambda.imag() != 0.0) return false;
    double d = discriminant_real(lambda.real(), profile);
    return d <= 1e-12 * (1.0 + std::abs(d));
}

std::vector<BandInterval> band_scan(const BiregularProfile& profile, double lambda_lo,
                                    double lambda_hi, double step) {
    require_profile(profile);
    if (!(step > 0.0) || !(lambda_hi > lambda_lo))
        throw std::invalid_argument("band_scan needs a positive step and nonempty range");

    auto inside = [&](double x) { return discriminant_real(x, profile) <= 0.0; };
    auto refine = [&](double out, double in) {
        for (int i = 0; i < 80; ++i) {
            double mid = 0.5 * (out + in);
            if (inside(mid))
                in = mid;
            else
                out = mid;
        }
        return 0.5 * (out + in);
    };

    std::vector<BandInterval> bands;
    bool was_inside = inside(lambda_lo);
    double band_start = was_inside ? lambda_lo : 0.0;
    for (double x = lambda_lo + step; x <= lambda_hi + 0.5 * step; x += step) {
        double clamped = std::min(x, lambda_hi);
        bool now_inside = inside(clamped);
        if (now_inside && !was_inside) {
            band_start = refine(clamped - step, clamped);
        } else if (!now_inside && was_inside) {
            double prev = std::max(lambda_lo, clamped - step);
            bands.push_back(BandInterval{band_start, refine(clamped, prev)});
        }
        was_inside = now_inside;
    }
    if (was_inside) bands.push_back(BandInterval{band_start, lambda_hi});
    return bands;
}

Complex EdgeSolutions::v_at(double x) const {
    return v_cos * std::cos(omega * x) + v_sin * sin_over(omega * x) * x;
}

Complex EdgeSolutions::v_prime_at(double x) const {
    return -v_cos * omega * std::sin(omega * x) + v_sin * std::cos(omega * x);
}

Complex EdgeSolutions::u_at(double x) const {
    double xi = 1.0 - x;
    return u_cos * std::cos(omega * xi) + u_sin * sin_over(omega * xi) * xi;
}

Complex EdgeSolutions::u_prime_at(double x) const {
    double xi = 1.0 - x;
    return u_cos * omega * std::sin(omega * xi) - u_sin * std::cos(omega * xi);
}

EdgeSolutions edge_solutions(Complex lambda, const BiregularProfile& profile) {
    require_profile(profile);
    const double dr = profile.delta_r();
    const double db = profile.delta_b();

    MultiplierState ms = multipliers(lambda, profile);
    EdgeSolutions es;
    es.omega = ms.omega;
    es.v_cos = ms.s * ms.c * (1.0 + 1.0 / db);
    es.v_sin = ms.mu_minus - ms.c * ms.c - ms.s * ms.cp / db;
    es.u_cos = -ms.s * ms.c * (1.0 + 1.0 / dr);
    es.u_sin = -(ms.mu_minus - ms.c * ms.c - ms.s * ms.cp / dr);

    double scale = 1.0 + std::abs(ms.mu_minus) + std::abs(ms.c * ms.c);
    if ((std::abs(es.v_cos) + std::abs(es.v_sin)) < 1e-13 * scale ||
        (std::abs(es.u_cos) + std::abs(es.u_sin)) < 1e-13 * scale)
        throw std::runtime_error("degenerate eigenvector");

    es.wronskian = wronskian(lambda, profile);
    return es;
}

Complex wronskian(Complex lambda, const BiregularProfile& profile) {
    require_profile(profile);
    const double dr = profile.delta_r();
    const double db = profile.delta_b();
    MultiplierState ms = multipliers(lambda, profile);
    return ms.s * (1.0 / db + ms.mu_minus) * (1.0 / dr + ms.mu_minus) -
           ms.s * ms.c * ms.c * (1.0 + 1.0 / db) * (1.0 + 1.0 / dr);
}

Complex wronskian_unsimplified(Complex lambda, const BiregularProfile& profile) {
    require_profile(profile);
    const double dr = profile.delta_r();
    const double db = profile.delta_b();
    MultiplierState ms = multipliers(lambda, profile);
    Complex a = ms.s * ms.c * (1.0 + 1.0 / db);
    Complex b = ms.mu_minus - ms.c * ms.c - ms.s * ms.cp / db;
    Complex cc = ms.s * ms.c * (1.0 + 1.0 / dr);
    Complex d = ms.mu_minus - ms.c * ms.c - ms.s * ms.cp / dr;
    return (a * ms.cp + b * ms.c) * cc + ms.s * ((1.0 + 1.0 / db) * ms.c * ms.c + b) * d;
}

namespace {

Vec2 basis_eval(Complex omega, double tau, const Vec2& data) {
    // Solution with data (value, derivative) at tau = 0, evaluated at tau.
    Complex value = data.x * std::cos(omega * tau) + data.y * sin_over(omega * tau) * tau;
    Complex deriv = -data.x * omega * std::sin(omega * tau) + data.y * std::cos(omega * tau);
    return Vec2{value, deriv};
}

Complex ipow(Complex base, long n) {
    Complex out = 1.0;
    for (long i = 0; i < n; ++i) out *= base;
    return out;
}

}  // namespace

Complex v_extended(const EdgeSolutions& es, double x, const BiregularProfile& profile,
                   Complex mu_minus) {
    if (x < 0.0) throw std::invalid_argument("V is defined for x >= 0");
    const double db = profile.delta_b();

    long period = static_cast<long>(std::floor(x / 2.0));
    double local = x - 2.0 * period;
    Complex factor = ipow(mu_minus, period);
    Vec2 data{es.v_cos * factor, es.v_sin * factor};
    if (local <= 1.0) return basis_eval(es.omega, local, data).x;

    Vec2 at_vertex = basis_eval(es.omega, 1.0, data);
    at_vertex.y /= db;  // jump across the odd vertex
    return basis_eval(es.omega, local - 1.0, at_vertex).x;
}

Complex u_extended(const EdgeSolutions& es, double x, const BiregularProfile& profile,
                   Complex mu_minus) {
    if (x > 1.0) throw std::invalid_argument("U is defined for x <= 1");
    const double dr = profile.delta_r();

    // Mirrored coordinate xi = 1 - x >= 0; U(x) = f(xi) where f has data
    // (u_cos, u_sin) at xi = 0 and jumps 1/dR at odd xi, 1/dB at even xi > 0.
    double xi = 1.0 - x;
    long period = static_cast<long>(std::floor(xi / 2.0));
    double local = xi - 2.0 * period;
    Complex factor = ipow(mu_minus, period);
    Vec2 data{es.u_cos * factor, es.u_sin * factor};
    if (local <= 1.0) return basis_eval(es.omega, local, data).x;

    Vec2 at_vertex = basis_eval(es.omega, 1.0, data);
    at_vertex.y /= dr;  // jump across x = even vertex
    return basis_eval(es.omega, local - 1.0, at_vertex).x;
}

Complex resolvent_kernel(Complex lambda, double x, double t,
                         const BiregularProfile& profile) {
    require_profile(profile);
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("t must lie in [0,1]");
    if (in_band(lambda, profile)) throw std::runtime_error("lambda in spectrum (band)");

    EdgeSolutions es = edge_solutions(lambda, profile);
    MultiplierState ms = multipliers(lambda, profile);
    double scale = std::abs(es.v_cos) + std::abs(es.v_sin) + std::abs(es.u_cos) +
                   std::abs(es.u_sin);
    if (std::abs(es.wronskian) < 1e-12 * scale * scale)
        throw std::runtime_error("lambda in spectrum (Wronskian zero)");

    if (x <= t) return u_extended(es, x, profile, ms.mu_minus) * es.v_at(t) / es.wronskian;
    return es.u_at(t) * v_extended(es, x, profile, ms.mu_minus) / es.wronskian;
}

Complex uv_integral(Complex lambda, const BiregularProfile& profile) {
    require_profile(profile);
    EdgeSolutions es = edge_solutions(lambda, profile);
    Complex omega = es.omega;
    auto bv = basis_values(lambda);
    Complex c = bv.c;
    Complex s = bv.s;

    // Product-to-sum integrals over [0,1]:
    //   int cos(wt) cos(w(1-t)) = (c + s)/2
    //   int cos(wt) sin(w(1-t))/w = int sin(wt)/w cos(w(1-t)) = s/2
    //   int sin(wt) sin(w(1-t))/w^2 = (s - c)/(2 w^2)
    Complex i_cc = (c + s) / 2.0;
    Complex i_cs = s / 2.0;
    Complex i_ss;
    if (std::abs(omega) < 1e-2) {
        Complex w2 = omega * omega;
        i_ss = 1.0 / 6.0 - w2 / 60.0 + w2 * w2 / 1680.0 - w2 * w2 * w2 / 90720.0;
    } else {
        i_ss = (s - c) / (2.0 * omega * omega);
    }

    return es.u_cos * es.v_cos * i_cc + (es.u_cos * es.v_sin + es.u_sin * es.v_cos) * i_cs +
           es.u_sin * es.v_sin * i_ss;
}

}  // namespace bqg
