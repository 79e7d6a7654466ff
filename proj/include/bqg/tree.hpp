#pragma once

#include <complex>
#include <vector>

#include "bqg/graph.hpp"
#include "bqg/spectrum.hpp"

namespace bqg {

struct BasisValues {
    Complex c;   // cos(omega)
    Complex s;   // sin(omega)/omega
    Complex cp;  // -omega sin(omega)
    Complex sp;  // cos(omega)
};

struct Mat2 {
    Complex a, b, c, d;

    Complex trace() const { return a + d; }
    Complex det() const { return a * d - b * c; }
    Mat2 operator*(const Mat2& o) const {
        return Mat2{a * o.a + b * o.c, a * o.b + b * o.d,
                    c * o.a + d * o.c, c * o.b + d * o.d};
    }
};

struct Vec2 {
    Complex x, y;
};

inline Vec2 operator*(const Mat2& m, const Vec2& v) {
    return Vec2{m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
}

enum class Direction { rooted_at_r, rooted_at_b };

// Two-edge transfer data at a point lambda.
struct MultiplierState {
    Complex lambda;
    Complex omega;
    Complex c, s, cp, sp;
    Complex tr_t;
    Complex det_t;
    Complex mu_plus;
    Complex mu_minus;
    bool in_band = false;
};

// Coefficients of the decaying solutions on the initial edge:
//   V(x) = v_cos cos(omega x) + v_sin sin(omega x)/omega
//   U(x) = u_cos cos(omega (1-x)) + u_sin sin(omega (1-x))/omega
struct EdgeSolutions {
    Complex omega;
    Complex v_cos, v_sin;
    Complex u_cos, u_sin;
    Complex wronskian;

    Complex v_at(double x) const;
    Complex u_at(double x) const;
    Complex v_prime_at(double x) const;
    Complex u_prime_at(double x) const;
};

BasisValues basis_values(Complex lambda);

Mat2 transition_matrix(Complex lambda, const BiregularProfile& profile,
                       Direction direction);

// Multipliers mu^{+-} labeled so |mu_minus| <= 1/sqrt(dR dB) <= |mu_plus|;
// on the band (real lambda, tr^2 <= 4 det) labels follow the limit from
// Im(lambda) > 0.
MultiplierState multipliers(Complex lambda, const BiregularProfile& profile);

// Scaled large-negative asymptotics: {exp(-2|Im sqrt(lambda)|) mu_plus,
// exp(+2|Im sqrt(lambda)|) mu_minus}, computed in log scale.
std::pair<double, double> multiplier_asymptotics(double lambda_neg,
                                                 const BiregularProfile& profile);

struct BandInterval {
    double lower;
    double upper;
};

// Maximal intervals of {lambda real : tr(T)^2 - 4 det(T) <= 0} inside
// [lambda_lo, lambda_hi], edges refined by bisection.
std::vector<BandInterval> band_scan(const BiregularProfile& profile, double lambda_lo,
                                    double lambda_hi, double step);

bool in_band(Complex lambda, const BiregularProfile& profile);

EdgeSolutions edge_solutions(Complex lambda, const BiregularProfile& profile);

// Simplified Wronskian form s(1/dB + mu)(1/dR + mu) - s c^2 (1+1/dB)(1+1/dR).
Complex wronskian(Complex lambda, const BiregularProfile& profile);
// Term-by-term evaluation of the unsimplified display, for cross-checking.
Complex wronskian_unsimplified(Complex lambda, const BiregularProfile& profile);

// Resolvent kernel on the tree for t in [0,1] and x anywhere on the
// coordinate line through the initial edge.
Complex resolvent_kernel(Complex lambda, double x, double t,
                         const BiregularProfile& profile);

// Decaying-solution values off the initial edge (V for x >= 0, U for x <= 1).
Complex v_extended(const EdgeSolutions& es, double x, const BiregularProfile& profile,
                   Complex mu_minus);
Complex u_extended(const EdgeSolutions& es, double x, const BiregularProfile& profile,
                   Complex mu_minus);

// Closed-form integral of U V over the initial edge.
Complex uv_integral(Complex lambda, const BiregularProfile& profile);

}  // namespace bqg
