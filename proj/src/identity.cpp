#include "bqg/identity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace bqg {

namespace {

Complex truncated_p(const std::vector<std::uint64_t>& even_counts, double edge_weight,
                    Complex z) {
    Complex value = edge_weight;
    Complex power = 1.0;
    for (std::uint64_t count : even_counts) {
        power *= z;
        if (count != 0) value += static_cast<double>(count) * power;
    }
    return value;
}

}  // namespace

IdentityLab::IdentityLab(const Graph& g, int walk_truncation)
    : graph_(g),
      partition_(bipartite_partition(g)),
      profile_(biregular_profile(g, partition_)),
      spectrum_(quantum_spectrum(delta_spectrum(g), g)),
      walks_(walk_series(g, walk_truncation, WalkMethod::hashimoto)),
      truncation_(walk_truncation) {
    if (profile_.delta_r() * profile_.delta_b() <= 1) {
        std::ostringstream msg;
        msg << "identity requires delta_R * delta_B > 1, got profile (" << profile_.delta_r()
            << "," << profile_.delta_b() << ")";
        throw std::invalid_argument(msg.str());
    }
    per_edge_ = all_per_edge_series(g, walk_truncation);
}

double IdentityLab::truncation_bound(double za, double trace_scale) const {
    const double delta = std::max(1, walks_.max_degree - 1);
    const double r = delta * delta * za;
    if (r >= 1.0) return std::numeric_limits<double>::infinity();
    int half_terms = truncation_ / 2;
    double tail = walks_.vertex_count * walks_.max_degree / delta *
                  std::pow(r, half_terms + 1) / (1.0 - r);
    return tail * trace_scale;
}

IdentityReport IdentityLab::key1_residual(Complex lambda) const {
    MultiplierState ms = multipliers(lambda, profile_);
    Complex mu = ms.mu_minus;

    Complex tr_g = trace_closed_form(spectrum_, lambda).value;
    Complex tr_cb = trace_complete_bipartite(comparison_m_b(), comparison_m_r(), lambda).value;
    Complex p_g = generating_function(walks_, mu).value;
    Complex p_cb = complete_bipartite_closed_form(comparison_m_b(), comparison_m_r(), mu);

    IdentityReport report;
    report.lambda = lambda;
    report.mu_minus = mu;
    report.lhs = p_g * tr_cb;
    report.rhs = p_cb * tr_g;
    report.residual = std::abs(report.lhs - report.rhs);
    report.truncation_bound = truncation_bound(std::abs(mu), std::abs(tr_cb));
    report.pass = report.residual <= std::max(1e-8, report.truncation_bound);
    return report;
}

Complex IdentityLab::diagonal_resolvent(int e, double t, Complex lambda) const {
    if (e < 0 || e >= graph_.edge_count()) throw std::invalid_argument("edge index out of range");
    MultiplierState ms = multipliers(lambda, profile_);
    EdgeSolutions es = edge_solutions(lambda, profile_);
    Complex p_e = truncated_p(per_edge_[e], 1.0, ms.mu_minus);
    return p_e * es.u_at(t) * es.v_at(t) / es.wronskian;
}

Complex IdentityLab::extended_p(Complex z) const {
    PsiPoint point = psi_invert(z, profile_);
    Complex tr_g = trace_closed_form(spectrum_, point.lambda).value;
    Complex tr_cb =
        trace_complete_bipartite(comparison_m_b(), comparison_m_r(), point.lambda).value;
    double scale = std::abs(tr_g) + 1.0;
    if (std::abs(tr_cb) < 1e-14 * scale)
        throw PoleError("comparison trace vanishes at the mapped lambda");
    Complex p_cb = complete_bipartite_closed_form(comparison_m_b(), comparison_m_r(), z);
    return p_cb * tr_g / tr_cb;
}

PsiPoint psi_invert(Complex z, const BiregularProfile& profile) {
    const double dr = profile.delta_r();
    const double db = profile.delta_b();
    const double product = dr * db;
    if (std::abs(z) < 1e-14) throw std::invalid_argument("z = 0 is outside the multiplier range");

    const double critical = 1.0 / std::sqrt(product);
    if (std::abs(std::abs(z) - critical) < 1e-8 * critical)
        throw std::runtime_error("on critical circle |z| = 1/sqrt(dR dB): sheet ambiguous");
    Sheet sheet = std::abs(z) < critical ? Sheet::mu_minus_sheet : Sheet::mu_plus_sheet;

    Complex tr = z + 1.0 / (product * z);
    Complex cos2 = (tr + 1.0 / dr + 1.0 / db) / ((1.0 + 1.0 / db) * (1.0 + 1.0 / dr));
    Complex omega = std::acos(std::sqrt(cos2));
    Complex lambda = omega * omega;

    MultiplierState ms = multipliers(lambda, profile);
    Complex round_trip = sheet == Sheet::mu_minus_sheet ? ms.mu_minus : ms.mu_plus;
    if (std::abs(round_trip - z) > 1e-9 * (1.0 + std::abs(z))) {
        std::ostringstream msg;
        msg << "multiplier inversion round trip failed: |Psi(lambda(z)) - z| = "
            << std::abs(round_trip - z);
        throw std::runtime_error(msg.str());
    }
    return PsiPoint{z, lambda, sheet};
}

std::vector<CircleProbe> pole_probe(const IdentityLab& lab,
                                    const std::vector<std::pair<Complex, double>>& circles,
                                    int samples_per_circle, double blow_up_threshold) {
    std::vector<CircleProbe> out;
    out.reserve(circles.size());
    for (const auto& [center, radius] : circles) {
        CircleProbe probe{center, radius, 0.0, false};
        for (int k = 0; k < samples_per_circle; ++k) {
            double theta = 2.0 * 3.14159265358979323846 * k / samples_per_circle;
            Complex zhalf = center + radius * Complex(std::cos(theta), std::sin(theta));
            try {
                probe.max_abs = std::max(probe.max_abs, std::abs(lab.extended_p(zhalf * zhalf)));
            } catch (const PoleError&) {
                probe.max_abs = std::numeric_limits<double>::infinity();
            }
        }
        probe.blow_up = probe.max_abs > blow_up_threshold;
        out.push_back(probe);
    }
    return out;
}

}  // namespace bqg
