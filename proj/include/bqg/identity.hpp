#pragma once

#include <complex>
#include <vector>

#include "bqg/graph.hpp"
#include "bqg/spectrum.hpp"
#include "bqg/tree.hpp"
#include "bqg/walks.hpp"

namespace bqg {

// Cross-multiplied residual of the trace/walk quotient identity
//   P_G(mu) tr R_CB(lambda) = P_CB(mu) tr R_G(lambda),
// with P_G truncated at `walk_truncation` steps.
struct IdentityReport {
    Complex lambda;
    Complex mu_minus;
    Complex lhs;  // P_G(mu) tr R_CB
    Complex rhs;  // P_CB(mu) tr R_G
    double residual = 0.0;
    double truncation_bound = 0.0;
    bool pass = false;
};

enum class Sheet { mu_minus_sheet, mu_plus_sheet };

struct PsiPoint {
    Complex z;
    Complex lambda;
    Sheet branch;
};

// Bundled per-graph state for the identity computations.
struct IdentityLab {
    explicit IdentityLab(const Graph& g, int walk_truncation = 20);

    IdentityReport key1_residual(Complex lambda) const;

    // Diagonal of the graph resolvent on edge e at coordinate t.
    Complex diagonal_resolvent(int e, double t, Complex lambda) const;

    // Generating-function value through the multiplier map.
    Complex extended_p(Complex z) const;

    const Graph& graph() const { return graph_; }
    const BiregularProfile& profile() const { return profile_; }
    const QuantumSpectrum& spectrum() const { return spectrum_; }
    const WalkSeries& walks() const { return walks_; }
    int comparison_m_b() const { return profile_.delta_r() + 1; }
    int comparison_m_r() const { return profile_.delta_b() + 1; }

    // Truncation tail bound for P_G at |z| = za, times `trace_scale`.
    double truncation_bound(double za, double trace_scale) const;

private:
    Graph graph_;
    BipartitePartition partition_;
    BiregularProfile profile_;
    QuantumSpectrum spectrum_;
    WalkSeries walks_;
    std::vector<std::vector<std::uint64_t>> per_edge_;  // [edge][l/2 - 1]
    int truncation_;
};

// Inverts the multiplier map: finds lambda with mu^{sheet}(lambda) = z.
PsiPoint psi_invert(Complex z, const BiregularProfile& profile);

struct CircleProbe {
    Complex center;
    double radius;
    double max_abs;     // max |P| over the sampled circle
    bool blow_up;       // max exceeded the divergence threshold
};

// Samples |extended P| in the half-step variable (value at z evaluates the
// extension at z^2) over the given circles.
std::vector<CircleProbe> pole_probe(const IdentityLab& lab,
                                    const std::vector<std::pair<Complex, double>>& circles,
                                    int samples_per_circle = 64,
                                    double blow_up_threshold = 1e8);

}  // namespace bqg
