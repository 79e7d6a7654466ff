#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "bqg/graph.hpp"
#include "bqg/laplacian.hpp"

namespace bqg {

using Complex = std::complex<double>;

struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Eigenvalue data of the metric-graph operator for a connected bipartite graph.
//
// The full spectrum is: 0 (simple), (alpha + 2*m*pi)^2 for each alpha in
// `alpha` and m >= 0, and (n*pi)^2 for n >= 1 with multiplicity
// `special_multiplicity`.  `alpha` holds 2*N_V - 4 values in (0, 2pi) \ {pi},
// symmetric in pairs alpha <-> 2pi - alpha, repeated per multiplicity.
struct QuantumSpectrum {
    std::vector<double> alpha;
    int special_multiplicity = 0;
    int zero_multiplicity = 1;
    int vertex_count = 0;
    int edge_count = 0;

    // The alpha values below pi, one per eigenvalue family.
    std::vector<double> alpha_interior() const;
};

struct TraceValue {
    Complex lambda;
    Complex value;
    double tail_bound = 0.0;  // zero for closed forms
};

QuantumSpectrum quantum_spectrum(const DeltaSpectrum& ds, const Graph& g);

// All eigenvalues <= lambda_max as (lambda, multiplicity), sorted ascending.
std::vector<std::pair<double, int>> eigenvalues_in_window(const QuantumSpectrum& qs,
                                                          double lambda_max);

// Partial sum of sum_n 1/(lambda_n - lambda) over shift indices |m| <= m_max,
// with a rigorous O(1/m_max) tail bound attached.
TraceValue trace_series(const QuantumSpectrum& qs, Complex lambda, long m_max);

// Closed-form resolvent trace.  Throws PoleError near eigenvalues.
TraceValue trace_closed_form(const QuantumSpectrum& qs, Complex lambda);

// Closed-form resolvent trace for K(m_B, m_R).
TraceValue trace_complete_bipartite(int m_b, int m_r, Complex lambda);

// Lattice-sum identity check: partial sum over |m| <= m_max of
// 1/((alpha + 2 pi m)^2 - lambda) against its closed form.
struct ResidueCheck {
    Complex partial;
    Complex closed_form;
    double residual;
    double tail_bound;
};
ResidueCheck residue_identity_check(double alpha, Complex lambda, long m_max);

// One bisection-refined root of the trace between consecutive distinct
// eigenvalues inside (a, b).
struct TraceRoot {
    double lower_eigenvalue;
    double upper_eigenvalue;
    double root;
    bool converged;
};
std::vector<TraceRoot> trace_root_brackets(const QuantumSpectrum& qs, double a, double b);

}  // namespace bqg
