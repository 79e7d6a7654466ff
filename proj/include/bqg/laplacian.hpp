#pragma once

#include <vector>

#include <Eigen/Dense>

#include "bqg/graph.hpp"

namespace bqg {

// Spectrum of the normalized discrete Laplacian I - T^{-1/2} A T^{-1/2}.
// `raw` holds all N_V eigenvalues sorted ascending; `values`/`multiplicities`
// are the clustered view.
struct DeltaSpectrum {
    std::vector<double> raw;
    std::vector<double> values;
    std::vector<int> multiplicities;
    double cluster_tol = 0.0;

    // Eigenvalues strictly inside (0, 2), with repetition.
    std::vector<double> interior() const;
};

// 0/1 adjacency matrix A and the vertex degree vector.
std::pair<Eigen::MatrixXd, Eigen::VectorXd> adjacency_and_degree(const Graph& g);

DeltaSpectrum delta_spectrum(const Graph& g, double tol = 1e-8);

}  // namespace bqg
