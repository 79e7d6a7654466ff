#include "bqg/laplacian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bqg {

std::vector<double> DeltaSpectrum::interior() const {
    std::vector<double> out;
    for (double nu : raw) {
        if (nu > cluster_tol && nu < 2.0 - cluster_tol) out.push_back(nu);
    }
    return out;
}

std::pair<Eigen::MatrixXd, Eigen::VectorXd> adjacency_and_degree(const Graph& g) {
    const int n = g.vertex_count();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [u, v] : g.edges()) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    Eigen::VectorXd deg(n);
    for (int v = 0; v < n; ++v) deg(v) = static_cast<double>(g.degree(v));
    return {a, deg};
}

DeltaSpectrum delta_spectrum(const Graph& g, double tol) {
    const int n = g.vertex_count();
    auto [a, deg] = adjacency_and_degree(g);

    Eigen::VectorXd inv_sqrt = deg.array().rsqrt();
    Eigen::MatrixXd sym = Eigen::MatrixXd::Identity(n, n) -
                          inv_sqrt.asDiagonal() * a * inv_sqrt.asDiagonal();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigensolver failed to converge");

    DeltaSpectrum ds;
    ds.raw.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(ds.raw.begin(), ds.raw.end());
    // Clamp roundoff that strays outside [0, 2].
    for (double& nu : ds.raw) nu = std::clamp(nu, 0.0, 2.0);

    ds.cluster_tol = tol;
    for (double nu : ds.raw) {
        double scale = tol * std::max(1.0, std::abs(nu));
        if (!ds.values.empty() && nu - ds.values.back() <= scale) {
            ++ds.multiplicities.back();
        } else {
            ds.values.push_back(nu);
            ds.multiplicities.push_back(1);
        }
    }
    return ds;
}

}  // namespace bqg
