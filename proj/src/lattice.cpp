#include "ptlattice/lattice.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ptlattice {

void LatticeSpec::validate() const {
    if (n_sites < 2)
        throw std::invalid_argument("n_sites must be >= 2, got " + std::to_string(n_sites));
    if (!(t0 > 0.0))
        throw std::invalid_argument("t0 must be > 0, got " + std::to_string(t0));
    if (!(alpha >= 0.0))
        throw std::invalid_argument("alpha must be >= 0, got " + std::to_string(alpha));
    if (!(gamma >= 0.0))
        throw std::invalid_argument("gamma must be >= 0, got " + std::to_string(gamma));
    if (m0 < 1 || m0 > n_sites / 2)
        throw std::invalid_argument("m0 must satisfy 1 <= m0 <= N/2, got m0=" +
                                    std::to_string(m0) + " for N=" + std::to_string(n_sites));
}

int mirror_site(int m0, int n_sites) {
    if (m0 < 1 || m0 > n_sites / 2)
        throw std::invalid_argument("m0 must satisfy 1 <= m0 <= N/2, got m0=" +
                                    std::to_string(m0) + " for N=" + std::to_string(n_sites));
    return n_sites + 1 - m0;
}

int closest_m0(int n_sites) {
    return n_sites % 2 == 0 ? n_sites / 2 : (n_sites - 1) / 2;
}

int m0_from_mu(double mu, int n_sites) {
    int m0 = static_cast<int>(std::lround(mu * n_sites));
    return std::max(1, std::min(m0, n_sites / 2));
}

std::vector<double> hopping_profile(int n_sites, double alpha, double t0) {
    if (n_sites < 2)
        throw std::invalid_argument("hopping_profile: n_sites must be >= 2");
    if (!(t0 > 0.0))
        throw std::invalid_argument("hopping_profile: t0 must be > 0");
    if (!(alpha >= 0.0))
        throw std::invalid_argument("hopping_profile: alpha must be >= 0");

    std::vector<double> profile(n_sites - 1);
    for (int k = 1; k < n_sites; ++k)
        profile[k - 1] = t0 * std::pow(static_cast<double>(k) * (n_sites - k), alpha / 2.0);
    return profile;
}

ComplexMatrix build_hamiltonian(const LatticeSpec& spec, double gain, double loss) {
    spec.validate();
    if (!std::isfinite(gain) || !std::isfinite(loss))
        throw std::invalid_argument("build_hamiltonian: gain and loss must be finite");

    const int n = spec.n_sites;
    ComplexMatrix h = ComplexMatrix::Zero(n, n);
    const auto hopping = hopping_profile(n, spec.alpha, spec.t0);
    for (int k = 0; k < n - 1; ++k) {
        h(k, k + 1) = -hopping[k];
        h(k + 1, k) = -hopping[k];
    }
    h(spec.m0 - 1, spec.m0 - 1) = Complex(0.0, gain);
    h(spec.mirror() - 1, spec.mirror() - 1) = Complex(0.0, -loss);
    return h;
}

ComplexMatrix build_hamiltonian(const LatticeSpec& spec) {
    return build_hamiltonian(spec, spec.gamma, spec.gamma);
}

Bandwidth clean_bandwidth(int n_sites, double alpha, double t0) {
    const auto hopping = hopping_profile(n_sites, alpha, t0);

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n_sites, n_sites);
    for (int k = 0; k < n_sites - 1; ++k) {
        h(k, k + 1) = -hopping[k];
        h(k + 1, k) = -hopping[k];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("clean_bandwidth: eigensolver failed for N=" +
                                 std::to_string(n_sites));

    Bandwidth bw;
    bw.delta_full = solver.eigenvalues().maxCoeff() - solver.eigenvalues().minCoeff();
    bw.delta = bw.delta_full / 4.0;
    bw.t_alpha_unit = 1.0 / bw.delta;
    return bw;
}

void write_matrix_csv(std::ostream& out, const ComplexMatrix& m) {
    out << "row,col,re,im\n";
    out.precision(17);
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            out << (r + 1) << ',' << (c + 1) << ',' << m(r, c).real() << ','
                << m(r, c).imag() << '\n';
}

}  // namespace ptlattice
