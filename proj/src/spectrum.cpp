#include "ptlattice/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ptlattice {

std::vector<Complex> spectrum(const ComplexMatrix& h) {
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(h, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("spectrum: QR iteration failed to converge for N=" +
                                 std::to_string(h.rows()));

    std::vector<Complex> eigs(solver.eigenvalues().data(),
                              solver.eigenvalues().data() + h.rows());
    std::sort(eigs.begin(), eigs.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return eigs;
}

SpectrumReport classify(const std::vector<Complex>& eigenvalues,
                        const Bandwidth& bandwidth, double rel_tol) {
    if (!(rel_tol > 0.0))
        throw std::invalid_argument("classify: rel_tol must be > 0");

    SpectrumReport report;
    report.eigenvalues = eigenvalues;
    report.tol_imag = rel_tol * 2.0 * bandwidth.delta;
    for (const Complex& e : eigenvalues)
        if (std::abs(e.imag()) > report.tol_imag) ++report.n_complex;
    report.n_real = static_cast<int>(eigenvalues.size()) - report.n_complex;
    report.degree_of_breaking =
        eigenvalues.empty() ? 0.0
                            : static_cast<double>(report.n_complex) / eigenvalues.size();
    report.is_broken = report.n_complex > 0;
    return report;
}

namespace {

// Greedy nearest-neighbor matching of {transform(e)} against the original
// multiset; every match must land within abs_tol.
bool multiset_invariant(const std::vector<Complex>& eigs, double abs_tol,
                        Complex (*transform)(const Complex&)) {
    std::vector<bool> used(eigs.size(), false);
    for (const Complex& e : eigs) {
        const Complex target = transform(e);
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_idx = 0;
        for (std::size_t j = 0; j < eigs.size(); ++j) {
            if (used[j]) continue;
            const double dist = std::abs(eigs[j] - target);
            if (dist < best) {
                best = dist;
                best_idx = j;
            }
        }
        if (best > abs_tol) return false;
        used[best_idx] = true;
    }
    return true;
}

}  // namespace

bool check_spectral_symmetry(const std::vector<Complex>& eigenvalues,
                             double abs_tol) {
    if (!(abs_tol > 0.0))
        throw std::invalid_argument("check_spectral_symmetry: abs_tol must be > 0");
    return multiset_invariant(eigenvalues, abs_tol,
                              +[](const Complex& e) { return -e; }) &&
           multiset_invariant(eigenvalues, abs_tol,
                              +[](const Complex& e) { return std::conj(e); });
}

std::vector<std::pair<double, double>> complex_eigenvalue_locations(
    const SpectrumReport& report, const Bandwidth& bandwidth) {
    const double half_bandwidth = 2.0 * bandwidth.delta;
    std::vector<std::pair<double, double>> locations;
    for (const Complex& e : report.eigenvalues)
        if (std::abs(e.imag()) > report.tol_imag)
            locations.emplace_back(e.real() / half_bandwidth, e.imag() / half_bandwidth);
    return locations;
}

}  // namespace ptlattice
