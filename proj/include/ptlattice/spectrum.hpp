#pragma once

#include <utility>
#include <vector>

#include "ptlattice/lattice.hpp"

namespace ptlattice {

/// Eigenvalue list with its real/complex classification. An eigenvalue
/// counts as complex when |Im E| exceeds tol_imag = rel_tol * 2*delta.
struct SpectrumReport {
    std::vector<Complex> eigenvalues;  // sorted by (Re, then Im)
    double tol_imag = 0.0;
    int n_complex = 0;
    int n_real = 0;
    double degree_of_breaking = 0.0;   // n_complex / N
    bool is_broken = false;
};

inline constexpr double kDefaultClassifyRelTol = 1e-8;

/// All N eigenvalues of a general complex matrix (dense QR), sorted by
/// (real part, then imaginary part). Throws std::runtime_error on
/// non-convergence.
std::vector<Complex> spectrum(const ComplexMatrix& h);

SpectrumReport classify(const std::vector<Complex>& eigenvalues,
                        const Bandwidth& bandwidth,
                        double rel_tol = kDefaultClassifyRelTol);

/// True iff the multiset of eigenvalues is invariant under both E -> -E and
/// E -> conj(E), matched by greedy nearest-neighbor pairing within abs_tol.
bool check_spectral_symmetry(const std::vector<Complex>& eigenvalues,
                             double abs_tol);

/// Scaled coordinates (Re E / 2*delta, Im E / 2*delta) of every
/// complex-classified eigenvalue.
std::vector<std::pair<double, double>> complex_eigenvalue_locations(
    const SpectrumReport& report, const Bandwidth& bandwidth);

}  // namespace ptlattice
