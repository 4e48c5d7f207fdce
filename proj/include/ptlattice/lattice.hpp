#pragma once

#include <Eigen/Dense>
#include <complex>
#include <iosfwd>
#include <vector>

namespace ptlattice {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Full parameterization of the lattice and its gain/loss impurity pair.
/// Sites are 1-based everywhere in the public interface: the first impurity
/// sits at m0 (gain, +i*gamma) and its mirror at N+1-m0 (loss, -i*gamma).
struct LatticeSpec {
    int n_sites = 2;
    double alpha = 0.0;   // hopping exponent, >= 0
    double t0 = 1.0;      // hopping energy scale, > 0
    int m0 = 1;           // first impurity site, 1 <= m0 <= N/2
    double gamma = 0.0;   // balanced impurity strength, >= 0

    /// Throws std::invalid_argument on any violated precondition.
    void validate() const;

    int mirror() const { return n_sites + 1 - m0; }
    double mu() const { return static_cast<double>(m0) / n_sites; }
    /// Impurity separation d = 1 + N - 2*m0, >= 1.
    int impurity_distance() const { return 1 + n_sites - 2 * m0; }
};

/// Clean-lattice (gamma = 0) spectral spread and the unit system derived
/// from it: delta = delta_full / 4 and T_alpha = 1 / delta (hbar = 1).
struct Bandwidth {
    double delta_full = 0.0;    // E_max - E_min of the clean lattice
    double delta = 0.0;         // quarter-bandwidth
    double t_alpha_unit = 0.0;  // 1 / delta
};

int mirror_site(int m0, int n_sites);

/// m0 for the "closest impurities" configuration: N/2 (even) or (N-1)/2 (odd).
int closest_m0(int n_sites);

/// m0 = round(mu * N), clamped to [1, floor(N/2)].
int m0_from_mu(double mu, int n_sites);

/// Bond amplitudes t0 * [k(N-k)]^(alpha/2) for k = 1..N-1; palindromic.
std::vector<double> hopping_profile(int n_sites, double alpha, double t0);

/// Tridiagonal single-particle matrix with off-diagonals -t_alpha(k) and a
/// purely imaginary diagonal: +i*gain at m0, -i*loss at the mirror site.
/// The unbalanced form is used by the gain-ramp protocol; gain may be
/// negative there.
ComplexMatrix build_hamiltonian(const LatticeSpec& spec, double gain, double loss);

/// Balanced convenience wrapper, gain = loss = spec.gamma.
ComplexMatrix build_hamiltonian(const LatticeSpec& spec);

/// Exact finite-N bandwidth of the gamma = 0 lattice from a symmetric
/// tridiagonal eigensolve (not the asymptotic ~N^alpha estimate).
Bandwidth clean_bandwidth(int n_sites, double alpha, double t0);

/// Debug serialization: one "row,col,re,im" line per entry.
void write_matrix_csv(std::ostream& out, const ComplexMatrix& m);

}  // namespace ptlattice
