#pragma once

#include <vector>

#include "ptlattice/lattice.hpp"

namespace ptlattice {

/// Gain-ramp protocol: the loss site stays at -i*gamma_l while the gain site
/// carries the effective gain gamma_e(t) = gamma_l * (1 - 2*exp(-t/tau)),
/// which starts at -gamma_l (both sites lossy) and saturates at +gamma_l.
struct GainRamp {
    double gamma_l = 0.0;  // loss strength, energy units, > 0
    double tau = 0.0;      // ramp time constant, time units, > 0

    double effective_gain(double t) const;
};

/// Site-by-time intensity grid |psi_k(t)|^2. Times are stored in energy^-1
/// units (hbar = 1); t_alpha_unit converts to the paper-style T_alpha axis.
struct IntensityTrace {
    std::vector<double> times;
    Eigen::MatrixXd grid;        // rows = times, cols = sites, entries >= 0
    std::vector<double> total;   // per-time sum over sites
    double t_alpha_unit = 0.0;
};

/// Unit vector localized at a 1-based site.
ComplexVector localized_state(int site, int n_sites);

/// exp(-i H t), computed by Pade scaling-and-squaring. Never uses an
/// eigendecomposition: H is defective at the PT threshold. Throws
/// GrowthOverflow (carrying max Im E) if the result leaves double range.
ComplexMatrix propagator(const ComplexMatrix& h, double t);

/// |psi(t)> = G(t)|psi(0)> under the balanced static Hamiltonian, sampled at
/// the given ascending times (starting at 0). Intensities use the standard
/// inner product and may exceed unity in the broken phase.
IntensityTrace evolve_static(const LatticeSpec& spec,
                             const ComplexVector& psi0,
                             const std::vector<double>& times);

/// Time-ordered evolution under the ramp, piecewise-constant midpoint rule:
/// each sub-step applies the propagator of H evaluated at gamma_e(t + h/2).
/// The default sub-step is min(step, T_alpha/200); a convergence pass at h/2
/// must move every reported intensity by < 1e-6 relative, else h is halved
/// (StepNotConverged after 4 halvings).
IntensityTrace evolve_ramp(const LatticeSpec& spec, const GainRamp& ramp,
                           const ComplexVector& psi0,
                           const std::vector<double>& times, double step = 0.0);

}  // namespace ptlattice
