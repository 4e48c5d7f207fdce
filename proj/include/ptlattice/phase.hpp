#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ptlattice/lattice.hpp"
#include "ptlattice/spectrum.hpp"

namespace ptlattice {

struct PhasePoint {
    double mu = 0.0;
    int m0 = 0;
    double gamma_pt = 0.0;         // energy units
    double gamma_pt_scaled = 0.0;  // gamma_pt / delta
    double bracket_width = 0.0;    // final bisection uncertainty (energy units)
};

struct PhaseCurve {
    int n_sites = 0;
    double alpha = 0.0;
    std::vector<PhasePoint> points;               // ordered by mu
    std::vector<std::pair<int, std::string>> failures;  // (m0, error message)
};

enum class MuMode { Farthest, FixedMu, Closest };

struct ScalingPoint {
    int n_sites = 0;
    double gamma_pt_scaled = 0.0;
};

struct ScalingFit {
    MuMode mu_mode = MuMode::Farthest;
    double exponent = 0.0;
    double asymptote = 0.0;  // gamma_pt(N -> inf) / delta, closest mode only
    double residual = 0.0;   // RMS of the log-log fit
    std::vector<ScalingPoint> points;
};

struct StaircasePoint {
    double gamma_over_delta = 0.0;
    int n_complex = 0;
};

struct Staircase {
    std::vector<StaircasePoint> points;
    int max_count = 0;
};

/// True iff the balanced spectrum at spec.gamma is entirely real.
bool is_pt_symmetric(const LatticeSpec& spec,
                     double rel_tol = kDefaultClassifyRelTol);

/// Bisection for the critical impurity strength. tol_gamma <= 0 selects the
/// default 1e-6 * delta. The initial bracket is [0, 2*delta_full], doubled
/// while still PT-symmetric up to 64*delta_full (BracketFailure past that).
PhasePoint critical_gamma(int n_sites, int m0, double alpha, double t0 = 1.0,
                          double tol_gamma = 0.0);

/// One critical point per m0 (ascending, deduplicated by the caller).
/// Per-point failures are recorded and the sweep continues. The points come
/// back ordered by mu; gamma_pt itself is not monotone in mu at fixed N (it
/// oscillates around the rising trend, and falls with mu for alpha=0).
/// workers > 1 evaluates points concurrently; assembly order is always the
/// input order.
PhaseCurve phase_diagram(int n_sites, double alpha,
                         const std::vector<int>& m0_values, double t0 = 1.0,
                         double tol_gamma = 0.0, int workers = 1);

/// Least-squares scaling exponent of gamma_pt/delta vs N.
///   Farthest / FixedMu: slope of log(gamma_pt/delta) vs log N.
///   Closest: asymptote A from a A + B/N fit over the largest-N half, then
///   the slope of log|gamma_pt/delta - A| vs log N. Even and odd N form
///   separate series; mixed parity is rejected.
/// Requires >= 5 values of N, each >= 20.
ScalingFit scaling_fit(const std::vector<int>& n_values, double alpha,
                       MuMode mode, double mu = 0.0, double t0 = 1.0,
                       double tol_gamma = 0.0, int workers = 1);

/// n_complex evaluated at each point of an ascending gamma grid (energy
/// units); reports the maximum attained count.
Staircase breaking_staircase(int n_sites, int m0, double alpha, double t0,
                             const std::vector<double>& gamma_grid);

/// Uniform grid on [0, gamma_max] plus a refinement pass around every
/// detected jump in n_complex.
std::vector<double> staircase_grid(int n_sites, int m0, double alpha,
                                   double t0, double gamma_max,
                                   int base_points = 400);

}  // namespace ptlattice
