#include "ptlattice/dynamics.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>
#include <string>

#include "ptlattice/errors.hpp"
#include "ptlattice/spectrum.hpp"

namespace ptlattice {

namespace {

constexpr double kOverflowNorm = 1e300;
constexpr double kRampRelTol = 1e-6;
constexpr int kMaxStepHalvings = 4;
constexpr int kDefaultSubstepsPerUnit = 200;  // sub-steps per T_alpha

void check_times(const std::vector<double>& times) {
    if (times.empty()) throw std::invalid_argument("times must be non-empty");
    if (times.front() != 0.0) throw std::invalid_argument("times must start at 0");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (times[i] <= times[i - 1])
            throw std::invalid_argument("times must be strictly ascending");
}

double max_imag_eigenvalue(const ComplexMatrix& h) {
    double max_im = 0.0;
    for (const Complex& e : spectrum(h)) max_im = std::max(max_im, e.imag());
    return max_im;
}

void record_sample(IntensityTrace& trace, std::size_t row, const ComplexVector& psi) {
    double total = 0.0;
    for (Eigen::Index k = 0; k < psi.size(); ++k) {
        const double intensity = std::norm(psi(k));
        trace.grid(static_cast<Eigen::Index>(row), k) = intensity;
        total += intensity;
    }
    trace.total[row] = total;
    if (!std::isfinite(total))
        throw GrowthOverflow("evolution overflowed double range at t index " +
                             std::to_string(row), std::numeric_limits<double>::infinity());
}

}  // namespace

double GainRamp::effective_gain(double t) const {
    return gamma_l * (1.0 - 2.0 * std::exp(-t / tau));
}

ComplexVector localized_state(int site, int n_sites) {
    if (site < 1 || site > n_sites)
        throw std::invalid_argument("localized_state: site " + std::to_string(site) +
                                    " outside [1, " + std::to_string(n_sites) + "]");
    ComplexVector psi = ComplexVector::Zero(n_sites);
    psi(site - 1) = 1.0;
    return psi;
}

ComplexMatrix propagator(const ComplexMatrix& h, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("propagator: t must be >= 0");

    // Pade scaling-and-squaring stays backward stable when H is defective at
    // the exceptional point, where a spectral decomposition breaks down.
    const ComplexMatrix g = (Complex(0.0, -t) * h).exp();
    const double norm = g.cwiseAbs().maxCoeff();
    if (!std::isfinite(norm) || norm > kOverflowNorm)
        throw GrowthOverflow("propagator: norm exceeds 1e300 at t=" + std::to_string(t) +
                                 " (max Im E = " + std::to_string(max_imag_eigenvalue(h)) + ")",
                             max_imag_eigenvalue(h));
    return g;
}

IntensityTrace evolve_static(const LatticeSpec& spec, const ComplexVector& psi0,
                             const std::vector<double>& times) {
    spec.validate();
    check_times(times);
    if (psi0.size() != spec.n_sites)
        throw std::invalid_argument("evolve_static: psi0 size mismatch");

    const ComplexMatrix h = build_hamiltonian(spec);

    IntensityTrace trace;
    trace.times = times;
    trace.grid.resize(static_cast<Eigen::Index>(times.size()), spec.n_sites);
    trace.total.resize(times.size());
    trace.t_alpha_unit = clean_bandwidth(spec.n_sites, spec.alpha, spec.t0).t_alpha_unit;

    ComplexVector psi = psi0;
    record_sample(trace, 0, psi);
    for (std::size_t i = 1; i < times.size(); ++i) {
        psi = propagator(h, times[i] - times[i - 1]) * psi;
        record_sample(trace, i, psi);
    }
    return trace;
}

namespace {

// One full ramp trace at a fixed sub-step bound h. Each requested interval
// is split into equal sub-steps no longer than h; every sub-step applies the
// constant-H propagator evaluated at the interval midpoint gain.
IntensityTrace ramp_trace(const LatticeSpec& spec, const GainRamp& ramp,
                          const ComplexVector& psi0,
                          const std::vector<double>& times, double h) {
    IntensityTrace trace;
    trace.times = times;
    trace.grid.resize(static_cast<Eigen::Index>(times.size()), spec.n_sites);
    trace.total.resize(times.size());
    trace.t_alpha_unit = clean_bandwidth(spec.n_sites, spec.alpha, spec.t0).t_alpha_unit;

    ComplexVector psi = psi0;
    record_sample(trace, 0, psi);
    for (std::size_t i = 1; i < times.size(); ++i) {
        const double span = times[i] - times[i - 1];
        const int n_sub = std::max(1, static_cast<int>(std::ceil(span / h)));
        const double h_loc = span / n_sub;
        for (int s = 0; s < n_sub; ++s) {
            const double t_mid = times[i - 1] + (s + 0.5) * h_loc;
            const ComplexMatrix h_mid =
                build_hamiltonian(spec, ramp.effective_gain(t_mid), ramp.gamma_l);
            psi = propagator(h_mid, h_loc) * psi;
        }
        record_sample(trace, i, psi);
    }
    return trace;
}

bool traces_agree(const IntensityTrace& a, const IntensityTrace& b) {
    for (Eigen::Index r = 0; r < a.grid.rows(); ++r) {
        // Absolute slack at 1e-12 of the row peak keeps empty sites from
        // demanding relative agreement on values below discretization noise.
        const double row_floor = 1e-12 * a.grid.row(r).maxCoeff();
        for (Eigen::Index c = 0; c < a.grid.cols(); ++c) {
            const double x = a.grid(r, c), y = b.grid(r, c);
            if (std::abs(x - y) > kRampRelTol * std::max(std::abs(x), std::abs(y)) + row_floor)
                return false;
        }
    }
    return true;
}

}  // namespace

IntensityTrace evolve_ramp(const LatticeSpec& spec, const GainRamp& ramp,
                           const ComplexVector& psi0,
                           const std::vector<double>& times, double step) {
    spec.validate();
    check_times(times);
    if (!(ramp.gamma_l > 0.0) || !(ramp.tau > 0.0))
        throw std::invalid_argument("evolve_ramp: gamma_l and tau must be > 0");
    if (psi0.size() != spec.n_sites)
        throw std::invalid_argument("evolve_ramp: psi0 size mismatch");

    const double t_alpha =
        clean_bandwidth(spec.n_sites, spec.alpha, spec.t0).t_alpha_unit;
    double h = t_alpha / kDefaultSubstepsPerUnit;
    if (step > 0.0) h = std::min(h, step);

    IntensityTrace coarse = ramp_trace(spec, ramp, psi0, times, h);
    for (int halving = 0; halving <= kMaxStepHalvings; ++halving) {
        IntensityTrace fine = ramp_trace(spec, ramp, psi0, times, h / 2.0);
        if (traces_agree(coarse, fine)) return fine;
        if (halving == kMaxStepHalvings)
            throw StepNotConverged("evolve_ramp: step control failed after 4 halvings (h=" +
                                   std::to_string(h) + ")");
        h /= 2.0;
        coarse = std::move(fine);
    }
    return coarse;  // unreachable
}

}  // namespace ptlattice
