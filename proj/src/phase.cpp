#include "ptlattice/phase.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <numeric>
#include <sstream>

#include "ptlattice/errors.hpp"
#include "ptlattice/spectrum.hpp"

namespace ptlattice {

namespace {

constexpr double kBracketCapFactor = 64.0;  // stop doubling at 64 * delta_full

// Evaluate fn(i) for i in [0, count) across a bounded pool of std::async
// tasks; results are assembled by index, so the output order never depends
// on scheduling.
template <typename Result, typename Fn>
std::vector<Result> indexed_parallel(std::size_t count, int workers, Fn fn) {
    std::vector<Result> results(count);
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    auto drain = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
            results[i] = fn(i);
    };
    std::vector<std::future<void>> pool;
    const int n_tasks = std::min<int>(workers, static_cast<int>(count));
    pool.reserve(n_tasks);
    for (int w = 0; w < n_tasks; ++w)
        pool.push_back(std::async(std::launch::async, drain));
    for (auto& f : pool) f.get();  // rethrows the first worker exception
    return results;
}

struct LogLogFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;  // RMS in log space
};

LogLogFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw DegenerateFit("scaling_fit: zero variance in log N");

    LogLogFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (fit.intercept + fit.slope * x[i]);
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

}  // namespace

bool is_pt_symmetric(const LatticeSpec& spec, double rel_tol) {
    const Bandwidth bw = clean_bandwidth(spec.n_sites, spec.alpha, spec.t0);
    const auto eigs = spectrum(build_hamiltonian(spec));
    return classify(eigs, bw, rel_tol).n_complex == 0;
}

PhasePoint critical_gamma(int n_sites, int m0, double alpha, double t0,
                          double tol_gamma) {
    const Bandwidth bw = clean_bandwidth(n_sites, alpha, t0);
    if (tol_gamma <= 0.0) tol_gamma = 1e-6 * bw.delta;

    LatticeSpec spec{n_sites, alpha, t0, m0, 0.0};
    spec.validate();

    auto symmetric_at = [&](double gamma) {
        spec.gamma = gamma;
        return is_pt_symmetric(spec);
    };

    double lo = 0.0;
    if (!symmetric_at(lo))
        throw NonMonotone("critical_gamma: broken phase at gamma=0 for N=" +
                          std::to_string(n_sites) + ", m0=" + std::to_string(m0) +
                          ", alpha=" + std::to_string(alpha));

    double hi = 2.0 * bw.delta_full;
    while (symmetric_at(hi)) {
        lo = hi;  // everything probed so far is symmetric
        hi *= 2.0;
        if (hi > kBracketCapFactor * bw.delta_full)
            throw BracketFailure("critical_gamma: no broken phase up to 64*delta_full for N=" +
                                 std::to_string(n_sites) + ", m0=" + std::to_string(m0) +
                                 ", alpha=" + std::to_string(alpha));
    }

    // Bracket invariant: lo symmetric, hi broken; bisection preserves it.
    while (hi - lo > tol_gamma) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // ran out of floating-point resolution
        (symmetric_at(mid) ? lo : hi) = mid;
    }

    PhasePoint point;
    point.m0 = m0;
    point.mu = static_cast<double>(m0) / n_sites;
    point.gamma_pt = 0.5 * (lo + hi);
    point.gamma_pt_scaled = point.gamma_pt / bw.delta;
    point.bracket_width = hi - lo;
    return point;
}

PhaseCurve phase_diagram(int n_sites, double alpha,
                         const std::vector<int>& m0_values, double t0,
                         double tol_gamma, int workers) {
    if (!std::is_sorted(m0_values.begin(), m0_values.end()) ||
        std::adjacent_find(m0_values.begin(), m0_values.end()) != m0_values.end())
        throw std::invalid_argument("phase_diagram: m0_values must be ascending and unique");

    struct Outcome {
        PhasePoint point;
        std::string error;
        bool failed = false;
    };
    const auto outcomes = indexed_parallel<Outcome>(
        m0_values.size(), workers, [&](std::size_t i) {
            Outcome out;
            try {
                out.point = critical_gamma(n_sites, m0_values[i], alpha, t0, tol_gamma);
            } catch (const std::exception& e) {
                out.failed = true;
                out.error = e.what();
            }
            return out;
        });

    PhaseCurve curve;
    curve.n_sites = n_sites;
    curve.alpha = alpha;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (outcomes[i].failed)
            curve.failures.emplace_back(m0_values[i], outcomes[i].error);
        else
            curve.points.push_back(outcomes[i].point);
    }

    // No monotonicity assertion here: gamma_pt(mu) at fixed N oscillates
    // around its rising envelope (and decreases outright for alpha=0), so
    // only the ordering by mu is guaranteed.
    return curve;
}

ScalingFit scaling_fit(const std::vector<int>& n_values, double alpha,
                       MuMode mode, double mu, double t0, double tol_gamma,
                       int workers) {
    if (n_values.size() < 5)
        throw InsufficientData("scaling_fit: need >= 5 values of N");
    for (int n : n_values)
        if (n < 20) throw InsufficientData("scaling_fit: every N must be >= 20");
    if (mode == MuMode::Closest) {
        for (int n : n_values)
            if (n % 2 != n_values.front() % 2)
                throw InsufficientData(
                    "scaling_fit: closest mode needs a single-parity N series");
    }

    auto m0_for = [&](int n) {
        switch (mode) {
            case MuMode::Farthest: return 1;
            case MuMode::Closest: return closest_m0(n);
            case MuMode::FixedMu: return m0_from_mu(mu, n);
        }
        return 1;
    };

    std::vector<int> ns = n_values;
    std::sort(ns.begin(), ns.end());

    const auto scaled = indexed_parallel<double>(ns.size(), workers, [&](std::size_t i) {
        return critical_gamma(ns[i], m0_for(ns[i]), alpha, t0, tol_gamma).gamma_pt_scaled;
    });

    ScalingFit fit;
    fit.mu_mode = mode;
    for (std::size_t i = 0; i < ns.size(); ++i)
        fit.points.push_back({ns[i], scaled[i]});

    std::vector<double> logn, logy;
    if (mode == MuMode::Closest) {
        // Asymptote from gamma_pt/delta = A + B/N over the largest-N half.
        const std::size_t half = ns.size() / 2;
        std::vector<double> inv_n, y;
        for (std::size_t i = half; i < ns.size(); ++i) {
            inv_n.push_back(1.0 / ns[i]);
            y.push_back(scaled[i]);
        }
        const LogLogFit linear = least_squares(inv_n, y);
        fit.asymptote = linear.intercept;

        for (std::size_t i = 0; i < ns.size(); ++i) {
            const double gap = std::abs(scaled[i] - fit.asymptote);
            if (gap <= 0.0) continue;  // exact hit, drop from the log fit
            logn.push_back(std::log(static_cast<double>(ns[i])));
            logy.push_back(std::log(gap));
        }
        if (logn.size() < 3)
            throw DegenerateFit("scaling_fit: too few points off the asymptote");
    } else {
        for (std::size_t i = 0; i < ns.size(); ++i) {
            logn.push_back(std::log(static_cast<double>(ns[i])));
            logy.push_back(std::log(scaled[i]));
        }
    }

    const LogLogFit loglog = least_squares(logn, logy);
    fit.exponent = loglog.slope;
    fit.residual = loglog.residual;
    return fit;
}

Staircase breaking_staircase(int n_sites, int m0, double alpha, double t0,
                             const std::vector<double>& gamma_grid) {
    if (!std::is_sorted(gamma_grid.begin(), gamma_grid.end()))
        throw std::invalid_argument("breaking_staircase: gamma_grid must be ascending");

    const Bandwidth bw = clean_bandwidth(n_sites, alpha, t0);
    LatticeSpec spec{n_sites, alpha, t0, m0, 0.0};
    spec.validate();

    Staircase result;
    for (double gamma : gamma_grid) {
        spec.gamma = gamma;
        const int n_complex = classify(spectrum(build_hamiltonian(spec)), bw).n_complex;
        result.points.push_back({gamma / bw.delta, n_complex});
        result.max_count = std::max(result.max_count, n_complex);
    }
    return result;
}

std::vector<double> staircase_grid(int n_sites, int m0, double alpha, double t0,
                                   double gamma_max, int base_points) {
    std::vector<double> grid(base_points);
    for (int i = 0; i < base_points; ++i)
        grid[i] = gamma_max * i / (base_points - 1);

    const Staircase coarse = breaking_staircase(n_sites, m0, alpha, t0, grid);

    // One refinement pass: 20 extra points inside every interval where the
    // count jumps, enough to resolve the by-two and by-four steps.
    std::vector<double> refined = grid;
    for (std::size_t i = 1; i < coarse.points.size(); ++i) {
        if (coarse.points[i].n_complex == coarse.points[i - 1].n_complex) continue;
        const double a = grid[i - 1], b = grid[i];
        for (int j = 1; j <= 20; ++j) refined.push_back(a + (b - a) * j / 21.0);
    }
    std::sort(refined.begin(), refined.end());
    refined.erase(std::unique(refined.begin(), refined.end()), refined.end());
    return refined;
}

}  // namespace ptlattice
