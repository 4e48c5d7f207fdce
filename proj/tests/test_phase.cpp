#include <doctest.h>

#include <cmath>
#include <random>

#include "ptlattice/errors.hpp"
#include "ptlattice/phase.hpp"
#include "ptlattice/spectrum.hpp"

using namespace ptlattice;

TEST_CASE("N=2 critical strength equals t0") {
    // 2x2 closed form +-sqrt(t0^2 - gamma^2) loses reality at gamma = t0
    for (double alpha : {0.0, 1.0, 2.0}) {
        const PhasePoint p = critical_gamma(2, 1, alpha, 1.0);
        CHECK(p.gamma_pt == doctest::Approx(1.0).epsilon(1e-5));
        CHECK(p.bracket_width <= 1e-6 * clean_bandwidth(2, alpha, 1.0).delta * 1.0001);
    }
}

TEST_CASE("is_pt_symmetric around the even-lattice threshold") {
    const Bandwidth bw = clean_bandwidth(20, 2.0, 1.0);
    CHECK(is_pt_symmetric({20, 2.0, 1.0, 10, 0.0}));
    CHECK(is_pt_symmetric({20, 2.0, 1.0, 10, 1.070 * bw.delta}));
    CHECK_FALSE(is_pt_symmetric({20, 2.0, 1.0, 10, 1.08 * bw.delta}));
}

TEST_CASE("closest-impurity thresholds for the alpha=2 lattices") {
    const PhasePoint even = critical_gamma(20, 10, 2.0);
    CHECK(even.gamma_pt_scaled > 1.070);
    CHECK(even.gamma_pt_scaled < 1.074);

    const PhasePoint odd = critical_gamma(21, 10, 2.0);
    CHECK(odd.gamma_pt_scaled > 0.626);
    CHECK(odd.gamma_pt_scaled < 0.627);
}

TEST_CASE("bisection brackets the transition") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> n_dist(6, 40);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = n_dist(rng);
        std::uniform_int_distribution<int> m0_dist(1, n / 2);
        const int m0 = m0_dist(rng);
        const double alpha = trial % 3;
        const PhasePoint p = critical_gamma(n, m0, alpha);

        LatticeSpec below{n, alpha, 1.0, m0, p.gamma_pt - p.bracket_width};
        LatticeSpec above{n, alpha, 1.0, m0, p.gamma_pt + p.bracket_width};
        CHECK(is_pt_symmetric(below));
        CHECK_FALSE(is_pt_symmetric(above));
    }
}

TEST_CASE("phase curve trend and the universal closest value") {
    // alpha=2: the small-mu flank rises cleanly before the oscillatory
    // regime near mu = 1/2 sets in; the closest point sits at ~1.
    const PhaseCurve curve = phase_diagram(40, 2.0, {1, 3, 5, 7, 20}, 1.0, 0.0, 4);
    REQUIRE(curve.points.size() == 5);
    CHECK(curve.failures.empty());
    for (std::size_t i = 1; i + 1 < curve.points.size(); ++i)
        CHECK(curve.points[i].gamma_pt_scaled > curve.points[i - 1].gamma_pt_scaled);
    CHECK(curve.points.back().gamma_pt_scaled == doctest::Approx(1.0).epsilon(0.1));
    for (const PhasePoint& p : curve.points) {
        CHECK(p.mu == doctest::Approx(p.m0 / 40.0));
        CHECK(p.gamma_pt_scaled == doctest::Approx(p.gamma_pt / clean_bandwidth(40, 2.0, 1.0).delta));
    }
}

TEST_CASE("phase_diagram rejects unsorted m0 lists") {
    CHECK_THROWS_AS(phase_diagram(20, 1.0, {3, 2}), std::invalid_argument);
    CHECK_THROWS_AS(phase_diagram(20, 1.0, {2, 2}), std::invalid_argument);
}

TEST_CASE("constant-hopping fragile phase: gamma_pt ~ 1/N at mu=1/4") {
    const ScalingFit fit =
        scaling_fit({20, 40, 60, 80, 100}, 0.0, MuMode::FixedMu, 0.25, 1.0, 0.0, 4);
    CHECK(fit.exponent == doctest::Approx(-1.0).epsilon(0.1));
}

TEST_CASE("scaling_fit input validation") {
    CHECK_THROWS_AS(scaling_fit({20, 40, 60, 80}, 1.0, MuMode::Farthest),
                    InsufficientData);
    CHECK_THROWS_AS(scaling_fit({10, 40, 60, 80, 100}, 1.0, MuMode::Farthest),
                    InsufficientData);
    CHECK_THROWS_AS(scaling_fit({20, 21, 40, 41, 60}, 1.0, MuMode::Closest),
                    InsufficientData);
}

TEST_CASE("staircase: even lattice at mu=1/2 jumps 0 -> N, odd jumps 0 -> 4") {
    const Bandwidth bw_even = clean_bandwidth(20, 2.0, 1.0);
    const auto grid_even = staircase_grid(20, 10, 2.0, 1.0, 2.2 * bw_even.delta, 100);
    const Staircase even = breaking_staircase(20, 10, 2.0, 1.0, grid_even);
    int first_nonzero = 0;
    for (const auto& p : even.points)
        if (p.n_complex > 0) { first_nonzero = p.n_complex; break; }
    CHECK(first_nonzero == 20);

    const Bandwidth bw_odd = clean_bandwidth(21, 2.0, 1.0);
    const auto grid_odd = staircase_grid(21, 10, 2.0, 1.0, 1.4 * bw_odd.delta, 100);
    const Staircase odd = breaking_staircase(21, 10, 2.0, 1.0, grid_odd);
    first_nonzero = 0;
    for (const auto& p : odd.points)
        if (p.n_complex > 0) { first_nonzero = p.n_complex; break; }
    CHECK(first_nonzero == 4);
}

TEST_CASE("staircase counts are monotone and bounded by 2 m0") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> n_dist(6, 40);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = n_dist(rng);
        std::uniform_int_distribution<int> m0_dist(1, n / 2);
        const int m0 = m0_dist(rng);
        const double alpha = trial % 3;
        const Bandwidth bw = clean_bandwidth(n, alpha, 1.0);

        std::vector<double> grid;
        for (int i = 0; i <= 120; ++i) grid.push_back(10.0 * bw.delta_full * i / 120.0);
        const Staircase s = breaking_staircase(n, m0, alpha, 1.0, grid);
        CHECK(s.max_count <= 2 * m0);
        for (std::size_t i = 1; i < s.points.size(); ++i)
            CHECK(s.points[i].n_complex >= s.points[i - 1].n_complex);
    }
}
