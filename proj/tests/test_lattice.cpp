#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ptlattice/lattice.hpp"

using namespace ptlattice;

TEST_CASE("hopping profile matches closed forms") {
    CHECK(hopping_profile(4, 0.0, 1.0) == std::vector<double>{1.0, 1.0, 1.0});
    CHECK(hopping_profile(4, 2.0, 1.0) == std::vector<double>{3.0, 4.0, 3.0});

    const auto p5 = hopping_profile(5, 1.0, 1.0);
    REQUIRE(p5.size() == 4);
    CHECK(p5[0] == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(p5[1] == doctest::Approx(std::sqrt(6.0)).epsilon(1e-15));
    CHECK(p5[2] == doctest::Approx(std::sqrt(6.0)).epsilon(1e-15));
    CHECK(p5[3] == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("hopping profile rejects bad input") {
    CHECK_THROWS_AS(hopping_profile(1, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(hopping_profile(4, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(hopping_profile(4, -1.0, 1.0), std::invalid_argument);
}

TEST_CASE("hopping profile is palindromic for arbitrary parameters") {
    for (int n : {2, 7, 16, 61, 128}) {
        for (double alpha : {0.0, 0.5, 1.0, 2.0, 3.7}) {
            const auto p = hopping_profile(n, alpha, 1.3);
            for (std::size_t k = 0; k < p.size(); ++k) {
                CHECK(p[k] > 0.0);
                CHECK(p[k] == doctest::Approx(p[p.size() - 1 - k]).epsilon(1e-15));
            }
        }
    }
}

TEST_CASE("mirror site") {
    CHECK(mirror_site(10, 21) == 12);
    CHECK(mirror_site(10, 20) == 11);
    CHECK(mirror_site(1, 100) == 100);
    CHECK_THROWS_AS(mirror_site(0, 10), std::invalid_argument);
    CHECK_THROWS_AS(mirror_site(6, 10), std::invalid_argument);
}

TEST_CASE("closest and mu-derived impurity positions") {
    CHECK(closest_m0(20) == 10);
    CHECK(closest_m0(21) == 10);
    CHECK(m0_from_mu(0.25, 100) == 25);
    CHECK(m0_from_mu(1e-9, 100) == 1);
    CHECK(m0_from_mu(0.5, 101) == 50);
}

TEST_CASE("2x2 Hamiltonian entries") {
    LatticeSpec spec{2, 0.0, 1.0, 1, 0.5};
    const ComplexMatrix h = build_hamiltonian(spec);
    CHECK(h(0, 0) == Complex(0.0, 0.5));
    CHECK(h(1, 1) == Complex(0.0, -0.5));
    CHECK(h(0, 1) == Complex(-1.0, 0.0));
    CHECK(h(1, 0) == Complex(-1.0, 0.0));
}

TEST_CASE("3x3 constant-hopping Hamiltonian") {
    LatticeSpec spec{3, 0.0, 2.0, 1, 0.7};
    const ComplexMatrix h = build_hamiltonian(spec);
    CHECK(h(0, 0) == Complex(0.0, 0.7));
    CHECK(h(1, 1) == Complex(0.0, 0.0));
    CHECK(h(2, 2) == Complex(0.0, -0.7));
    CHECK(h(0, 1).real() == doctest::Approx(-2.0));
    CHECK(h(1, 2).real() == doctest::Approx(-2.0));
    CHECK(h(0, 2) == Complex(0.0, 0.0));
}

TEST_CASE("balanced Hamiltonian is PT symmetric at matrix level") {
    // P conj(H) P = H with P the site-exchange permutation k <-> N+1-k.
    for (int n : {4, 20, 21, 37}) {
        LatticeSpec spec{n, 1.5, 1.0, n / 3 > 0 ? n / 3 : 1, 0.8};
        const ComplexMatrix h = build_hamiltonian(spec);
        const double scale = h.cwiseAbs().maxCoeff();
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                const Complex mirrored = std::conj(h(n - 1 - p, n - 1 - q));
                CHECK(std::abs(mirrored - h(p, q)) <= 1e-14 * scale);
            }
        CHECK(std::abs(h.trace()) == 0.0);
    }
}

TEST_CASE("gamma=0 Hamiltonian is exactly Hermitian") {
    LatticeSpec spec{12, 2.0, 1.0, 3, 0.0};
    const ComplexMatrix h = build_hamiltonian(spec, 0.0, 0.0);
    CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("clean bandwidth closed forms") {
    // alpha=0: cosine band, E_n = -2 t0 cos(n pi / (N+1)).
    const Bandwidth bw0 = clean_bandwidth(50, 0.0, 1.0);
    CHECK(bw0.delta_full ==
          doctest::Approx(4.0 * std::cos(std::numbers::pi / 51.0)).epsilon(1e-12));
    CHECK(bw0.delta == doctest::Approx(bw0.delta_full / 4.0).epsilon(1e-15));

    // alpha=1: equidistant ladder t0 * {-(N-1), ..., N-1}.
    const Bandwidth bw1 = clean_bandwidth(21, 1.0, 1.0);
    CHECK(bw1.delta_full == doctest::Approx(40.0).epsilon(1e-12));
    CHECK(bw1.delta == doctest::Approx(10.0).epsilon(1e-12));

    const Bandwidth bw2 = clean_bandwidth(2, 3.3, 1.0);
    CHECK(bw2.delta_full == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(bw2.delta == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(bw2.t_alpha_unit == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("bandwidth scales as N^alpha") {
    for (double alpha : {1.0, 2.0}) {
        std::vector<double> logn, logd;
        for (int n : {20, 40, 80, 160}) {
            logn.push_back(std::log(static_cast<double>(n)));
            logd.push_back(std::log(clean_bandwidth(n, alpha, 1.0).delta_full));
        }
        // two-point slope across the range
        const double slope = (logd.back() - logd.front()) / (logn.back() - logn.front());
        CHECK(slope == doctest::Approx(alpha).epsilon(0.05));
    }
}

TEST_CASE("spec validation") {
    LatticeSpec bad{10, 1.0, 1.0, 6, 0.1};  // m0 > N/2
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    LatticeSpec ok{10, 1.0, 1.0, 5, 0.1};
    CHECK_NOTHROW(ok.validate());
    CHECK(ok.mirror() == 6);
    CHECK(ok.impurity_distance() == 1);
    CHECK(ok.mu() == doctest::Approx(0.5));
}
