#include <cmath>

#include "doctest.h"
#include "q4/ode.hpp"
#include "q4/quadrature.hpp"

using namespace q4;

TEST_CASE("energy values at equilibria") {
    for (double k : {1.5, 2.0, 5.0, 20.0}) {
        CHECK(energy(k, 1.0, 1.0) == doctest::Approx(-2.0 / 3.0).epsilon(1e-15));
        CHECK(energy(k, 0.0, 1.0 / std::sqrt(k)) == doctest::Approx(-2.0 / (3.0 * std::sqrt(k))).epsilon(1e-15));
    }
    CHECK(energy(2.0, 0.0, 0.0) == 0.0);
    CHECK(loop_energy(5.0) == doctest::Approx(-0.29814239699997197));
}

TEST_CASE("critical points and their types") {
    CHECK_THROWS_AS(critical_points(1.0), DomainError);
    for (double k : {1.5, 2.0, 5.0}) {
        auto pts = critical_points(k);
        REQUIRE(pts.size() == 4);
        CHECK(pts[0].type == "center");
        CHECK(pts[0].energy == doctest::Approx(-2.0 / 3.0));
        CHECK(pts[0].eigenvalues[0].real() == doctest::Approx(0.0));
        CHECK(std::abs(pts[0].eigenvalues[0].imag()) == doctest::Approx(2 * std::sqrt(k - 1)));
        CHECK(pts[2].type == "saddle");
        CHECK(pts[2].y == doctest::Approx(1 / std::sqrt(k)));
        CHECK(pts[2].eigenvalues[0].real() == doctest::Approx(2 * std::sqrt(k - 1)));
    }
}

TEST_CASE("energy coordinate round trip") {
    for (double k : {1.5, 2.0, 20.0}) {
        CHECK(s_of_energy(k, -2.0 / 3.0) == doctest::Approx(k));
        CHECK(s_of_energy(k, loop_energy(k)) == doctest::Approx(1.0));
        CHECK(s_of_energy(k, energy_of_s(k, 1.3)) == doctest::Approx(1.3));
        CHECK(energy_of_s(k, 1.3) < 0);
    }
}

TEST_CASE("integrator reproduces exp and cos to high order") {
    auto f = [](double, const Vec<double, 2>& y, Vec<double, 2>& d) {
        d[0] = y[1];
        d[1] = -y[0];
    };
    Vec<double, 2> y{1.0, 0.0};
    StepControl ctl;
    ctl.rtol = ctl.atol = 1e-13;
    integrate<double, 2>(f, 0.0, y, 10.0, ctl, [](auto&&...) { return true; });
    CHECK(std::abs(y[0] - std::cos(10.0)) < 1e-11);
    CHECK(std::abs(y[1] + std::sin(10.0)) < 1e-11);
    // backward integration
    integrate<double, 2>(f, 10.0, y, 0.0, ctl, [](auto&&...) { return true; });
    CHECK(std::abs(y[0] - 1.0) < 1e-11);
}

TEST_CASE("trace closes, conserves energy, stays in x > 0") {
    TraceOptions o;
    o.tol = 1e-10;
    o.keep_samples = true;
    auto tr = trace_oval(2.0, -0.55, o);
    CHECK(tr.closure_defect <= 1e-8);
    CHECK(tr.energy_drift <= 100 * o.tol);
    CHECK(tr.min_x > 0);
    CHECK(tr.samples.size() > 10);
    for (auto& smp : tr.samples) CHECK(std::abs(energy(2.0, smp[1], smp[2]) + 0.55) <= 100 * o.tol);
    CHECK(tr.loop[0] == doctest::Approx(tr.period).epsilon(1e-12));
}

TEST_CASE("trace rejects energies outside the annulus") {
    CHECK_THROWS_AS(trace_oval(2.0, -0.7), DomainError);
    CHECK_THROWS_AS(trace_oval(2.0, loop_energy(2.0)), DomainError);
    CHECK_THROWS_AS(trace_oval(0.5, -0.6), DomainError);
}

TEST_CASE("period tends to pi/sqrt(k-1) at the center and grows toward the loop") {
    for (double k : {1.5, 2.0, 5.0}) {
        double K = k - 1;
        double s = k - 1e-4 * K;
        auto tr = trace_oval(k, energy_of_s(k, s));
        CHECK(tr.period == doctest::Approx(M_PI / std::sqrt(K)).epsilon(1e-4));
        double prev = 0;
        for (double u : {0.9, 0.5, 0.1, 1e-2, 1e-3, 1e-4}) {
            double T = trace_oval(k, energy_of_s(k, 1 + u * K)).period;
            CHECK(T > prev);
            prev = T;
        }
    }
}

TEST_CASE("loop integrals are the h-derivatives of the area moments (orientation pin)") {
    const double k = 2.0, h = -0.5, e = 1e-5;
    auto tr = trace_oval(k, h, TraceOptions{1e-13});
    auto p = moments(k, h + e), m = moments(k, h - e);
    for (int i = 0; i < 6; ++i) {
        double fd = (p[i] - m[i]) / (2 * e);
        CHECK(fd == doctest::Approx(tr.loop[i]).epsilon(1e-6));
        CHECK(tr.loop[i] > 0);
    }
}

TEST_CASE("Green moments agree with 2-D quadrature") {
    const double k = 2.0, h = -0.5;
    auto a = moments(k, h);
    auto b = moments_by_area(k, h);
    for (int i = 0; i < 6; ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-6));
    CHECK(a[0] > 0);
}

TEST_CASE("moments vanish at the center") {
    auto a = moments(2.0, -2.0 / 3.0 + 1e-8);
    for (double v : a) CHECK(std::abs(v) < 1e-6);
}

TEST_CASE("basis guard bands and positivity") {
    CHECK_THROWS_AS(basis(2.0, 1.0005), GuardBandError);
    CHECK_THROWS_AS(basis(2.0, 1.9995), GuardBandError);
    for (double k : {1.5, 2.0, 5.0, 20.0}) {
        for (double u : {0.01, 0.3, 0.7, 0.99}) {
            auto b = basis(k, 1 + u * (k - 1));
            for (double v : b.J) {
                CHECK(std::isfinite(v));
                CHECK(v > 0);
            }
            CHECK(b.J[1] / b.J[0] > 0);
            CHECK(b.J[1] / b.J[0] < 1);
            CHECK(b.err < 1e-10);
        }
    }
}

TEST_CASE("basis near the center approaches a common limit") {
    for (double k : {2.0, 5.0}) {
        auto b = basis(k, k - 1.01e-3 * (k - 1));
        for (double v : b.J) CHECK(v == doctest::Approx(M_PI / std::sqrt(k - 1)).epsilon(3e-3));
    }
}

TEST_CASE("J2 tends to 3/sqrt(k-1) at the loop") {
    const double k = 2.0;
    auto b = basis(k, 1 + 1.01e-3);
    CHECK(b.J[1] == doctest::Approx(3.0).epsilon(2e-3));
}

TEST_CASE("quad precision basis matches double") {
    auto b = basis(2.0, 1.5);
    auto q = basis_f128(f128(2), f128(1.5), 1e-24);
    for (int i = 0; i < 6; ++i) CHECK(static_cast<double>(q[i]) == doctest::Approx(b.J[i]).epsilon(1e-12));
}

TEST_CASE("near-loop traces at large kappa close after exactly one lap") {
    const double k = 100.0;
    double prev = 1e300;
    for (int i = 0; i < 9; ++i) {
        double u = std::pow(10.0, -3.0 + i / 8.0);
        auto t = trace_oval(k, energy_of_s(k, 1 + u), TraceOptions{1e-13});
        CHECK(t.period < prev);  // period decreases away from the loop
        prev = t.period;
    }
}
