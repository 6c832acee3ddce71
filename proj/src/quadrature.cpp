#include "q4/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>

namespace q4 {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::quadrature: return "quadrature";
        case Provenance::series_center: return "series_center";
        case Provenance::series_homoclinic: return "series_homoclinic";
        case Provenance::ode: return "ode";
    }
    return "?";
}

std::array<double, 6> moments(double kappa, double h, const QuadratureOptions& opts) {
    TraceOptions to;
    to.tol = opts.tol;
    return trace_oval(kappa, h, to).area;
}

namespace {

// Root of a monotone function on [lo, hi] by bisection to full precision.
template <class F>
double bisect(F f, double lo, double hi) {
    double flo = f(lo);
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        double fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::array<double, 6> moments_by_area(double kappa, double h) {
    check_kappa(kappa);
    if (!(h > center_energy() && h < loop_energy(kappa))) throw DomainError("energy outside the open period annulus");
    const double K = kappa - 1;
    // On each vertical line H is convex in y > 0 with minimum at ym(x).
    auto ym = [&](double x) { return std::sqrt((1 + K * x * x) / kappa); };
    auto floor_gap = [&](double x) { return energy(kappa, x, ym(x)) - h; };
    double left = 1.0;
    while (floor_gap(left) < 0) left *= 0.5;
    double xa = bisect(floor_gap, left, 1.0);
    double right = 2.0;
    while (floor_gap(right) < 0) right *= 2;
    double xb = bisect(floor_gap, 1.0, right);

    auto roots = [&](double x, double& r2, double& r3) {
        double m = ym(x);
        auto g = [&](double y) { return energy(kappa, x, y) - h; };
        if (g(m) >= 0) {
            r2 = r3 = m;
            return;
        }
        r2 = bisect(g, -m, m);
        double top = m + 1;
        while (g(top) < 0) top = m + 2 * (top - m);
        r3 = bisect(g, m, top);
    };

    boost::math::quadrature::tanh_sinh<double> q;
    std::array<double, 6> out{};
    for (int n = 0; n < 6; ++n) {
        auto [i, j] = kMonomials[n];
        auto f = [&](double x) {
            double r2, r3;
            roots(x, r2, r3);
            return std::pow(x, i) * (std::pow(r3, j + 1) - std::pow(r2, j + 1)) / (j + 1);
        };
        out[n] = q.integrate(f, xa, xb, 1e-12);
    }
    return out;
}

BasisVector basis(double kappa, double s, const QuadratureOptions& opts) {
    check_kappa(kappa);
    const double K = kappa - 1;
    if (!(s > 1 && s < kappa)) throw DomainError("s outside (1, kappa)");
    if (opts.enforce_guard && (s - 1 < opts.guard * K || kappa - s < opts.guard * K))
        throw GuardBandError("s inside a quadrature guard band; use the endpoint series evaluators");
    const double h = energy_of_s(kappa, s);
    TraceOptions to;
    to.tol = opts.tol;
    BasisVector b;
    b.s = s;
    b.provenance = Provenance::quadrature;
    b.J = trace_oval(kappa, h, to).loop;
    if (opts.estimate_error) {
        to.tol = opts.tol * 0.1;
        auto fine = trace_oval(kappa, h, to).loop;
        for (int i = 0; i < 6; ++i) b.err = std::max(b.err, std::abs(fine[i] - b.J[i]) / std::abs(fine[i]));
        b.J = fine;
    }
    return b;
}

std::array<f128, 6> basis_f128(f128 kappa, f128 s, double tol) {
    using boost::multiprecision::sqrt;
    f128 h = -f128(2) / f128(3) * sqrt(s / kappa);
    TraceOptions to;
    to.tol = tol;
    return trace_oval<f128>(kappa, h, to).loop;
}

}  // namespace q4
