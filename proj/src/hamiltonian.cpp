#include "q4/hamiltonian.hpp"

#include <algorithm>
#include <limits>

#include "q4/float128.hpp"
#include "q4/ode.hpp"

namespace q4 {

void check_kappa(double kappa) {
    if (!(kappa > 1.0) || !std::isfinite(kappa)) throw DomainError("kappa must be a finite number > 1");
}

std::vector<CriticalPoint> critical_points(double kappa) {
    check_kappa(kappa);
    const double K = kappa - 1.0, r = 1.0 / std::sqrt(kappa);
    std::vector<CriticalPoint> out;
    for (auto [x, y] : {std::pair{1.0, 1.0}, std::pair{-1.0, -1.0}, std::pair{0.0, r}, std::pair{0.0, -r}}) {
        // Jacobian of the vector field.
        double a = -2 * K * x, b = 2 * kappa * y, c = -2 * K * (2 * x - y), d = 2 * K * x;
        double tr = a + d, det = a * d - b * c;
        std::complex<double> disc = std::sqrt(std::complex<double>(tr * tr / 4 - det));
        CriticalPoint p;
        p.x = x;
        p.y = y;
        p.energy = energy(kappa, x, y);
        p.eigenvalues = {tr / 2 + disc, tr / 2 - disc};
        p.type = det > 0 ? "center" : "saddle";
        out.push_back(p);
    }
    return out;
}

template <class T>
T section_start(T kappa, T h) {
    using std::abs;
    // H(x,1) increases for x > 1 from -2/3.
    T lo = T(1), hi = T(2);
    while (energy(kappa, hi, T(1)) < h) hi *= T(2);
    for (int i = 0; i < 400 && hi - lo > std::numeric_limits<T>::epsilon() * hi; ++i) {
        T mid = (lo + hi) / T(2);
        (energy(kappa, mid, T(1)) < h ? lo : hi) = mid;
    }
    T x = (lo + hi) / T(2);
    // Newton polish; the slope 2K x(x-1) is bounded away from zero here.
    for (int i = 0; i < 3; ++i) {
        T d = T(2) * (kappa - T(1)) * x * (x - T(1));
        if (d == T(0)) break;
        x -= (energy(kappa, x, T(1)) - h) / d;
    }
    return x;
}

template <class T>
OvalTraceT<T> trace_oval(T kappa, T h, const TraceOptions& opts) {
    using std::abs;
    using std::sqrt;
    check_kappa(static_cast<double>(kappa));
    const T hc = T(-2) / T(3), hl = T(-2) / (T(3) * sqrt(kappa));
    if (!(h > hc && h < hl)) throw DomainError("energy outside the open period annulus");

    constexpr std::size_t N = 14;
    using V = Vec<T, N>;
    auto rhs = [kappa](T, const V& z, V& d) {
        const T x = z[0], y = z[1];
        T dx, dy;
        vector_field(kappa, x, y, dx, dy);
        d[0] = dx;
        d[1] = dy;
        const T xi = T(1) / x, y2 = y * y;
        // loop integrals: x^i y^j
        d[2] = T(1);
        d[3] = x * y;
        d[4] = xi;
        d[5] = xi * y;
        d[6] = x;
        d[7] = y;
        // area moments via Green's theorem along the clockwise orbit
        d[8] = -x * dy;
        d[9] = -x * x / T(2) * y * dy;
        d[10] = xi * y * dx;
        d[11] = xi * y2 / T(2) * dx;
        d[12] = -x * x / T(2) * dy;
        d[13] = -x * y * dy;
    };

    OvalTraceT<T> out;
    out.kappa = kappa;
    out.h = h;
    out.x0 = section_start(kappa, h);
    V z{};
    z[0] = out.x0;
    z[1] = T(1);
    out.min_x = out.x0;

    StepControl ctl;
    ctl.rtol = opts.tol;
    ctl.atol = opts.tol;
    ctl.h_init = 1e-3 * M_PI / std::sqrt(static_cast<double>(kappa) - 1.0);
    if (opts.keep_samples) out.samples.push_back({0.0, static_cast<double>(z[0]), 1.0});

    bool returned = false;
    T t_ret{};
    V z_ret{};
    auto on_step = [&](T tp, const V& zp, T t, const V& zn, T) {
        ++out.steps;
        out.min_x = std::min(out.min_x, zn[0]);
        T drift = abs(energy(kappa, zn[0], zn[1]) - h);
        out.energy_drift = std::max(out.energy_drift, drift);
        // downward crossings of y = 1 only happen at x > 1; a long step may land left of it
        if (zp[1] > T(1) && zn[1] <= T(1) && (zp[0] > T(1) || zn[0] > T(1))) {
            // Newton on the crossing time using single steps from the previous node.
            T dy_p, dy_n, dx_;
            vector_field(kappa, zp[0], zp[1], dx_, dy_p);
            vector_field(kappa, zn[0], zn[1], dx_, dy_n);
            T tau = (t - tp) * (zp[1] - T(1)) / (zp[1] - zn[1]);
            V zt = zn;
            for (int it = 0; it < 30; ++it) {
                zt = rkf78_step<T, N>(rhs, tp, zp, tau);
                T dxt, dyt;
                vector_field(kappa, zt[0], zt[1], dxt, dyt);
                T step = (zt[1] - T(1)) / dyt;
                tau -= step;
                if (abs(step) <= T(8) * std::numeric_limits<T>::epsilon() * (t - tp)) {
                    zt = rkf78_step<T, N>(rhs, tp, zp, tau);
                    break;
                }
            }
            t_ret = tp + tau;
            z_ret = zt;
            returned = true;
            if (opts.keep_samples)
                out.samples.push_back({static_cast<double>(t_ret), static_cast<double>(zt[0]),
                                       static_cast<double>(zt[1])});
            return false;
        }
        if (opts.keep_samples)
            out.samples.push_back({static_cast<double>(t), static_cast<double>(zn[0]), static_cast<double>(zn[1])});
        return true;
    };
    integrate<T, N>(rhs, T(0), z, T(opts.max_time), ctl, on_step);
    if (!returned) throw IntegrationError("no return to the section within max_time (near-homoclinic breakdown)");

    out.period = t_ret;
    for (int i = 0; i < 6; ++i) {
        out.loop[i] = z_ret[2 + i];
        out.area[i] = z_ret[8 + i];
    }
    out.closure_defect = abs(z_ret[0] - out.x0) + abs(z_ret[1] - T(1));
    out.min_x = std::min(out.min_x, z_ret[0]);
    return out;
}

OvalTrace trace_oval(double kappa, double h, const TraceOptions& opts) { return trace_oval<double>(kappa, h, opts); }

template double section_start<double>(double, double);
template f128 section_start<f128>(f128, f128);
template OvalTraceT<double> trace_oval<double>(double, double, const TraceOptions&);
template OvalTraceT<f128> trace_oval<f128>(f128, f128, const TraceOptions&);

}  // namespace q4
