#include "q4/phase_flow.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>

#include "q4/hamiltonian.hpp"
#include "q4/ode.hpp"
#include "q4/quadrature.hpp"

namespace q4 {

namespace {

struct Cursor {
    const std::string& t;
    std::size_t i = 0;
    void skip() {
        while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
    }
    bool done() {
        skip();
        return i >= t.size();
    }
    bool eat(char c) {
        skip();
        if (i < t.size() && t[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial '" + t + "': " + what + " at position " + std::to_string(i));
    }
};

int read_power(Cursor& c) {
    if (!c.eat('^')) return 1;
    c.skip();
    std::size_t start = c.i;
    while (c.i < c.t.size() && std::isdigit(static_cast<unsigned char>(c.t[c.i]))) ++c.i;
    if (c.i == start) c.fail("expected exponent");
    return std::stoi(c.t.substr(start, c.i - start));
}

}  // namespace

Poly2 Poly2::parse(const std::string& text) {
    Poly2 p;
    Cursor c{text};
    if (c.done()) c.fail("empty");
    bool first = true;
    while (!c.done()) {
        double sign = 1;
        if (c.eat('+')) {
        } else if (c.eat('-')) {
            sign = -1;
        } else if (!first) {
            c.fail("expected + or -");
        }
        first = false;
        double coef = sign;
        int i = 0, j = 0;
        bool factor = false;
        do {
            c.skip();
            if (c.i >= text.size()) c.fail("missing factor");
            const char ch = text[c.i];
            if (ch == 'x' || ch == 'y') {
                ++c.i;
                (ch == 'x' ? i : j) += read_power(c);
            } else {
                const char* b = text.c_str() + c.i;
                char* e = nullptr;
                const double v = std::strtod(b, &e);
                if (e == b) c.fail("expected number, x or y");
                c.i += static_cast<std::size_t>(e - b);
                coef *= v;
            }
            factor = true;
        } while (c.eat('*'));
        if (!factor) c.fail("empty term");
        if (i + j > 2) c.fail("degree above 2");
        p.c[i][j] += coef;
    }
    return p;
}

double Poly2::eval(double x, double y) const {
    double s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; i + j < 3; ++j) s += c[i][j] * std::pow(x, i) * std::pow(y, j);
    return s;
}

bool Poly2::is_zero() const {
    for (auto& row : c)
        for (double v : row)
            if (v != 0) return false;
    return true;
}

std::string Poly2::str() const {
    std::string out;
    for (int d = 2; d >= 0; --d)
        for (int i = d; i >= 0; --i) {
            const double v = c[i][d - i];
            if (v == 0) continue;
            char b[40];
            std::snprintf(b, sizeof b, "%.17g", std::abs(v));
            out += out.empty() ? (v < 0 ? "-" : "") : (v < 0 ? " - " : " + ");
            std::string mono;
            if (i) mono += i == 1 ? "x" : "x^" + std::to_string(i);
            if (d - i) mono += std::string(mono.empty() ? "" : "*") + (d - i == 1 ? "y" : "y^" + std::to_string(d - i));
            if (mono.empty())
                out += b;
            else
                out += std::abs(v) == 1 ? mono : std::string(b) + "*" + mono;
        }
    return out.empty() ? "0" : out;
}

double melnikov1(const Perturbation& p, double kappa, double h) {
    // div f = a + b x + c y, integrated over {H < h}
    const double a = p.f1.c[1][0] + p.f2.c[0][1];
    const double b = 2 * p.f1.c[2][0] + p.f2.c[1][1];
    const double c = p.f1.c[1][1] + 2 * p.f2.c[0][2];
    if (a == 0 && b == 0 && c == 0) return 0;
    auto m = moments(kappa, h);
    return a * m[monomial_index(0, 0)] + b * m[monomial_index(1, 0)] + c * m[monomial_index(0, 1)];
}

namespace {

DisplacementSample one_sample(const Perturbation& p, double kappa, double h, const FlowOptions& o) {
    DisplacementSample out;
    out.h = h;
    out.melnikov = melnikov1(p, kappa, h);
    using V = Vec<double, 2>;
    const double eps = p.epsilon;
    auto rhs = [&](double, const V& z, V& d) {
        double dx, dy;
        vector_field(kappa, z[0], z[1], dx, dy);
        d[0] = dx + eps * p.f1.eval(z[0], z[1]);
        d[1] = dy + eps * p.f2.eval(z[0], z[1]);
    };
    V z{section_start(kappa, h), 1.0};
    StepControl ctl;
    ctl.rtol = ctl.atol = o.tol;
    ctl.h_init = 1e-3 / std::sqrt(kappa - 1);
    bool back = false;
    double x_ret = 0, t_ret = 0;
    auto on_step = [&](double tp, const V& zp, double t, const V& zn, double) {
        if (!(zp[1] > 1 && zn[1] <= 1 && (zp[0] > 1 || zn[0] > 1))) return true;
        double tau = (t - tp) * (zp[1] - 1) / (zp[1] - zn[1]);
        V zt = zn;
        for (int it = 0; it < 30; ++it) {
            zt = rkf78_step<double, 2>(rhs, tp, zp, tau);
            V d;
            rhs(0, zt, d);
            const double step = (zt[1] - 1) / d[1];
            tau -= step;
            if (std::abs(step) <= 8 * std::numeric_limits<double>::epsilon() * (t - tp)) {
                zt = rkf78_step<double, 2>(rhs, tp, zp, tau);
                break;
            }
        }
        x_ret = zt[0];
        t_ret = tp + tau;
        back = true;
        return false;
    };
    try {
        integrate<double, 2>(rhs, 0.0, z, o.max_time, ctl, on_step);
    } catch (const IntegrationError&) {
        back = false;
    }
    out.returned = back;
    if (!back) {
        out.d = out.d_over_eps = std::numeric_limits<double>::quiet_NaN();
        return out;
    }
    out.period = t_ret;
    out.d = energy(kappa, x_ret, 1.0) - h;
    out.d_over_eps = eps != 0 ? out.d / eps : std::numeric_limits<double>::quiet_NaN();
    return out;
}

}  // namespace

std::vector<DisplacementSample> displacement(const Perturbation& p, double kappa, const std::vector<double>& h_grid,
                                             const FlowOptions& opts) {
    check_kappa(kappa);
    const int n = static_cast<int>(h_grid.size());
    std::vector<DisplacementSample> out(n);
    std::atomic<int> next{0};
    auto work = [&] {
        for (int i; (i = next++) < n;) out[i] = one_sample(p, kappa, h_grid[i], opts);
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < std::max(opts.workers, 1); ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return out;
}

std::vector<double> interior_energy_grid(double kappa, int n, double lo, double hi) {
    check_kappa(kappa);
    const double hc = center_energy(), hl = loop_energy(kappa);
    std::vector<double> g(std::max(n, 0));
    for (int i = 0; i < n; ++i) {
        const double f = n == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * i / (n - 1);
        g[i] = hc + f * (hl - hc);
    }
    return g;
}

OrderCheck first_order_check(Perturbation p, double kappa, int n, const FlowOptions& opts) {
    OrderCheck r;
    r.eps = p.epsilon;
    const auto grid = interior_energy_grid(kappa, n);
    r.at_eps = displacement(p, kappa, grid, opts);
    p.epsilon *= 0.5;
    r.at_half = displacement(p, kappa, grid, opts);
    std::vector<double> ratios;
    for (int i = 0; i < n; ++i) {
        const auto &a = r.at_eps[i], &b = r.at_half[i];
        if (!a.returned || !b.returned) {
            ++r.no_return;
            continue;
        }
        const double m = std::abs(a.melnikov);
        const double ea = std::abs(a.d_over_eps - a.melnikov), eb = std::abs(b.d_over_eps - b.melnikov);
        r.max_rel = std::max(r.max_rel, ea / m);
        r.max_rel_half = std::max(r.max_rel_half, eb / m);
        if (eb > 0) ratios.push_back(ea / eb);
    }
    if (!ratios.empty()) {
        std::nth_element(ratios.begin(), ratios.begin() + ratios.size() / 2, ratios.end());
        r.shrink = ratios[ratios.size() / 2];
    }
    return r;
}

}  // namespace q4
