#pragma once
// Embedded Runge-Kutta-Fehlberg 7(8) with adaptive steps, generic in the scalar type.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace q4 {

template <class T, std::size_t N>
using Vec = std::array<T, N>;

namespace detail {

struct Rat {
    long n, d;
};

// Fehlberg 7(8) tableau.
inline constexpr Rat kC[13] = {{0, 1},  {2, 27}, {1, 9}, {1, 6}, {5, 12}, {1, 2}, {5, 6},
                               {1, 6},  {2, 3},  {1, 3}, {1, 1}, {0, 1},  {1, 1}};
inline constexpr Rat kA[13][12] = {
    {},
    {{2, 27}},
    {{1, 36}, {1, 12}},
    {{1, 24}, {0, 1}, {1, 8}},
    {{5, 12}, {0, 1}, {-25, 16}, {25, 16}},
    {{1, 20}, {0, 1}, {0, 1}, {1, 4}, {1, 5}},
    {{-25, 108}, {0, 1}, {0, 1}, {125, 108}, {-65, 27}, {125, 54}},
    {{31, 300}, {0, 1}, {0, 1}, {0, 1}, {61, 225}, {-2, 9}, {13, 900}},
    {{2, 1}, {0, 1}, {0, 1}, {-53, 6}, {704, 45}, {-107, 9}, {67, 90}, {3, 1}},
    {{-91, 108}, {0, 1}, {0, 1}, {23, 108}, {-976, 135}, {311, 54}, {-19, 60}, {17, 6}, {-1, 12}},
    {{2383, 4100}, {0, 1}, {0, 1}, {-341, 164}, {4496, 1025}, {-301, 82}, {2133, 4100}, {45, 82},
     {45, 164}, {18, 41}},
    {{3, 205}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {-6, 41}, {-3, 205}, {-3, 41}, {3, 41}, {6, 41}, {0, 1}},
    {{-1777, 4100}, {0, 1}, {0, 1}, {-341, 164}, {4496, 1025}, {-289, 82}, {2193, 4100}, {51, 82},
     {33, 164}, {12, 41}, {0, 1}, {1, 1}},
};
inline constexpr Rat kB[13] = {{0, 1},   {0, 1},  {0, 1},   {0, 1},   {0, 1},  {34, 105}, {9, 35},
                               {9, 35},  {9, 280}, {9, 280}, {0, 1},  {41, 840}, {41, 840}};

template <class T>
struct Tableau {
    T c[13], a[13][12], b[13], e41;
    Tableau() {
        for (int i = 0; i < 13; ++i) {
            c[i] = T(kC[i].n) / T(kC[i].d);
            b[i] = T(kB[i].n) / T(kB[i].d);
            for (int j = 0; j < 12; ++j) a[i][j] = kA[i][j].d ? T(kA[i][j].n) / T(kA[i][j].d) : T(0);
        }
        e41 = T(41) / T(840);
    }
};

template <class T>
const Tableau<T>& tableau() {
    static const Tableau<T> tab;
    return tab;
}

}  // namespace detail

struct IntegrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Single step from (t, y) of size h. Returns the 8th-order state; err receives the
// local error estimate (difference between the embedded 7th and 8th order solutions).
template <class T, std::size_t N, class Rhs>
Vec<T, N> rkf78_step(const Rhs& f, T t, const Vec<T, N>& y, T h, Vec<T, N>* err = nullptr) {
    const auto& tb = detail::tableau<T>();
    Vec<T, N> k[13];
    Vec<T, N> tmp;
    for (int s = 0; s < 13; ++s) {
        for (std::size_t i = 0; i < N; ++i) {
            T acc = T(0);
            for (int j = 0; j < s; ++j) acc += tb.a[s][j] * k[j][i];
            tmp[i] = y[i] + h * acc;
        }
        f(t + tb.c[s] * h, tmp, k[s]);
    }
    Vec<T, N> out;
    for (std::size_t i = 0; i < N; ++i) {
        T acc = T(0);
        for (int s = 0; s < 13; ++s) acc += tb.b[s] * k[s][i];
        out[i] = y[i] + h * acc;
        if (err) (*err)[i] = h * tb.e41 * (k[0][i] + k[10][i] - k[11][i] - k[12][i]);
    }
    return out;
}

struct StepControl {
    double rtol = 1e-12;
    double atol = 1e-12;
    double h_init = 1e-3;
    double h_max = 0;  // 0: unbounded
    long max_steps = 2000000;
};

// Integrates from t0 toward t_end (either direction). on_step(t_prev, y_prev, t, y, h)
// is called after each accepted step; returning false stops the integration.
// Returns the final time reached.
template <class T, std::size_t N, class Rhs, class OnStep>
T integrate(const Rhs& f, T t0, Vec<T, N>& y, T t_end, const StepControl& ctl, OnStep on_step) {
    using std::abs;
    using std::max;
    using std::min;
    using std::pow;
    T dir = t_end >= t0 ? T(1) : T(-1);
    T h = T(ctl.h_init) * dir;
    T t = t0;
    const T rtol = T(ctl.rtol), atol = T(ctl.atol);
    for (long n = 0; n < ctl.max_steps; ++n) {
        T remaining = t_end - t;
        if (remaining * dir <= T(0)) return t;
        bool last = false;
        if ((t + h - t_end) * dir >= T(0)) {
            h = remaining;
            last = true;
        }
        if (ctl.h_max > 0 && abs(h) > T(ctl.h_max)) {
            h = T(ctl.h_max) * dir;
            last = false;
        }
        Vec<T, N> e;
        Vec<T, N> yn = rkf78_step<T, N>(f, t, y, h, &e);
        T norm = T(0);
        bool finite = true;
        for (std::size_t i = 0; i < N; ++i) {
            T sc = atol + rtol * max(abs(y[i]), abs(yn[i]));
            T r = abs(e[i]) / sc;
            if (!(r == r) || !(yn[i] == yn[i])) finite = false;
            norm = max(norm, r);
        }
        if (!finite) {
            h *= T(0.25);
            if (abs(h) < abs(t) * T(1e-30) + T(1e-300)) throw IntegrationError("step size underflow");
            continue;
        }
        if (norm <= T(1)) {
            T tn = last ? t_end : t + h;
            Vec<T, N> yp = y;
            T tp = t;
            y = yn;
            t = tn;
            if (!on_step(tp, yp, t, y, h)) return t;
            if (last) return t;
            T fac = norm > T(0) ? T(0.9) * pow(norm, T(-1) / T(8)) : T(4);
            h *= min(T(4), max(T(0.2), fac));
        } else {
            T fac = T(0.9) * pow(norm, T(-1) / T(8));
            h *= max(T(0.1), fac);
            if (abs(h) <= abs(t) * T(1e-30) + T(1e-300)) throw IntegrationError("step size underflow");
        }
    }
    throw IntegrationError("maximum number of steps exceeded");
}

}  // namespace q4
