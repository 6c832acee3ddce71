#pragma once
// Truncated power series in one variable: c[n] multiplies t^n.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace q4::series {

template <class T>
using Coeffs = std::vector<T>;

template <class T>
Coeffs<T> mul(const Coeffs<T>& a, const Coeffs<T>& b, std::size_t n) {
    Coeffs<T> c(n, T(0));
    for (std::size_t i = 0; i < std::min(n, a.size()); ++i)
        for (std::size_t j = 0; j < b.size() && i + j < n; ++j) c[i + j] += a[i] * b[j];
    return c;
}

// a / b, requires b[0] != 0.
template <class T>
Coeffs<T> div(const Coeffs<T>& a, const Coeffs<T>& b, std::size_t n) {
    if (b.empty() || b[0] == T(0)) throw std::domain_error("series division by a series vanishing at 0");
    Coeffs<T> q(n, T(0));
    for (std::size_t k = 0; k < n; ++k) {
        T acc = k < a.size() ? a[k] : T(0);
        for (std::size_t j = 1; j <= k && j < b.size(); ++j) acc -= b[j] * q[k - j];
        q[k] = acc / b[0];
    }
    return q;
}

template <class T>
Coeffs<T> add(const Coeffs<T>& a, const Coeffs<T>& b) {
    Coeffs<T> c(std::max(a.size(), b.size()), T(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return c;
}

template <class T>
Coeffs<T> scale(Coeffs<T> a, const T& f) {
    for (auto& x : a) x *= f;
    return a;
}

// Binomial series of (1 + t/x)^p.
template <class T>
Coeffs<T> binomial(const T& p, const T& x, std::size_t n) {
    Coeffs<T> c(n, T(0));
    if (n == 0) return c;
    c[0] = T(1);
    for (std::size_t k = 1; k < n; ++k) c[k] = c[k - 1] * (p - T(long(k) - 1)) / (T(long(k)) * x);
    return c;
}

// d-th derivative at t (Horner on the differentiated coefficients).
template <class T>
T eval(const Coeffs<T>& c, const T& t, int d = 0) {
    T acc = T(0);
    for (std::size_t i = c.size(); i-- > std::size_t(d);) {
        T f = T(1);
        for (int j = 0; j < d; ++j) f *= T(long(i) - j);
        acc = acc * t + f * c[i];
    }
    return acc;
}

// Drop the first m coefficients (division by t^m when they vanish).
template <class T>
Coeffs<T> shift_down(const Coeffs<T>& c, std::size_t m) {
    if (m >= c.size()) return {};
    return Coeffs<T>(c.begin() + m, c.end());
}

}  // namespace q4::series
