#pragma once
// The cubic Hamiltonian H = 2/3 K x^3 - K x^2 y + k/3 y^3 - y (K = k - 1), its flow and level ovals.

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace q4 {

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Monomials x^i y^j of the six basis integrals, in basis order J1..J6.
inline constexpr std::array<std::pair<int, int>, 6> kMonomials = {
    {{0, 0}, {1, 1}, {-1, 0}, {-1, 1}, {1, 0}, {0, 1}}};

// Index of monomial (i, j) in basis order; -1 if absent.
constexpr int monomial_index(int i, int j) {
    for (int n = 0; n < 6; ++n)
        if (kMonomials[n].first == i && kMonomials[n].second == j) return n;
    return -1;
}

template <class T>
T energy(T k, T x, T y) {
    T K = k - T(1);
    return T(2) / T(3) * K * x * x * x - K * x * x * y + k / T(3) * y * y * y - y;
}

// x' = H_y, y' = -H_x. Level ovals around (1,1) run clockwise.
template <class T>
void vector_field(T k, T x, T y, T& dx, T& dy) {
    T K = k - T(1);
    dx = -T(1) - K * x * x + k * y * y;
    dy = -T(2) * K * x * (x - y);
}

void check_kappa(double kappa);

inline double center_energy() { return -2.0 / 3.0; }
inline double loop_energy(double kappa) { return -2.0 / (3.0 * std::sqrt(kappa)); }

// s = 9 k h^2 / 4 on the negative branch of h.
inline double s_of_energy(double kappa, double h) { return 9.0 * kappa * h * h / 4.0; }
inline double energy_of_s(double kappa, double s) { return -2.0 / 3.0 * std::sqrt(s / kappa); }

struct CriticalPoint {
    double x = 0, y = 0;
    std::string type;  // "center" or "saddle"
    double energy = 0;
    std::array<std::complex<double>, 2> eigenvalues;
};

// All four equilibria: centers (1,1), (-1,-1) and saddles (0, +-1/sqrt(k)).
std::vector<CriticalPoint> critical_points(double kappa);

struct TraceOptions {
    double tol = 1e-12;
    double max_time = 1e5;
    bool keep_samples = false;
};

template <class T>
struct OvalTraceT {
    T kappa{}, h{}, x0{}, period{};
    std::array<T, 6> loop{};  // oriented line integrals  \oint x^i y^j dt, basis order
    std::array<T, 6> area{};  // area moments over {H < h}, same order
    T closure_defect{}, energy_drift{}, min_x{};
    long steps = 0;
    std::vector<std::array<double, 3>> samples;  // (t, x, y) at accepted steps
};
using OvalTrace = OvalTraceT<double>;

// Starts at (x0, 1), x0 > 1 with H(x0,1) = h, and integrates the flow to the first
// return to {y = 1, x > 1}. Throws DomainError for h outside the open period annulus
// and IntegrationError when no return happens within max_time.
template <class T>
OvalTraceT<T> trace_oval(T kappa, T h, const TraceOptions& opts = {});

OvalTrace trace_oval(double kappa, double h, const TraceOptions& opts = {});

// Start abscissa on the section.
template <class T>
T section_start(T kappa, T h);

}  // namespace q4
