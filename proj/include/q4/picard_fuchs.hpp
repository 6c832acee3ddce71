#pragma once
// Linear systems satisfied by the basis integrals, endpoint series, propagation of the
// ratio w = J2/J1 across (1, k), and closed-form derivatives of w.

#include <array>
#include <memory>
#include <vector>

#include "q4/exactpoly.hpp"
#include "q4/ode.hpp"
#include "q4/quadrature.hpp"

namespace q4 {

using Mat6 = std::array<std::array<double, 6>, 6>;

// Defects of the six area/derivative relations in the h variable. I and dI are in basis
// order (I00, I11, I-10, I-11, I10, I01); the result is ordered by equation:
// rows for I00, I10, I01, I11, I-10, I-11.
std::array<double, 6> pf1_residual(double kappa, double h, const std::array<double, 6>& I,
                                   const std::array<double, 6>& dI);

// 6(s-1)(s-k) dJ/ds = M(s) J for the six basis integrals.
Mat6 pf6_matrix(double kappa, double s);

// Defect of the 2x2 subsystem for (J1, J2): 6(s-1)(s-k)J' - [[1-s,K],[1-s,s-1]] J.
std::array<double, 2> pf2_residual(double kappa, double s, const std::array<double, 2>& J,
                                   const std::array<double, 2>& dJ);

// J_i(s) = J1(k) * sum_n c[n][i] (s-k)^n, with J1(k) = pi/sqrt(k-1).
struct CenterSeries {
    double kappa = 0;
    double J1_center = 0;
    std::vector<std::array<double, 6>> c;
    int order() const { return static_cast<int>(c.size()) - 1; }
    std::array<double, 6> eval(double s) const;                   // J values
    std::vector<double> coeffs(int i) const;                        // normalized series of J_{i+1}
};

// Published table, orders 0..4 (order <= 4).
CenterSeries center_series(double kappa, int order = 4);
// Same table as exact rational functions of k: [i][n].
const std::array<std::array<RatFunc, 5>, 6>& center_series_table();
// Coefficients from the recurrence of the 6x6 system, any order.
CenterSeries center_series_recurrence(double kappa, int order);
template <class T>
std::vector<std::array<T, 6>> center_recurrence(const T& kappa, int order);

// J1 = sum (A_n L + B_n) u^n, J2 = sum (C_n L + D_n) u^n with u = s-1, L = ln u.
struct HomoclinicSeries {
    double kappa = 0;
    std::vector<double> A, B, C, D;
    double fit_residual = 0;  // max relative misfit against quadrature in the matching band
    int fit_points = 0;
    double log_coeff() const { return A[0]; }       // -1/(2 sqrt(k-1))
    double constant() const { return B[0]; }       // fitted
    double J2_at_loop() const { return D[0]; }      // 3/sqrt(k-1)
    double J2_log_slope() const { return C[1]; }    // -1/(12 (k-1)^(3/2))
    std::array<double, 2> eval(double s) const;
};

HomoclinicSeries homoclinic_series_with_constant(double kappa, double constant, int order = 16);
// Fits the free constant by least squares against quadrature on s-1 in [1e-3, 1e-2](k-1).
HomoclinicSeries homoclinic_series(double kappa, int order = 16, double max_residual = 1e-8);

struct DerivBundle {
    double s = 0;
    double w = 0, w1 = 0, w2 = 0, w3 = 0;
    double J1 = 0, J1p = 0;
    Provenance provenance = Provenance::ode;
};

struct PropagationOptions {
    double center_band = 0.05;  // fraction of k-1 handled by the center series
    double loop_band = 1e-3;    // fraction of min(k-1, 1) handled by the log series
    double tol = 1e-13;
    int center_order = 30;
    double floor = 1e-8;  // ODE stops at s = 1 + floor*(k-1)
    bool fit_loop_series = true;
};

// Riccati propagation of w together with ln J1 and the ratios J3..J6 / J1, seeded from
// the center series and integrated toward s = 1. Immutable after construction.
class Propagation {
public:
    explicit Propagation(double kappa, PropagationOptions opts = {});

    double kappa() const { return kappa_; }
    const PropagationOptions& options() const { return opts_; }
    const CenterSeries& center() const { return center_; }
    const HomoclinicSeries& homoclinic() const;
    double center_edge() const { return s_center_; }
    double loop_edge() const { return s_loop_; }

    BasisVector at(double s) const;
    double ratio(double s) const { return bundle(s).w; }
    DerivBundle bundle(double s) const;

    // Normalized series of w = J2/J1 at s = k.
    const std::vector<double>& ratio_series() const { return w_series_; }

private:
    using State = Vec<double, 6>;
    State state_at(double s) const;
    double kappa_;
    PropagationOptions opts_;
    CenterSeries center_;
    std::vector<double> w_series_;
    std::shared_ptr<HomoclinicSeries> loop_;
    double s_center_, s_loop_;
    std::vector<double> node_s_;
    std::vector<State> node_y_;
};

std::vector<BasisVector> propagate(double kappa, const std::vector<double>& targets, PropagationOptions opts = {});

// w', w'', w''' by the closed rational expressions in (s, w).
double ratio_d1(double kappa, double s, double w);
double ratio_d2(double kappa, double s, double w);
double ratio_d3(double kappa, double s, double w);

DerivBundle deriv_bundle(const Propagation& p, double s);

}  // namespace q4
