#pragma once
// Direct simulation of quadratic perturbations of the Hamiltonian flow: first-order
// Melnikov integral from the area moments against the energy change at first return.

#include <array>
#include <string>
#include <vector>

namespace q4 {

// Bivariate polynomial of degree <= 2; c[i][j] multiplies x^i y^j.
struct Poly2 {
    std::array<std::array<double, 3>, 3> c{};

    // Terms "c*x^i*y^j" joined by + or -, e.g. "y", "0.5*x^2 - 3*x*y + 1".
    // Throws std::invalid_argument on syntax errors or degree > 2.
    static Poly2 parse(const std::string& text);
    double eval(double x, double y) const;
    bool is_zero() const;
    std::string str() const;
};

struct Perturbation {
    Poly2 f1, f2;  // x' = H_y + eps f1,  y' = -H_x + eps f2
    double epsilon = 0;
};

// M1(h) = oint (f1 dy - f2 dx) counterclockwise around {H < h} = area integral of div f.
// With this sign the first-return energy change is eps M1 + O(eps^2).
double melnikov1(const Perturbation& p, double kappa, double h);

struct FlowOptions {
    double tol = 1e-13;
    double max_time = 1e4;
    int workers = 1;
};

struct DisplacementSample {
    double h = 0;
    double d = 0;           // H(return point) - h
    double d_over_eps = 0;  // NaN when epsilon = 0
    double melnikov = 0;    // first-order prediction M1(h)
    bool returned = true;
    double period = 0;
};

std::vector<DisplacementSample> displacement(const Perturbation& p, double kappa, const std::vector<double>& h_grid,
                                             const FlowOptions& opts = {});

// n energies spread uniformly over [lo, hi] fractions of the period annulus.
std::vector<double> interior_energy_grid(double kappa, int n, double lo = 0.1, double hi = 0.9);

// Relative first-order defect at eps and eps/2 on one grid.
struct OrderCheck {
    double eps = 0;
    double max_rel = 0, max_rel_half = 0;  // max |d/eps - M1| / |M1|
    double shrink = 0;                      // median ratio of the defects, eps vs eps/2
    int no_return = 0;
    std::vector<DisplacementSample> at_eps, at_half;
};
OrderCheck first_order_check(Perturbation p, double kappa, int n, const FlowOptions& opts = {});

}  // namespace q4
