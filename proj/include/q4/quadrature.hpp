#pragma once
// Direct oracle for the basis integrals from traced ovals, independent of the
// Picard-Fuchs machinery.

#include <array>
#include <string>

#include "q4/float128.hpp"
#include "q4/hamiltonian.hpp"

namespace q4 {

enum class Provenance { quadrature, series_center, series_homoclinic, ode };
std::string to_string(Provenance p);

// J1..J6 at one s: derivatives dI_ij/dh of the area moments, basis order.
struct BasisVector {
    double s = 0;
    std::array<double, 6> J{};
    Provenance provenance = Provenance::quadrature;
    double err = 0;  // relative error estimate
};

struct QuadratureOptions {
    double tol = 1e-13;
    double guard = 1e-3;  // refuse |s-1|, |s-k| below guard*(k-1)
    bool enforce_guard = true;
    bool estimate_error = true;  // re-run at tol/10 and compare
};

struct GuardBandError : DomainError {
    using DomainError::DomainError;
};

// Area moments I_ij(h) over {H < h} (basis order) from Green's theorem on the trace.
std::array<double, 6> moments(double kappa, double h, const QuadratureOptions& opts = {});

// Same moments by 2-D quadrature: integrate in y between the two cubic roots that
// bound the region on each vertical line, then in x. Slow; used only as a cross-check.
std::array<double, 6> moments_by_area(double kappa, double h);

BasisVector basis(double kappa, double s, const QuadratureOptions& opts = {});

// Quad-precision basis with no guard band, for convergence ladders near the center.
std::array<f128, 6> basis_f128(f128 kappa, f128 s, double tol = 1e-30);

}  // namespace q4
