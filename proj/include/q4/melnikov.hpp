#pragma once
// The perturbation family: I(s), G, R, F = P3 J1 + Q2 J2, g = P2 + Q1 w, the parameter
// maps mu <-> (alpha, beta), and the second-order operator identity linking G and F.

#include <array>
#include <string>
#include <vector>

#include "q4/exactpoly.hpp"
#include "q4/picard_fuchs.hpp"

namespace q4 {

using Mu = std::array<double, 4>;
using MuExact = std::array<mpq_class, 4>;

// Generating-function coefficients (as in the area-integral form of I) to the
// coefficients of the G form used everywhere else, and back.
Mu tilde_transform(const Mu& mu, double kappa);
Mu inverse_tilde_transform(const Mu& mu, double kappa);
MuExact tilde_transform(const MuExact& mu, const mpq_class& kappa);
MuExact inverse_tilde_transform(const MuExact& mu, const mpq_class& kappa);

struct AlphaBeta {
    std::array<double, 3> alpha{};  // alpha0, alpha1, alpha2
    std::array<double, 2> beta{};   // beta0, beta1
};
struct AlphaBetaExact {
    std::array<mpq_class, 3> alpha;
    std::array<mpq_class, 2> beta;
};

// Rows alpha0, alpha1, alpha2, beta0, beta1; columns mu1..mu4 (G-form mu).
const FuncMatrix& alphabeta_matrix();
// Inverse map (alpha1, alpha2, beta0, beta1) -> mu. The printed variant keeps the
// published digits, whose mu4/alpha2 entry does not invert the forward map.
const FuncMatrix& alphabeta_inverse_matrix();
const FuncMatrix& alphabeta_inverse_matrix_printed();

AlphaBeta mu_to_alphabeta(const Mu& mu, double kappa);
AlphaBetaExact mu_to_alphabeta(const MuExact& mu, const mpq_class& kappa);
Mu alphabeta_to_mu(double a1, double a2, double b0, double b1, double kappa);
MuExact alphabeta_to_mu(const mpq_class& a1, const mpq_class& a2, const mpq_class& b0, const mpq_class& b1,
                        const mpq_class& kappa);
// alpha0 from the other four.
double alpha0_identity(double a1, double a2, double b0, double b1, double kappa);

struct RCoefficients {
    std::array<double, 3> a{};
    std::array<double, 3> b{};
};
struct RCoefficientsExact {
    std::array<mpq_class, 3> a;
    std::array<mpq_class, 3> b;
};
RCoefficients r_coefficients(const Mu& mu, double kappa);
RCoefficientsExact r_coefficients(const MuExact& mu, const mpq_class& kappa);

// Parameter point. mu is always in the G form.
struct MelnikovParams {
    double kappa = 2;
    Mu mu{};
    std::array<double, 3> alpha{};
    std::array<double, 2> beta{};
    bool normalized = false;

    static MelnikovParams from_mu(double kappa, const Mu& mu);
    static MelnikovParams from_alphabeta(double kappa, double a1, double a2, double b0, double b1);
    // Divides all parameters by beta1 when beta1 != 0, so beta1 becomes 1.
    MelnikovParams normalized_copy() const;
    bool is_zero() const;
};

enum class FunctionId { I_of_s, Gbar_of_h, R_of_h, F_of_s, g_of_s };
std::string to_string(FunctionId id);
FunctionId function_from_string(const std::string& s);

// Polynomials of the F and g forms at s.
double P3(const RCoefficients& r, double kappa, double s);
double Q2(const RCoefficients& r, double kappa, double s);
double P2(const MelnikovParams& p, double s);
double Q1(const MelnikovParams& p, double s);

// Values from a basis vector (any provenance). For Gbar and R the point is h.
double eval_family(FunctionId id, const MelnikovParams& p, double point, const Propagation& prop);
double eval_family_on(FunctionId id, const MelnikovParams& p, double s, const std::array<double, 6>& J);

// Binds parameters to a propagated basis and keeps Taylor data at s = k. The counting
// value of a function f with structural order m at k is f / ((k - s)^m J1) (without
// J1 for g); it has the same sign and zeros as f on (1, k) and stays well conditioned
// near k, where it is evaluated from series.
class FamilyEvaluator {
public:
    FamilyEvaluator(const MelnikovParams& p, const Propagation& prop);
    const MelnikovParams& params() const { return p_; }
    const Propagation& propagation() const { return *prop_; }

    double value(FunctionId id, double s) const;     // the function itself, in s
    double counting(FunctionId id, double s) const;  // sign-equivalent normalized value
    // Taylor coefficients at k of f / J1(k) (g: of f), including the structural zeros.
    const std::vector<double>& taylor(FunctionId id) const;
    static int structural_order(FunctionId id);

private:
    int slot(FunctionId id) const;
    MelnikovParams p_;
    const Propagation* prop_;
    RCoefficients r_;
    Mu pre_;  // generating-function mu
    std::array<std::vector<double>, 4> taylor_, counting_series_;
};

// Derivatives nu1..nu4 of I/J1(k) at s = k, as linear forms in the generating-
// function mu: derived from the published center table, and as printed.
const FuncMatrix& nu_matrix();
const FuncMatrix& nu_matrix_printed();

struct L2Report {
    std::vector<double> s, lhs, rhs_printed;
    double max_rel_printed = 0;    // against the published right-hand side
    double max_rel_corrected = 0;  // against the sign-corrected right-hand side
    double max_rel_corrected_half = 0;
    double reduction = 0;  // corrected residual ratio under stencil halving
    double spacing = 0;
};

// L G = s(1-s)G'' - G'/2 - 5G/36 by five-point differences, against k F/(1152(s-k)^2(s-1)).
// Step = fraction * min(s-1, k-s, k-1); at 0.03 the truncation error still dominates roundoff
// on the halved stencil while staying near 1e-5.
L2Report apply_L2(const MelnikovParams& p, const std::vector<double>& s_grid, const Propagation& prop,
                  double spacing_fraction = 0.03);

// The same operator identity in the h variable against R(h).
double L2h_residual(const MelnikovParams& p, double h, const Propagation& prop, double dh);

}  // namespace q4
