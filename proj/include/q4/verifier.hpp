#pragma once
// One executable suite per statement of the ratio/zero-count argument, plus the three-zero
// construction and the partial results on the conjectured bound.

#include <array>
#include <string>
#include <vector>

#include "q4/float128.hpp"
#include "q4/zerocount.hpp"

namespace q4 {

struct Check {
    std::string name;
    std::string kind;  // "symbolic-exact" or "numeric-grid"
    bool pass = false;
    std::string detail;
};

struct StatementReport {
    std::string id;
    std::vector<Check> checks;
    std::vector<std::string> notes;  // discrepancies with published forms, wording issues
    std::vector<std::string> artifacts;
    bool pass() const;
    void add(std::string name, std::string kind, bool pass, std::string detail);
};

struct VerifyOptions {
    std::vector<double> kappas{1.5, 2.0, 5.0, 20.0};
    double tol = 1e-8;
    int grid_n = 400;
    int draws = 200;  // per scan-based statement (per case for the case bounds)
    std::uint64_t seed = 20240607;
    int workers = 1;
    ZeroOptions zero;
};

std::vector<std::string> statement_ids();
StatementReport verify_statement(const std::string& id, const VerifyOptions& opts);

StatementReport verify_lemma8(const VerifyOptions& opts);
StatementReport verify_lemma10(const VerifyOptions& opts);
StatementReport verify_lemma11(const VerifyOptions& opts);
StatementReport verify_lemma12(const VerifyOptions& opts);
StatementReport verify_lemma15_16(const VerifyOptions& opts);
StatementReport verify_prop13(const VerifyOptions& opts);
StatementReport verify_thm14(const VerifyOptions& opts);
StatementReport verify_prop17(const VerifyOptions& opts);
StatementReport verify_cor9(const VerifyOptions& opts);
StatementReport verify_comments(const VerifyOptions& opts);

// Exact polynomial certificates: each computed object against its published factored
// form and, where that fails, the corrected form. computed is the expanded canonical text.
struct Certificate {
    std::string name;
    std::string computed;
    std::string printed;
    bool printed_ok = false;
    std::string corrected;  // empty when the printed form holds
    bool corrected_ok = false;
};
std::vector<Certificate> certificates();

// ---- numeric building blocks shared with the acceptance runner ---------------------

// Residual of the published order-4 center series against binary128 quadrature at
// s = k - r for r = (k-1) 2^-lo .. 2^-hi, and the least-squares log-log slope.
struct LadderFit {
    std::vector<double> r, residual;
    double slope = 0;
};
LadderFit series_ladder(double kappa, int lo = 4, int hi = 10, double tol = 1e-30);

// w and its first three derivatives at s = k from a polynomial fit of binary128
// quadrature values of w on Chebyshev points of [k - width*(k-1), k).
std::array<double, 4> ratio_anchors_by_quadrature(double kappa, int points = 16, double width = 0.2,
                                                  double tol = 1e-28);

// Sign conditions along the true ratio w(s) on m interior points.
struct SignSuite {
    long points = 0;
    long violations = 0;
    std::string first_violation;
};
SignSuite sign_suite(const Propagation& prop, long m);

// Staircase construction of parameters with three zeros of I clustered near s = k.
struct Construction {
    double kappa = 0;
    Mu mu{};                    // G-form
    MuExact mu_generating;      // exact solution of the nu system
    std::array<double, 4> nu{};  // targeted derivatives nu1..nu4
    std::array<double, 3> target_roots{};
    double rho = 0, ratio = 0;
    int attempts = 0;
    ZeroReport evaluator_zeros;
    std::vector<std::pair<double, double>> quadrature_brackets;
    int quadrature_count = 0;
    bool ok = false;
};
Construction construct_three_zeros(double kappa, double bracket_tol = 1e-9);
// Exact solve of nu = N(k) mu_generating for rational k.
MuExact solve_nu(const mpq_class& kappa, const std::array<mpq_class, 4>& nu);

}  // namespace q4
