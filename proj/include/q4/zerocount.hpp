#pragma once
// Zero counting for the family functions on (1, k), the bound chain between the counts,
// the case bounds for g, and seeded random scans.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "q4/melnikov.hpp"

namespace q4 {

struct ZeroOptions {
    int n = 400;                  // base sample count (doubled for the stability check)
    double standoff = 1e-7;       // endpoint standoff, fraction of k-1
    double bracket_tol = 1e-10;   // final bracket width in s
    double screen = 1e-2;         // local |f| minima below screen*scale get refined
    double tangency_rel = 1e-10;  // refined extremum below this * scale: possible even-order contact
    bool check_doubling = true;
};

struct ZeroInfo {
    double location = 0;
    double width = 0;
    bool odd = true;                 // sign change across the bracket
    bool possible_tangency = false;  // near-contact without a resolved sign change
};

struct ZeroReport {
    FunctionId function = FunctionId::I_of_s;
    double lo = 0, hi = 0;
    std::vector<ZeroInfo> zeros;
    int count = 0;  // resolved sign changes
    int count_min = 0, count_max = 0;
    bool degenerate = false;  // identically zero on the samples
    bool stable = true;       // same count with doubled sampling
    int samples = 0;
};

std::pair<double, double> default_interval(double kappa, const ZeroOptions& opts = {});
// Uniform-in-angle points in the middle plus log-clustered points toward both ends.
std::vector<double> sample_grid(double kappa, double lo, double hi, int n);

ZeroReport count_zeros(const FamilyEvaluator& ev, FunctionId id, const ZeroOptions& opts = {});
ZeroReport count_zeros(const FamilyEvaluator& ev, FunctionId id, double lo, double hi, const ZeroOptions& opts = {});

struct ChainRecord {
    int I = 0, G = 0, F = 0, g = 0;
    bool chain_ok = true;  // #I <= #G <= #F + 2 and #F <= #g
    bool stable = true;
    bool degenerate = false;
    bool tangency = false;
};
ChainRecord chain_check(const FamilyEvaluator& ev, const ZeroOptions& opts = {});

enum class CaseId { a, b, c, d };
std::string to_string(CaseId c);
// Lower end of the three-zero window for beta0 when beta1 = 1.
double case_threshold(double kappa);
CaseId classify(const MelnikovParams& p);  // after normalizing beta1 to {0, 1}
int case_bound(CaseId c);

// deg P3 + #(roots of Q2 on (-inf, 1)) + 1
int argument_bound_F(const MelnikovParams& p);

// ---- scans -------------------------------------------------------------------------

struct ScanLaw {
    double coeff_range = 10;  // alpha1, alpha2, beta0 uniform on [-r, r]
    double kappa_lo = 1.01, kappa_hi = 100;
};

std::uint64_t draw_seed(std::uint64_t base, std::uint64_t index);
// Draws (kappa, alpha1, alpha2, beta0, beta1); a forced case restricts beta0/beta1 to it.
MelnikovParams draw_params(std::uint64_t seed, std::optional<CaseId> forced = std::nullopt, const ScanLaw& law = {});

struct DrawResult {
    std::uint64_t seed = 0;
    MelnikovParams params;
    CaseId case_id = CaseId::a;
    int bound = 0;
    ChainRecord counts;
    int argument_bound = 0;
    bool ok = true;  // case bound, count_I <= 5 and chain all hold
    std::string error;
};

DrawResult run_draw(std::uint64_t seed, std::optional<CaseId> forced = std::nullopt, const ZeroOptions& opts = {},
                    const ScanLaw& law = {});
// Results in draw order regardless of the worker count.
std::vector<DrawResult> run_scan(std::uint64_t base_seed, int n, std::optional<CaseId> forced, int workers,
                                 const ZeroOptions& opts = {}, const ScanLaw& law = {});
int default_workers();  // Q4_WORKERS, else hardware concurrency

}  // namespace q4
