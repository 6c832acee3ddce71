#include "q4/zerocount.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <random>
#include <thread>

namespace q4 {

std::pair<double, double> default_interval(double kappa, const ZeroOptions& opts) {
    const double K = kappa - 1;
    return {1 + opts.standoff * K, kappa - opts.standoff * K};
}

std::vector<double> sample_grid(double kappa, double lo, double hi, int n) {
    std::vector<double> g{lo, hi};
    const int mid = std::max(n / 2, 2), end = std::max(n / 4, 2);
    for (int i = 0; i < mid; ++i) g.push_back(lo + (hi - lo) * (1 - std::cos(M_PI * (i + 0.5) / mid)) / 2);
    const double span = 0.1 * (hi - lo);
    const double a0 = std::log(lo - 1), a1 = std::log(span), b0 = std::log(kappa - hi);
    for (int i = 0; i < end; ++i) {
        const double f = double(i) / (end - 1);
        g.push_back(1 + std::exp(a0 + f * (a1 - a0)));
        g.push_back(kappa - std::exp(b0 + f * (a1 - b0)));
    }
    std::sort(g.begin(), g.end());
    g.erase(std::remove_if(g.begin(), g.end(), [&](double s) { return s < lo || s > hi; }), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

namespace {

struct Core {
    std::vector<ZeroInfo> zeros;
    int count = 0, tangencies = 0, samples = 0;
    bool degenerate = false;
};

template <class F>
ZeroInfo bisect(F f, double a, double b, double fa, double tol) {
    for (int it = 0; it < 200 && b - a > tol; ++it) {
        const double m = 0.5 * (a + b), fm = f(m);
        if (fm == 0) return {m, 0.0, true, false};
        if ((fm < 0) == (fa < 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return {0.5 * (a + b), b - a, true, false};
}

// Golden-section search for the minimum of sgn*f on [a, b].
template <class F>
std::pair<double, double> extremum(F f, double a, double b, double sgn) {
    const double r = (std::sqrt(5.0) - 1) / 2;
    double c = b - r * (b - a), d = a + r * (b - a);
    double fc = sgn * f(c), fd = sgn * f(d);
    for (int it = 0; it < 80 && b - a > 1e-14 * std::max(1.0, std::abs(a)); ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = sgn * f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = sgn * f(d);
        }
    }
    return fc < fd ? std::make_pair(c, sgn * fc) : std::make_pair(d, sgn * fd);
}

Core count_core(const FamilyEvaluator& ev, FunctionId id, double lo, double hi, int n, const ZeroOptions& o) {
    Core c;
    auto f = [&](double s) { return ev.counting(id, s); };
    const auto s = sample_grid(ev.params().kappa, lo, hi, n);
    std::vector<double> v(s.size());
    double scale = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        v[i] = f(s[i]);
        scale = std::max(scale, std::abs(v[i]));
    }
    c.samples = static_cast<int>(s.size());
    if (scale == 0) {
        c.degenerate = true;
        return c;
    }
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (v[i] == 0) {
            const bool odd = i > 0 && v[i - 1] * v[i + 1] < 0;
            c.zeros.push_back({s[i], 0.0, odd, !odd});
            if (odd) ++c.count; else ++c.tangencies;
            continue;
        }
        if (v[i] * v[i + 1] < 0) {
            c.zeros.push_back(bisect(f, s[i], s[i + 1], v[i], o.bracket_tol));
            ++c.count;
            continue;
        }
        // sampled local minimum of |f| without a sign change
        if (i == 0 || v[i + 1] == 0) continue;
        if (v[i - 1] * v[i] <= 0) continue;
        if (std::abs(v[i]) > std::abs(v[i - 1]) || std::abs(v[i]) > std::abs(v[i + 1])) continue;
        if (std::abs(v[i]) > o.screen * scale) continue;
        const double sgn = v[i] > 0 ? 1.0 : -1.0;
        auto [sm, m] = extremum(f, s[i - 1], s[i + 1], sgn);
        if (m * sgn < 0) {
            c.zeros.push_back(bisect(f, s[i - 1], sm, v[i - 1], o.bracket_tol));
            c.zeros.push_back(bisect(f, sm, s[i + 1], m, o.bracket_tol));
            c.count += 2;
        } else if (std::abs(m) < o.tangency_rel * scale) {
            c.zeros.push_back({sm, s[i + 1] - s[i - 1], false, true});
            ++c.tangencies;
        }
    }
    std::sort(c.zeros.begin(), c.zeros.end(), [](auto& a, auto& b) { return a.location < b.location; });
    return c;
}

}  // namespace

ZeroReport count_zeros(const FamilyEvaluator& ev, FunctionId id, double lo, double hi, const ZeroOptions& o) {
    const double k = ev.params().kappa;
    if (!(lo > 1 && hi < k && lo < hi)) throw DomainError("counting interval must lie inside (1, kappa)");
    ZeroReport r;
    r.function = id;
    r.lo = lo;
    r.hi = hi;
    if (ev.params().is_zero()) {
        r.degenerate = true;
        return r;
    }
    Core c = count_core(ev, id, lo, hi, o.n, o);
    if (!c.degenerate && o.check_doubling) {
        Core d = count_core(ev, id, lo, hi, 2 * o.n, o);
        if (d.count != c.count || d.tangencies != c.tangencies) {
            r.stable = false;
            c = count_core(ev, id, lo, hi, 4 * o.n, o);
        }
    }
    r.degenerate = c.degenerate;
    r.zeros = std::move(c.zeros);
    r.count = c.count;
    r.count_min = c.count;
    r.count_max = c.count + 2 * c.tangencies;
    r.samples = c.samples;
    return r;
}

ZeroReport count_zeros(const FamilyEvaluator& ev, FunctionId id, const ZeroOptions& o) {
    auto [lo, hi] = default_interval(ev.params().kappa, o);
    return count_zeros(ev, id, lo, hi, o);
}

ChainRecord chain_check(const FamilyEvaluator& ev, const ZeroOptions& o) {
    ChainRecord c;
    int* slot[4] = {&c.I, &c.G, &c.F, &c.g};
    const FunctionId ids[4] = {FunctionId::I_of_s, FunctionId::Gbar_of_h, FunctionId::F_of_s, FunctionId::g_of_s};
    for (int i = 0; i < 4; ++i) {
        auto r = count_zeros(ev, ids[i], o);
        *slot[i] = r.count;
        c.stable = c.stable && r.stable;
        c.degenerate = c.degenerate || r.degenerate;
        c.tangency = c.tangency || r.count_max > r.count;
    }
    c.chain_ok = c.degenerate || (c.I <= c.G && c.G <= c.F + 2 && c.F <= c.g);
    return c;
}

// ---- case logic -------------------------------------------------------------------

std::string to_string(CaseId c) {
    switch (c) {
        case CaseId::a: return "a";
        case CaseId::b: return "b";
        case CaseId::c: return "c";
        case CaseId::d: return "d";
    }
    return "?";
}

double case_threshold(double kappa) { return (54 - 23 * kappa) / 31; }

CaseId classify(const MelnikovParams& p) {
    auto q = p.normalized_copy();
    if (q.beta[1] == 1) {
        const double b0 = q.beta[0];
        return (b0 > case_threshold(q.kappa) && b0 < 1) ? CaseId::b : CaseId::a;
    }
    return q.beta[0] != 0 ? CaseId::c : CaseId::d;
}

int case_bound(CaseId c) {
    switch (c) {
        case CaseId::a: return 2;
        case CaseId::b: return 3;
        case CaseId::c: return 2;
        case CaseId::d: return 1;
    }
    return 0;
}

int argument_bound_F(const MelnikovParams& p) {
    auto r = r_coefficients(p.mu, p.kappa);
    const double c = 4 / (9 * p.kappa);
    const double a[3] = {r.a[0], r.a[1] * c, r.a[2] * c * c};
    const double b[3] = {r.b[0], r.b[1] * c, r.b[2] * c * c};
    auto degree = [](const double* x) {
        for (int d = 2; d >= 0; --d)
            if (x[d] != 0) return d;
        return -1;
    };
    const int da = degree(a);
    const int degP3 = da < 0 ? 0 : da + 1;
    int roots = 0;
    const int db = degree(b);
    if (db == 1) {
        roots = -b[0] / b[1] < 1;
    } else if (db == 2) {
        const double disc = b[1] * b[1] - 4 * b[2] * b[0];
        if (disc >= 0) {
            const double q = -0.5 * (b[1] + std::copysign(std::sqrt(disc), b[1]));
            double r1 = q / b[2], r2 = q != 0 ? b[0] / q : r1;
            roots = (r1 < 1) + (r2 < 1);
        }
    }
    return degP3 + roots + 1;
}

// ---- scans -----------------------------------------------------------------------

std::uint64_t draw_seed(std::uint64_t base, std::uint64_t index) {
    // splitmix64 of the pair
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

MelnikovParams draw_params(std::uint64_t seed, std::optional<CaseId> forced, const ScanLaw& law) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(-law.coeff_range, law.coeff_range), V(0, 1);
    const double k = std::exp(std::log(law.kappa_lo) + V(rng) * (std::log(law.kappa_hi) - std::log(law.kappa_lo)));
    const double a1 = U(rng), a2 = U(rng);
    double b0 = U(rng);
    double b1 = V(rng) < 0.5 ? 0.0 : 1.0;
    if (forced) {
        const double R = law.coeff_range, t = std::max(case_threshold(k), -R);
        const double u = V(rng);
        switch (*forced) {
            case CaseId::a: {
                // uniform on [-R, R] minus (t, 1)
                const double left = t + R, right = R - 1;
                const double x = u * (left + right);
                b0 = x < left ? -R + x : 1 + (x - left);
                b1 = 1;
                break;
            }
            case CaseId::b:
                b0 = t + u * (1 - t);
                if (b0 <= t) b0 = std::nextafter(t, 1.0);
                b1 = 1;
                break;
            case CaseId::c:
                b1 = 0;
                if (b0 == 0) b0 = R;
                break;
            case CaseId::d:
                b0 = b1 = 0;
                break;
        }
    }
    return MelnikovParams::from_alphabeta(k, a1, a2, b0, b1);
}

DrawResult run_draw(std::uint64_t seed, std::optional<CaseId> forced, const ZeroOptions& opts, const ScanLaw& law) {
    DrawResult d;
    d.seed = seed;
    try {
        d.params = draw_params(seed, forced, law);
        d.case_id = classify(d.params);
        d.bound = case_bound(d.case_id);
        Propagation prop(d.params.kappa);
        FamilyEvaluator ev(d.params, prop);
        d.counts = chain_check(ev, opts);
        d.argument_bound = argument_bound_F(d.params);
        d.ok = d.counts.degenerate || (d.counts.chain_ok && d.counts.g <= d.bound && d.counts.I <= 5);
    } catch (const std::exception& e) {
        d.ok = false;
        d.error = e.what();
    }
    return d;
}

std::vector<DrawResult> run_scan(std::uint64_t base_seed, int n, std::optional<CaseId> forced, int workers,
                                 const ZeroOptions& opts, const ScanLaw& law) {
    std::vector<DrawResult> out(std::max(n, 0));
    std::atomic<int> next{0};
    auto work = [&] {
        for (int i; (i = next++) < n;) out[i] = run_draw(draw_seed(base_seed, i), forced, opts, law);
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < std::max(workers, 1); ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return out;
}

int default_workers() {
    if (const char* e = std::getenv("Q4_WORKERS")) {
        const int v = std::atoi(e);
        if (v > 0) return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace q4
