// Command-line entry point: verify, scan, trace, construct, resultants, simulate.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "q4/phase_flow.hpp"
#include "q4/verifier.hpp"

using nlohmann::json;
using namespace q4;

namespace {

std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char b[40];
    std::snprintf(b, sizeof b, "%.17g", v);
    return b;
}

// JSON writer with floats fixed to 17 significant digits, so identical runs give identical bytes.
void write_json(std::ostream& os, const json& j, int indent, int depth = 0) {
    const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
    const std::string pad_end = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
    const char* nl = indent > 0 ? "\n" : "";
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                os << "{}";
                return;
            }
            os << '{' << nl;
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) os << ',' << nl;
                first = false;
                os << pad << json(it.key()).dump() << (indent > 0 ? ": " : ":");
                write_json(os, it.value(), indent, depth + 1);
            }
            os << nl << pad_end << '}';
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                os << "[]";
                return;
            }
            os << '[' << nl;
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) os << ',' << nl;
                os << pad;
                write_json(os, j[i], indent, depth + 1);
            }
            os << nl << pad_end << ']';
            return;
        }
        case json::value_t::number_float: {
            const double v = j.get<double>();
            if (std::isfinite(v))
                os << fmt(v);
            else
                os << "null";
            return;
        }
        default:
            os << j.dump();
    }
}

// Output goes to a file when a path is given, else stdout.
struct Sink {
    std::unique_ptr<std::ofstream> file;
    std::ostream* os = &std::cout;
    explicit Sink(const std::string& path) {
        if (path.empty() || path == "-") return;
        file = std::make_unique<std::ofstream>(path);
        if (!*file) throw CLI::ValidationError("--out", "cannot open " + path);
        os = file.get();
    }
    std::ostream& operator*() { return *os; }
};

json defaults_table() {
    const ZeroOptions z;
    const QuadratureOptions q;
    const PropagationOptions p;
    const VerifyOptions v;
    const FlowOptions f;
    const ScanLaw l;
    const TraceOptions t;
    return {
        {"quadrature", {{"tol", q.tol}, {"guard_band_fraction", q.guard}, {"trace_tol", t.tol}, {"trace_max_time", t.max_time}}},
        {"propagation",
         {{"center_band_fraction", p.center_band},
          {"loop_band_fraction", p.loop_band},
          {"tol", p.tol},
          {"center_order", p.center_order},
          {"floor_fraction", p.floor}}},
        {"zero_count",
         {{"grid_n", z.n},
          {"endpoint_standoff_fraction", z.standoff},
          {"bracket_tol", z.bracket_tol},
          {"screen", z.screen},
          {"tangency_rel", z.tangency_rel},
          {"check_doubling", z.check_doubling}}},
        {"scan_law",
         {{"coeff_range", l.coeff_range}, {"kappa_lo", l.kappa_lo}, {"kappa_hi", l.kappa_hi}, {"beta1", "0 or 1, p=1/2"}}},
        {"verify",
         {{"kappas", v.kappas}, {"tol", v.tol}, {"grid_n", v.grid_n}, {"draws", v.draws}, {"seed", v.seed}}},
        {"simulate", {{"tol", f.tol}, {"max_time", f.max_time}, {"grid_fraction", {0.1, 0.9}}}},
    };
}

json check_json(const Check& c) { return {{"name", c.name}, {"kind", c.kind}, {"pass", c.pass}, {"detail", c.detail}}; }

json report_json(const StatementReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(check_json(c));
    return {{"id", r.id}, {"pass", r.pass()}, {"checks", checks}, {"notes", r.notes}, {"artifacts", r.artifacts}};
}

json params_json(const MelnikovParams& p) {
    return {{"kappa", p.kappa},
            {"mu", p.mu},
            {"alpha", p.alpha},
            {"beta", p.beta}};
}

std::optional<CaseId> parse_case(const std::string& s) {
    if (s.empty() || s == "any") return std::nullopt;
    if (s == "a") return CaseId::a;
    if (s == "b") return CaseId::b;
    if (s == "c") return CaseId::c;
    if (s == "d") return CaseId::d;
    throw CLI::ValidationError("--case", "expected a, b, c, d or any");
}

// ---- subcommands ------------------------------------------------------------------------

struct VerifyArgs {
    std::string statement = "all";
    std::vector<double> kappas = VerifyOptions{}.kappas;
    double tol = VerifyOptions{}.tol;
    int grid = VerifyOptions{}.grid_n;
    int draws = VerifyOptions{}.draws;
    std::uint64_t seed = VerifyOptions{}.seed;
    int workers = 0;
    std::string out;
};

int run_verify(const VerifyArgs& a) {
    VerifyOptions o;
    o.kappas = a.kappas;
    o.tol = a.tol;
    o.grid_n = a.grid;
    o.draws = a.draws;
    o.seed = a.seed;
    o.workers = a.workers > 0 ? a.workers : default_workers();
    for (double k : o.kappas) check_kappa(k);
    std::vector<std::string> ids = a.statement == "all" ? statement_ids() : std::vector<std::string>{a.statement};
    std::vector<StatementReport> reps(ids.size());
    std::vector<std::string> errors(ids.size());
    // suites run side by side; results are assembled in statement order
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < ids.size();) {
            try {
                reps[i] = verify_statement(ids[i], o);
            } catch (const std::invalid_argument& e) {
                errors[i] = e.what();
            }
        }
    };
    const int threads = std::min<int>(o.workers, static_cast<int>(ids.size()));
    for (int w = 1; w < threads; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (!e.empty()) throw CLI::ValidationError("--statement", e);
    bool pass = true;
    json statements = json::array();
    for (const auto& r : reps) {
        pass = pass && r.pass();
        statements.push_back(report_json(r));
        std::cerr << (r.pass() ? "PASS " : "FAIL ") << r.id << " (" << r.checks.size() << " checks)\n";
        for (const auto& c : r.checks)
            if (!c.pass) std::cerr << "  failed: " << c.name << " | " << c.detail << "\n";
    }
    json rep = {{"command", "verify"},
                {"config",
                 {{"statement", a.statement},
                  {"kappas", o.kappas},
                  {"tol", o.tol},
                  {"grid_n", o.grid_n},
                  {"draws", o.draws},
                  {"seed", o.seed}}},
                {"defaults", defaults_table()},
                {"pass", pass},
                {"statements", statements}};
    Sink out(a.out);
    write_json(*out, rep, 2);
    *out << "\n";
    return pass ? 0 : 1;
}

struct ScanArgs {
    int n = 1000;
    std::uint64_t seed = 1;
    std::string case_id;
    int workers = 0;
    int grid = ZeroOptions{}.n;
    std::string out;
};

int run_scan_cmd(const ScanArgs& a) {
    ZeroOptions zo;
    zo.n = a.grid;
    auto forced = parse_case(a.case_id);
    auto res = run_scan(a.seed, a.n, forced, a.workers > 0 ? a.workers : default_workers(), zo);
    Sink out(a.out);
    bool ok = true;
    int max_counts[4] = {0, 0, 0, 0};
    for (const auto& d : res) {
        ok = ok && d.ok;
        max_counts[0] = std::max(max_counts[0], d.counts.I);
        max_counts[1] = std::max(max_counts[1], d.counts.G);
        max_counts[2] = std::max(max_counts[2], d.counts.F);
        max_counts[3] = std::max(max_counts[3], d.counts.g);
        json line = {{"seed", d.seed},
                     {"base_seed", a.seed},
                     {"kappa", d.params.kappa},
                     {"params", params_json(d.params)},
                     {"counts", {{"I", d.counts.I}, {"G", d.counts.G}, {"F", d.counts.F}, {"g", d.counts.g}}},
                     {"chain_ok", d.counts.chain_ok},
                     {"stable", d.counts.stable},
                     {"tangency", d.counts.tangency},
                     {"case", to_string(d.case_id)},
                     {"bound", d.bound},
                     {"argument_bound_F", d.argument_bound},
                     {"ok", d.ok}};
        if (!d.error.empty()) line["error"] = d.error;
        write_json(*out, line, 0);
        *out << "\n";
    }
    std::cerr << "draws " << res.size() << ", all ok: " << (ok ? "yes" : "no") << ", max counts I,G,F,g = "
              << max_counts[0] << "," << max_counts[1] << "," << max_counts[2] << "," << max_counts[3] << "\n";
    return ok ? 0 : 1;
}

struct TraceArgs {
    double kappa = 2;
    int n = 100;
    bool quadrature = false;
    std::string out;
};

int run_trace(const TraceArgs& a) {
    check_kappa(a.kappa);
    const double K = a.kappa - 1;
    std::unique_ptr<Propagation> prop;
    if (!a.quadrature) prop = std::make_unique<Propagation>(a.kappa);
    Sink out(a.out);
    *out << "s,J1,J2,J3,J4,J5,J6,provenance,err\n";
    for (int i = 0; i < a.n; ++i) {
        // interior points, clear of the quadrature guard bands when that oracle is used
        const double lo = a.quadrature ? 2e-3 : 1e-6, f = lo + (1 - 2 * lo) * (i + 0.5) / a.n;
        const double s = 1 + f * K;
        BasisVector b = prop ? prop->at(s) : basis(a.kappa, s);
        *out << fmt(s);
        for (double v : b.J) *out << ',' << fmt(v);
        *out << ',' << to_string(b.provenance) << ',' << fmt(b.err) << "\n";
    }
    return 0;
}

struct ConstructArgs {
    double kappa = 2;
    double bracket_tol = 1e-9;
    std::string out;
};

int run_construct(const ConstructArgs& a) {
    auto c = construct_three_zeros(a.kappa, a.bracket_tol);
    json zeros = json::array();
    for (const auto& z : c.evaluator_zeros.zeros)
        zeros.push_back({{"location", z.location}, {"width", z.width}, {"odd", z.odd}});
    json brackets = json::array();
    for (auto& [l, h] : c.quadrature_brackets) brackets.push_back({l, h});
    std::vector<std::string> gen;
    for (const auto& m : c.mu_generating) gen.push_back(m.get_str());
    json rep = {{"command", "construct"},
                {"config", {{"kappa", a.kappa}, {"bracket_tol", a.bracket_tol}}},
                {"defaults", defaults_table()},
                {"ok", c.ok},
                {"mu", c.mu},
                {"mu_generating_exact", gen},
                {"nu", c.nu},
                {"target_roots", c.target_roots},
                {"rho", c.rho},
                {"ratio", c.ratio},
                {"attempts", c.attempts},
                {"count_I", c.evaluator_zeros.count},
                {"evaluator_zeros", zeros},
                {"quadrature_count", c.quadrature_count},
                {"quadrature_brackets", brackets}};
    Sink out(a.out);
    write_json(*out, rep, 2);
    *out << "\n";
    if (!c.ok) std::cerr << "construction did not reach three confirmed zeros after " << c.attempts << " attempts\n";
    return c.ok ? 0 : 1;
}

int run_resultants(const std::string& path) {
    json items = json::array();
    bool ok = true;
    for (const auto& c : certificates()) {
        ok = ok && c.corrected_ok;
        json it = {{"name", c.name}, {"computed", c.computed}, {"printed", c.printed}, {"printed_holds", c.printed_ok}};
        if (!c.corrected.empty()) {
            it["corrected"] = c.corrected;
            it["corrected_holds"] = c.corrected_ok;
        }
        items.push_back(it);
        std::cerr << c.name << ": printed form " << (c.printed_ok ? "holds" : "does not hold");
        if (!c.corrected.empty()) std::cerr << ", corrected form " << (c.corrected_ok ? "holds" : "does not hold");
        std::cerr << "\n";
    }
    Sink out(path);
    write_json(*out, {{"command", "resultants"}, {"certificates", items}}, 2);
    *out << "\n";
    return ok ? 0 : 1;
}

struct SimulateArgs {
    double kappa = 2;
    double eps = 1e-3;
    std::string f1 = "0", f2 = "y";
    int grid = 20;
    int workers = 0;
    std::string out;
};

int run_simulate(const SimulateArgs& a) {
    Perturbation p;
    try {
        p.f1 = Poly2::parse(a.f1);
        p.f2 = Poly2::parse(a.f2);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError("--f1/--f2", e.what());
    }
    p.epsilon = a.eps;
    FlowOptions fo;
    fo.workers = a.workers > 0 ? a.workers : default_workers();
    auto samples = displacement(p, a.kappa, interior_energy_grid(a.kappa, a.grid), fo);
    Sink out(a.out);
    *out << "# kappa=" << fmt(a.kappa) << " eps=" << fmt(a.eps) << " f1=" << p.f1.str() << " f2=" << p.f2.str() << "\n";
    *out << "h,s,M1,d,d_over_eps,rel_dev,returned,period\n";
    bool all = true;
    for (const auto& s : samples) {
        all = all && s.returned;
        const double rel = s.melnikov != 0 ? std::abs(s.d_over_eps - s.melnikov) / std::abs(s.melnikov) : NAN;
        *out << fmt(s.h) << ',' << fmt(s_of_energy(a.kappa, s.h)) << ',' << fmt(s.melnikov) << ',' << fmt(s.d) << ','
             << fmt(s.d_over_eps) << ',' << fmt(rel) << ',' << (s.returned ? 1 : 0) << ',' << fmt(s.period) << "\n";
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zero counting and verification toolkit for the Abelian integrals of the cubic Hamiltonian family"};
    app.require_subcommand(1);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run statement suites and write a JSON report");
    verify->add_option("--statement", va.statement, "Statement id or 'all'")->capture_default_str();
    verify->add_option("--kappa", va.kappas, "Comma-separated kappa values")->delimiter(',')->capture_default_str();
    verify->add_option("--tol", va.tol, "Numeric tolerance for the quadrature fits")->capture_default_str();
    verify->add_option("--grid", va.grid, "Grid size for sign suites")->capture_default_str();
    verify->add_option("--draws", va.draws, "Random draws per scan-based check")->capture_default_str();
    verify->add_option("--seed", va.seed, "RNG seed")->capture_default_str();
    verify->add_option("--workers", va.workers, "Worker threads (default: Q4_WORKERS or all cores)");
    verify->add_option("--out", va.out, "Report path (default stdout)");

    ScanArgs sa;
    auto* scan = app.add_subcommand("scan", "Seeded random parameter scan, JSON lines");
    scan->add_option("--n", sa.n, "Number of draws")->capture_default_str()->check(CLI::NonNegativeNumber);
    scan->add_option("--seed", sa.seed, "Base seed")->capture_default_str();
    scan->add_option("--case", sa.case_id, "Restrict draws to case a, b, c or d");
    scan->add_option("--grid", sa.grid, "Zero-count sample size")->capture_default_str();
    scan->add_option("--workers", sa.workers, "Worker threads (default: Q4_WORKERS or all cores)");
    scan->add_option("--out", sa.out, "Output path (default stdout)");

    TraceArgs ta;
    auto* trace = app.add_subcommand("trace", "Basis integrals J1..J6 on an interior grid, CSV");
    trace->add_option("--kappa", ta.kappa, "kappa > 1")->capture_default_str();
    trace->add_option("--n", ta.n, "Grid points")->capture_default_str()->check(CLI::PositiveNumber);
    trace->add_flag("--quadrature", ta.quadrature, "Use direct quadrature instead of propagation");
    trace->add_option("--out", ta.out, "Output path (default stdout)");

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Parameters with three zeros of I near s = k");
    construct->add_option("--kappa", ca.kappa, "kappa > 1")->capture_default_str();
    construct->add_option("--bracket-tol", ca.bracket_tol, "Final bracket width")->capture_default_str();
    construct->add_option("--out", ca.out, "Report path (default stdout)");

    std::string res_out;
    auto* res = app.add_subcommand("resultants", "Exact resultants and determinants as canonical polynomial text");
    res->add_option("--out", res_out, "Output path (default stdout)");

    SimulateArgs ma;
    auto* sim = app.add_subcommand("simulate", "Perturbed flow displacement against the first-order integral, CSV");
    sim->add_option("--kappa", ma.kappa, "kappa > 1")->capture_default_str();
    sim->add_option("--eps", ma.eps, "Perturbation size")->capture_default_str();
    sim->add_option("--f1", ma.f1, "x-component, terms c*x^i*y^j joined by +")->capture_default_str();
    sim->add_option("--f2", ma.f2, "y-component")->capture_default_str();
    sim->add_option("--grid", ma.grid, "Energy grid points")->capture_default_str()->check(CLI::PositiveNumber);
    sim->add_option("--workers", ma.workers, "Worker threads");
    sim->add_option("--out", ma.out, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
        if (*verify) return run_verify(va);
        if (*scan) return run_scan_cmd(sa);
        if (*trace) return run_trace(ta);
        if (*construct) return run_construct(ca);
        if (*res) return run_resultants(res_out);
        if (*sim) return run_simulate(ma);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
