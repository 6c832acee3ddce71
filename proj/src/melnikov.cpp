#include "q4/melnikov.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "q4/series.hpp"

namespace q4 {

// ---- tilde map ------------------------------------------------------------------

Mu tilde_transform(const Mu& m, double k) {
    return {m[0], -2 * m[1] / 3 - 2 * (k - 1) * m[2] / (3 * k), -2 * m[2] / (3 * k), m[3]};
}

Mu inverse_tilde_transform(const Mu& m, double k) {
    return {m[0], -1.5 * m[1] + 1.5 * (k - 1) * m[2], -1.5 * k * m[2], m[3]};
}

MuExact tilde_transform(const MuExact& m, const mpq_class& k) {
    return {m[0], mpq_class(-2 * m[1] / 3 - 2 * (k - 1) * m[2] / (3 * k)), mpq_class(-2 * m[2] / (3 * k)), m[3]};
}

MuExact inverse_tilde_transform(const MuExact& m, const mpq_class& k) {
    mpq_class h(3, 2);
    return {m[0], mpq_class(-h * m[1] + h * (k - 1) * m[2]), mpq_class(-h * k * m[2]), m[3]};
}

// ---- linear maps as rational functions of k ----------------------------------------

namespace {

FuncMatrix parse_matrix(const std::vector<std::vector<std::pair<const char*, const char*>>>& e) {
    FuncMatrix m;
    for (auto& row : e) {
        std::vector<RatFunc> r;
        for (auto& [n, d] : row) r.push_back(RatFunc::parse(n, d, Var::k));
        m.push_back(std::move(r));
    }
    return m;
}

const char* kInverseMu4A2Printed = "3*(69984-162*k-276246*k^2+44405*k^3+59165*k^4)";
const char* kInverseMu4A2 = "3*(69984-1620*k-276246*k^2+44405*k^3+59165*k^4)";

FuncMatrix inverse_with(const char* mu4_a2) {
    return parse_matrix({
        {{"9*(162-213*k-205*k^2)", "246400"},
         {"9*(23328+17604*k-79904*k^2-59165*k^3)", "54454400"},
         {"-9*(27-18*k-5*k^2)", "22400*(k-1)"},
         {"-9*(162-4236*k+657*k^2+2845*k^3)", "3203200*(k-1)"}},
        {{"-3*(54-77*k+82*k^2)", "30800*k"},
         {"-3*(3888+2502*k-5184*k^2+11833*k^3)", "3403400*k"},
         {"3*(9-7*k+2*k^2)", "2800*k*(k-1)"},
         {"3*(27-709*k+965*k^2-569*k^3)", "200200*k*(k-1)"}},
        {{"3*(-54+71*k+205*k^2)", "61600*k"},
         {"-3*(7776+5868*k-47598*k^2-59165*k^3)", "13613600*k"},
         {"3*(9-6*k-5*k^2)", "5600*k*(k-1)"},
         {"3*(54-1412*k-1201*k^2+2845*k^3)", "800800*k*(k-1)"}},
        {{"3*(486-1017*k+90*k^2+205*k^3)", "246400*k*(k-1)"},
         {mu4_a2, "54454400*k*(k-1)"},
         {"-3*(k-3)*(-27+30*k+5*k^2)", "22400*k*(k-1)^2"},
         {"-3*(486-13086*k+16683*k^2+1050*k^3-2845*k^4)", "3203200*k*(k-1)^2"}},
    });
}

}  // namespace

const FuncMatrix& alphabeta_matrix() {
    static const FuncMatrix m = parse_matrix({
        {{"128*(42+13*k)", "9*k"}, {"16*(54+13*k)", "3*k"}, {"32*(27+38*k+15*k^2)", "3*k"}, {"-128*(k-1)*(2*k-9)", "3*k"}},
        {{"128*(-117-265*k+30*k^2)", "27*k^2"},
         {"16*(-174+5*k)", "3*k"},
         {"-16*(243+121*k)", "3*k"},
         {"64*(k-1)*(-119+60*k)", "9*k"}},
        {{"1088*(21+k)", "27*k^2"}, {"544", "k"}, {"1088", "k"}, {"1088*(k-1)", "9*k"}},
        {{"-256*(k-1)", "3*k"}, {"-32*(-27+25*k+15*k^2)", "3*k"}, {"-16*(k-1)*(54+31*k)", "3*k"}, {"-64*(k-1)*(-18+5*k)", "3*k"}},
        {{"-64*(k-1)*(18+77*k)", "27*k^2"},
         {"-16*(-111+137*k)", "3*k"},
         {"-768*(k-1)", "k"},
         {"-64*(k-1)*(-116+77*k)", "9*k"}},
    });
    return m;
}

const FuncMatrix& alphabeta_inverse_matrix() {
    static const FuncMatrix m = inverse_with(kInverseMu4A2);
    return m;
}

const FuncMatrix& alphabeta_inverse_matrix_printed() {
    static const FuncMatrix m = inverse_with(kInverseMu4A2Printed);
    return m;
}

AlphaBeta mu_to_alphabeta(const Mu& mu, double k) {
    const auto& M = alphabeta_matrix();
    double v[5] = {};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 4; ++j) v[i] += M[i][j].eval(k) * mu[j];
    return {{v[0], v[1], v[2]}, {v[3], v[4]}};
}

AlphaBetaExact mu_to_alphabeta(const MuExact& mu, const mpq_class& k) {
    const auto& M = alphabeta_matrix();
    mpq_class v[5];
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 4; ++j) v[i] += M[i][j].eval(k) * mu[j];
    return {{v[0], v[1], v[2]}, {v[3], v[4]}};
}

Mu alphabeta_to_mu(double a1, double a2, double b0, double b1, double k) {
    const auto& M = alphabeta_inverse_matrix();
    const double x[4] = {a1, a2, b0, b1};
    Mu mu{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) mu[i] += M[i][j].eval(k) * x[j];
    return mu;
}

MuExact alphabeta_to_mu(const mpq_class& a1, const mpq_class& a2, const mpq_class& b0, const mpq_class& b1,
                        const mpq_class& k) {
    const auto& M = alphabeta_inverse_matrix();
    const mpq_class x[4] = {a1, a2, b0, b1};
    MuExact mu;
    for (int i = 0; i < 4; ++i) {
        mu[i] = 0;
        for (int j = 0; j < 4; ++j) mu[i] += M[i][j].eval(k) * x[j];
    }
    return mu;
}

double alpha0_identity(double a1, double a2, double b0, double b1, double k) { return b0 - k * b1 - k * a1 - k * k * a2; }

// ---- a, b coefficients -------------------------------------------------------------

namespace {
template <class T>
void ab(const std::array<T, 4>& mu, const T& k, std::array<T, 3>& a, std::array<T, 3>& b) {
    const T &m1 = mu[0], &m2 = mu[1], &m3 = mu[2], &m4 = mu[3];
    const T K = k - T(1);
    a[0] = T(64) * m1 + T(24) * m2 + T(8) * (T(5) * k + T(3)) * m3 + T(32) * K * m4;
    a[1] = T(40) * (k - T(9)) * m1 - T(162) * m2 - T(18) * (T(11) * k + T(9)) * m3 + T(24) * K * (T(5) * k - T(9)) * m4;
    a[2] = T(18) * (k + T(21)) * m1 + T(243) * k * m2 + T(486) * k * m3 + T(54) * k * K * m4;
    b[0] = T(-32) * ((T(5) * k - T(3)) * m2 + T(3) * K * m3 - T(4) * K * m4);
    b[1] = T(72) * (T(4) * K * m1 + (T(5) * k * k + T(8) * k - T(9)) * m2 + T(3) * K * (T(2) * k + T(3)) * m3 +
                    T(4) * K * (k - T(3)) * m4);
    b[2] = T(-54) * (T(4) * K * (T(2) * k + T(1)) * m1 + T(3) * k * (T(11) * k - T(9)) * m2 + T(36) * k * K * m3 +
                     T(12) * k * K * (T(2) * k - T(3)) * m4);
}
}  // namespace

RCoefficients r_coefficients(const Mu& mu, double k) {
    RCoefficients r;
    ab<double>(mu, k, r.a, r.b);
    return r;
}

RCoefficientsExact r_coefficients(const MuExact& mu, const mpq_class& k) {
    RCoefficientsExact r;
    ab<mpq_class>(mu, k, r.a, r.b);
    return r;
}

// ---- parameters -----------------------------------------------------------------------

MelnikovParams MelnikovParams::from_mu(double kappa, const Mu& mu) {
    check_kappa(kappa);
    MelnikovParams p;
    p.kappa = kappa;
    p.mu = mu;
    auto ab = mu_to_alphabeta(mu, kappa);
    p.alpha = ab.alpha;
    p.beta = ab.beta;
    return p;
}

MelnikovParams MelnikovParams::from_alphabeta(double kappa, double a1, double a2, double b0, double b1) {
    check_kappa(kappa);
    MelnikovParams p;
    p.kappa = kappa;
    p.mu = alphabeta_to_mu(a1, a2, b0, b1, kappa);
    p.alpha = {alpha0_identity(a1, a2, b0, b1, kappa), a1, a2};
    p.beta = {b0, b1};
    return p;
}

MelnikovParams MelnikovParams::normalized_copy() const {
    MelnikovParams p = *this;
    if (beta[1] != 0) {
        const double f = beta[1];
        for (auto& a : p.alpha) a /= f;
        p.beta[0] /= f;
        p.beta[1] = 1;
        for (auto& m : p.mu) m /= f;
    }
    p.normalized = true;
    return p;
}

bool MelnikovParams::is_zero() const {
    return std::all_of(mu.begin(), mu.end(), [](double v) { return v == 0; });
}

std::string to_string(FunctionId id) {
    switch (id) {
        case FunctionId::I_of_s: return "I";
        case FunctionId::Gbar_of_h: return "G";
        case FunctionId::R_of_h: return "R";
        case FunctionId::F_of_s: return "F";
        case FunctionId::g_of_s: return "g";
    }
    return "?";
}

FunctionId function_from_string(const std::string& s) {
    if (s == "I") return FunctionId::I_of_s;
    if (s == "G") return FunctionId::Gbar_of_h;
    if (s == "R") return FunctionId::R_of_h;
    if (s == "F") return FunctionId::F_of_s;
    if (s == "g") return FunctionId::g_of_s;
    throw std::invalid_argument("unknown function id: " + s);
}

// ---- evaluation -------------------------------------------------------------------------

double P3(const RCoefficients& r, double k, double s) {
    const double h2 = 4 * s / (9 * k);
    return (4 * s - 4) * (r.a[0] + r.a[1] * h2 + r.a[2] * h2 * h2);
}

double Q2(const RCoefficients& r, double k, double s) {
    const double h2 = 4 * s / (9 * k);
    return r.b[0] + r.b[1] * h2 + r.b[2] * h2 * h2;
}

double P2(const MelnikovParams& p, double s) { return (p.alpha[2] * s + p.alpha[1]) * s + p.alpha[0]; }
double Q1(const MelnikovParams& p, double s) { return p.beta[1] * s - p.beta[0]; }

namespace {

double I_value(const Mu& pre, double k, double s, const std::array<double, 6>& J) {
    const double r = std::sqrt(s / k), K = k - 1;
    const auto& [m1, m2, m3, m4] = pre;
    return (2 * s / (3 * k) * m1 + 2 / (3 * k) * m3) * J[0] + (2.0 / 3 * m2 + 2 * K / (3 * k) * m3) * J[1] -
           6 * m4 * r * J[2] + (4 + 2 * s) * m4 * J[3] - 2.0 / 3 * r * (m2 + 3 * K * m4) * J[4] -
           2.0 / 3 * r * (m1 + m3) * J[5];
}

double G_value(const Mu& mu, double k, double h, const std::array<double, 6>& J) {
    const auto& [m1, m2, m3, m4] = mu;
    return (m1 * h * h + m3) * J[0] + m2 * J[1] + m4 * (-4 * h * J[2] + (3 * k * h * h - 4) * J[3]);
}

void check_s(double k, double s) {
    if (!(s > 1 && s <= k)) throw DomainError("point outside the open interval (1, kappa)");
}

}  // namespace

double eval_family_on(FunctionId id, const MelnikovParams& p, double s, const std::array<double, 6>& J) {
    const double k = p.kappa;
    check_s(k, s);
    switch (id) {
        case FunctionId::I_of_s: return I_value(inverse_tilde_transform(p.mu, k), k, s, J);
        case FunctionId::Gbar_of_h: return G_value(p.mu, k, energy_of_s(k, s), J);
        case FunctionId::R_of_h: {
            const double h = energy_of_s(k, s);
            auto r = r_coefficients(p.mu, k);
            const double den = (9 * h * h - 4) * (9 * h * h - 4) * (9 * k * h * h - 4);
            return 2 * h * (P3(r, k, s) * J[0] + Q2(r, k, s) * J[1]) / den;
        }
        case FunctionId::F_of_s: {
            auto r = r_coefficients(p.mu, k);
            return P3(r, k, s) * J[0] + Q2(r, k, s) * J[1];
        }
        case FunctionId::g_of_s: return P2(p, s) + Q1(p, s) * J[1] / J[0];
    }
    return 0;
}

double eval_family(FunctionId id, const MelnikovParams& p, double point, const Propagation& prop) {
    double s = point;
    if (id == FunctionId::Gbar_of_h || id == FunctionId::R_of_h) {
        if (!(point >= center_energy() && point < loop_energy(p.kappa))) throw DomainError("energy outside the annulus");
        s = s_of_energy(p.kappa, point);
    }
    check_s(p.kappa, s);
    return eval_family_on(id, p, s, prop.at(s).J);
}

// ---- evaluator with center Taylor data ----------------------------------------------

namespace {

// Taylor coefficients at k of a polynomial given by coefficients in s.
std::vector<double> shift_poly(const std::vector<double>& c, double k, std::size_t n) {
    std::vector<double> out(n, 0.0);
    std::vector<double> work = c;
    // repeated synthetic division by (s - k)
    for (std::size_t i = 0; i < n && !work.empty(); ++i) {
        double acc = 0;
        std::vector<double> q(work.size() > 1 ? work.size() - 1 : 0);
        for (std::size_t j = work.size(); j-- > 0;) {
            double next = acc * k + work[j];
            if (j > 0) q[j - 1] = next;
            acc = next;
        }
        out[i] = acc;
        work = q;
    }
    return out;
}

}  // namespace

int FamilyEvaluator::structural_order(FunctionId id) {
    switch (id) {
        case FunctionId::I_of_s: return 1;
        case FunctionId::Gbar_of_h: return 0;
        case FunctionId::R_of_h: return 0;
        case FunctionId::F_of_s: return 2;
        case FunctionId::g_of_s: return 1;
    }
    return 0;
}

int FamilyEvaluator::slot(FunctionId id) const {
    switch (id) {
        case FunctionId::I_of_s: return 0;
        case FunctionId::Gbar_of_h: return 1;
        case FunctionId::F_of_s: return 2;
        case FunctionId::g_of_s: return 3;
        default: throw std::invalid_argument("no series data for R; count F instead");
    }
}

FamilyEvaluator::FamilyEvaluator(const MelnikovParams& p, const Propagation& prop) : p_(p), prop_(&prop) {
    if (p.kappa != prop.kappa()) throw DomainError("parameter kappa differs from the propagation kappa");
    const double k = p.kappa, K = k - 1;
    r_ = r_coefficients(p.mu, k);
    pre_ = inverse_tilde_transform(p.mu, k);
    const auto& cs = prop.center();
    const std::size_t n = cs.c.size();
    std::array<std::vector<double>, 6> J;
    for (int i = 0; i < 6; ++i) J[i] = cs.coeffs(i);
    const auto rp = series::binomial<double>(0.5, k, n);
    std::vector<double> s_ser(n, 0.0);
    s_ser[0] = k;
    if (n > 1) s_ser[1] = 1;
    using series::add;
    using series::mul;
    using series::scale;
    // I
    {
        const auto& [m1, m2, m3, m4] = pre_;
        std::vector<double> c1 = add(scale(s_ser, 2 * m1 / (3 * k)), std::vector<double>{2 * m3 / (3 * k)});
        auto f = mul(c1, J[0], n);
        f = add(f, scale(J[1], 2.0 / 3 * m2 + 2 * K / (3 * k) * m3));
        f = add(f, scale(mul(rp, J[2], n), -6 * m4));
        f = add(f, mul(add(scale(s_ser, 2 * m4), std::vector<double>{4 * m4}), J[3], n));
        f = add(f, scale(mul(rp, J[4], n), -2.0 / 3 * (m2 + 3 * K * m4)));
        f = add(f, scale(mul(rp, J[5], n), -2.0 / 3 * (m1 + m3)));
        f[0] = 0;
        taylor_[0] = f;
    }
    // G in s: h = -(2/3) rp, h^2 = 4s/(9k)
    {
        const auto& [m1, m2, m3, m4] = p.mu;
        auto c1 = add(scale(s_ser, 4 * m1 / (9 * k)), std::vector<double>{m3});
        auto f = mul(c1, J[0], n);
        f = add(f, scale(J[1], m2));
        f = add(f, scale(mul(rp, J[2], n), 8.0 / 3 * m4));
        f = add(f, mul(add(scale(s_ser, 4 * m4 / 3), std::vector<double>{-4 * m4}), J[3], n));
        taylor_[1] = f;
    }
    // F
    {
        const double a0 = r_.a[0], a1 = r_.a[1], a2 = r_.a[2];
        const double c = 4 / (9 * k);
        std::vector<double> inner{a0, a1 * c, a2 * c * c};
        std::vector<double> p3 = mul(std::vector<double>{-4, 4}, inner, 4);
        std::vector<double> q2{r_.b[0], r_.b[1] * c, r_.b[2] * c * c};
        auto f = add(mul(shift_poly(p3, k, n), J[0], n), mul(shift_poly(q2, k, n), J[1], n));
        f[0] = 0;
        if (n > 1) f[1] = 0;
        taylor_[2] = f;
    }
    // g
    {
        std::vector<double> p2{p.alpha[0], p.alpha[1], p.alpha[2]};
        std::vector<double> q1{-p.beta[0], p.beta[1]};
        auto f = add(shift_poly(p2, k, n), mul(shift_poly(q1, k, n), prop.ratio_series(), n));
        f[0] = 0;
        taylor_[3] = f;
    }
    const FunctionId ids[4] = {FunctionId::I_of_s, FunctionId::Gbar_of_h, FunctionId::F_of_s, FunctionId::g_of_s};
    for (int i = 0; i < 4; ++i) {
        const int m = structural_order(ids[i]);
        auto c = scale(series::shift_down(taylor_[i], m), m % 2 ? -1.0 : 1.0);
        counting_series_[i] = i == 3 ? c : series::div(c, J[0], c.size());
    }
}

const std::vector<double>& FamilyEvaluator::taylor(FunctionId id) const { return taylor_[slot(id)]; }

double FamilyEvaluator::value(FunctionId id, double s) const {
    check_s(p_.kappa, s);
    return eval_family_on(id, p_, s, prop_->at(s).J);
}

double FamilyEvaluator::counting(FunctionId id, double s) const {
    const double k = p_.kappa;
    check_s(k, s);
    if (id == FunctionId::R_of_h) return -counting(FunctionId::F_of_s, s);  // same zeros, R = -(positive) F
    if (s >= prop_->center_edge()) return series::eval(counting_series_[slot(id)], s - k);
    auto b = prop_->at(s);
    double v = eval_family_on(id, p_, s, b.J);
    const int m = structural_order(id);
    v /= std::pow(k - s, m);
    if (id != FunctionId::g_of_s) v /= b.J[0];
    return v;
}

// ---- nu map ---------------------------------------------------------------------

namespace {

using RSeries = std::vector<RatFunc>;

RSeries rmul(const RSeries& a, const RSeries& b, std::size_t n) {
    RSeries c(n, RatFunc(mpq_class(0)));
    for (std::size_t i = 0; i < std::min(n, a.size()); ++i)
        for (std::size_t j = 0; j < b.size() && i + j < n; ++j) c[i + j] = c[i + j] + a[i] * b[j];
    return c;
}
RSeries radd(const RSeries& a, const RSeries& b) {
    RSeries c(std::max(a.size(), b.size()), RatFunc(mpq_class(0)));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = c[i] + a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = c[i] + b[i];
    return c;
}
RSeries rscale(RSeries a, const RatFunc& f) {
    for (auto& x : a) x = x * f;
    return a;
}

}  // namespace

const FuncMatrix& nu_matrix() {
    static const FuncMatrix m = [] {
        const std::size_t n = 5;
        const auto& tab = center_series_table();
        std::array<RSeries, 6> J;
        for (int i = 0; i < 6; ++i) J[i] = RSeries(tab[i].begin(), tab[i].end());
        const RatFunc k(UPoly(std::vector<mpq_class>{0, 1}), UPoly(std::vector<mpq_class>{1}));
        const RatFunc one(mpq_class(1)), K = k - one;
        // sqrt(s/k) = (1 + t/k)^(1/2)
        RSeries rp(n, RatFunc(mpq_class(0)));
        rp[0] = one;
        RatFunc kinv = one / k;
        for (std::size_t i = 1; i < n; ++i)
            rp[i] = rp[i - 1] * RatFunc(mpq_class(mpq_class(1, 2) - mpq_class(long(i) - 1))) * RatFunc(mpq_class(1, long(i))) * kinv;
        const RSeries s_ser{k, one};
        auto c = [](long a, long b) { return RatFunc(mpq_class(a, b)); };
        // series of I / J1(k) split by generating-function mu_j
        std::array<RSeries, 4> col;
        col[0] = radd(rmul(rscale(s_ser, c(2, 3) / k), J[0], n), rscale(rmul(rp, J[5], n), c(-2, 3)));
        col[1] = radd(rscale(J[1], c(2, 3)), rscale(rmul(rp, J[4], n), c(-2, 3)));
        col[2] = radd(radd(rscale(J[0], c(2, 3) / k), rscale(J[1], c(2, 3) * K / k)), rscale(rmul(rp, J[5], n), c(-2, 3)));
        col[3] = radd(radd(rscale(rmul(rp, J[2], n), c(-6, 1)), rmul(radd(rscale(s_ser, c(2, 1)), RSeries{c(4, 1)}), J[3], n)),
                      rscale(rmul(rp, J[4], n), c(-2, 1) * K));
        FuncMatrix out(4, std::vector<RatFunc>(4));
        long fact = 1;
        for (int i = 0; i < 4; ++i) {
            fact *= i + 1;  // derivatives, not coefficients
            for (int j = 0; j < 4; ++j) out[i][j] = col[j][i + 1] * RatFunc(mpq_class(fact));
        }
        return out;
    }();
    return m;
}

const FuncMatrix& nu_matrix_printed() {
    static const FuncMatrix m = parse_matrix({
        {{"2", "9*k"}, {"-1", "3*k"}, {"-1", "3*k"}, {"2*(k-1)", "3*k"}},
        {{"13*k-18", "162*k^2*(k-1)"}, {"17*k-18", "108*k^2*(k-1)"}, {"17*k-12", "108*k^2*(k-1)"}, {"13*k+18", "54*k^2"}},
        {{"-(1944-4068*k+1739*k^2)", "11664*k^3*(k-1)^2"},
         {"-(1944-3780*k+1801*k^2)", "7776*k^3*(k-1)^2"},
         {"-(1296-2712*k+1801*k^2)", "7776*k^3*(k-1)^2"},
         {"-(-1944+1260*k+1739*k^2)", "3888*k^3*(k-1)^2"}},
        {{"5*(-104976+324648*k-338526*k^2+101837*k^3)", "1259712*k^4*(k-1)^3"},
         {"5*(-104976+309096*k-301374*k^2+96253*k^3)", "839808*k^4*(k-1)^3"},
         {"5*(-69984+216432*k-225684*k^2+96253*k^3)", "839808*k^4*(k-1)^3"},
         {"5*(104976-180792*k+7398*k^2+101837*k^3)", "419904*k^4*(k-1)^3"}},
    });
    return m;
}

// ---- operator identity ------------------------------------------------------------

L2Report apply_L2(const MelnikovParams& p, const std::vector<double>& grid, const Propagation& prop, double frac) {
    const double k = p.kappa;
    L2Report rep;
    rep.spacing = frac;
    auto G = [&](double s) { return eval_family_on(FunctionId::Gbar_of_h, p, s, prop.at(s).J); };
    auto lhs_at = [&](double s, double d) {
        const double g0 = G(s), gp = G(s + d), gm = G(s - d), gpp = G(s + 2 * d), gmm = G(s - 2 * d);
        const double d1 = (-gpp + 8 * gp - 8 * gm + gmm) / (12 * d);
        const double d2 = (-gpp + 16 * gp - 30 * g0 + 16 * gm - gmm) / (12 * d * d);
        return s * (1 - s) * d2 - d1 / 2 - 5 * g0 / 36;
    };
    std::vector<double> half;
    double scale = 0;
    for (double s : grid) {
        const double d = frac * std::min({s - 1, k - s, k - 1});
        const double F = eval_family_on(FunctionId::F_of_s, p, s, prop.at(s).J);
        const double rhs = k * F / (1152 * (s - k) * (s - k) * (s - 1));
        rep.s.push_back(s);
        rep.lhs.push_back(lhs_at(s, d));
        half.push_back(lhs_at(s, d / 2));
        rep.rhs_printed.push_back(rhs);
        scale = std::max(scale, std::abs(rhs));
    }
    if (scale == 0) return rep;  // zero parameters: both sides vanish
    for (std::size_t i = 0; i < grid.size(); ++i) {
        rep.max_rel_printed = std::max(rep.max_rel_printed, std::abs(rep.lhs[i] - rep.rhs_printed[i]) / scale);
        rep.max_rel_corrected = std::max(rep.max_rel_corrected, std::abs(rep.lhs[i] + rep.rhs_printed[i]) / scale);
        rep.max_rel_corrected_half = std::max(rep.max_rel_corrected_half, std::abs(half[i] + rep.rhs_printed[i]) / scale);
    }
    rep.reduction = rep.max_rel_corrected / rep.max_rel_corrected_half;
    return rep;
}

double L2h_residual(const MelnikovParams& p, double h, const Propagation& prop, double dh) {
    const double k = p.kappa;
    auto G = [&](double hh) { return eval_family(FunctionId::Gbar_of_h, p, hh, prop); };
    const double g0 = G(h), gp = G(h + dh), gm = G(h - dh), gpp = G(h + 2 * dh), gmm = G(h - 2 * dh);
    const double d1 = (-gpp + 8 * gp - 8 * gm + gmm) / (12 * dh);
    const double d2 = (-gpp + 16 * gp - 30 * g0 + 16 * gm - gmm) / (12 * dh * dh);
    const double L = 5 * k * h * g0 - (9 * k * h * h - 8) * d1 + h * (9 * k * h * h - 4) * d2;
    const double R = eval_family(FunctionId::R_of_h, p, h, prop);
    return std::abs(L - R) / std::max(std::abs(R), 1e-300);
}

}  // namespace q4
