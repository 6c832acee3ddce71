#include "q4/picard_fuchs.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "q4/float128.hpp"
#include "q4/series.hpp"

namespace q4 {

std::array<double, 6> pf1_residual(double k, double h, const std::array<double, 6>& I, const std::array<double, 6>& dI) {
    // basis order: 0:I00 1:I11 2:I-10 3:I-11 4:I10 5:I01
    const double K = k - 1;
    return {
        I[0] - (1.5 * h * dI[0] + dI[5]),
        I[4] - (h * dI[4] + 2.0 / 3.0 * dI[1]),
        I[5] - (2.0 / (3 * k) * dI[0] + h * dI[5] + 2 * K / (3 * k) * dI[1]),
        I[1] - (3 * h / 8 * dI[0] + dI[4] / 2 + dI[5] / 4 + 3 * h / 4 * dI[1]),
        I[2] - (3 * h * dI[2] + 2 * dI[3]),
        I[3] - (K / k * dI[4] + dI[2] / k + 1.5 * h * dI[3]),
    };
}

Mat6 pf6_matrix(double k, double s) {
    const double K = k - 1, r = std::sqrt(k / s);
    Mat6 M{};
    M[0][0] = 1 - s;
    M[0][1] = K;
    M[1][0] = 1 - s;
    M[1][1] = s - 1;
    M[2][0] = -r * K;
    M[2][1] = r * K;
    M[2][2] = -2 * (s - k);
    M[2][3] = -r * (s - k);
    M[3][0] = -K;
    M[3][1] = K;
    M[3][2] = -2 * (s - k) / std::sqrt(s * k);
    M[3][3] = k - s;
    M[4][0] = -r * (s - 1);
    M[4][1] = r * (s - 1);
    M[5][0] = -r * (s - 1);
    M[5][1] = K * std::sqrt(s / k);
    return M;
}

std::array<double, 2> pf2_residual(double k, double s, const std::array<double, 2>& J, const std::array<double, 2>& dJ) {
    const double D = 6 * (s - 1) * (s - k);
    return {D * dJ[0] - ((1 - s) * J[0] + (k - 1) * J[1]), D * dJ[1] - ((1 - s) * J[0] + (s - 1) * J[1])};
}

// ---- center series -----------------------------------------------------------

std::array<double, 6> CenterSeries::eval(double s) const {
    const double t = s - kappa;
    std::array<double, 6> out{};
    for (int i = 0; i < 6; ++i) {
        double acc = 0;
        for (std::size_t n = c.size(); n-- > 0;) acc = acc * t + c[n][i];
        out[i] = J1_center * acc;
    }
    return out;
}

std::vector<double> CenterSeries::coeffs(int i) const {
    std::vector<double> v(c.size());
    for (std::size_t n = 0; n < c.size(); ++n) v[n] = c[n][i];
    return v;
}

const std::array<std::array<RatFunc, 5>, 6>& center_series_table() {
    static const auto table = [] {
        const char* e[6][4][2] = {
            {{"-5", "36*(k-1)"}, {"385", "5184*(k-1)^2"}, {"-85085", "1679616*(k-1)^3"},
             {"37182145", "967458816*(k-1)^4"}},
            {{"1", "36*(k-1)"}, {"-35", "5184*(k-1)^2"}, {"5005", "1679616*(k-1)^3"},
             {"-1616615", "967458816*(k-1)^4"}},
            {{"-17", "36*(k-1)"},
             {"1837*k-36", "5184*k*(k-1)^2"},
             {"-(5832-21276*k+496709*k^2)", "1679616*k^2*(k-1)^3"},
             {"5*(-419904+1870128*k-3388824*k^2+50126789*k^3)", "967458816*k^3*(k-1)^4"}},
            {{"-(5*k+12)", "36*k*(k-1)"},
             {"-432+1848*k+385*k^2", "5184*k^2*(k-1)^2"},
             {"-(69984-286416*k+612612*k^2+85085*k^3)", "1679616*k^3*(k-1)^3"},
             {"37182145*k^4+356948592*k^3-250327584*k^2+122332032*k-25194240", "967458816*k^4*(k-1)^4"}},
            {{"1", "36*(k-1)"},
             {"36-71*k", "5184*k*(k-1)^2"},
             {"5832-15444*k+14617*k^2", "1679616*k^2*(k-1)^3"},
             {"-5*(-419904+1504656*k-1965816*k^2+1204387*k^3)", "967458816*k^3*(k-1)^4"}},
            {{"k-6", "36*k*(k-1)"},
             {"-(216-672*k+71*k^2)", "5184*k^2*(k-1)^2"},
             {"-34992+121176*k-185886*k^2+14617*k^3", "1679616*k^3*(k-1)^3"},
             {"-5*(2519424-10917504*k+18833472*k^2-19076208*k^3+1204387*k^4)", "967458816*k^4*(k-1)^4"}},
        };
        std::array<std::array<RatFunc, 5>, 6> t;
        for (int i = 0; i < 6; ++i) {
            t[i][0] = RatFunc(mpq_class(1));
            for (int n = 0; n < 4; ++n) t[i][n + 1] = RatFunc::parse(e[i][n][0], e[i][n][1], Var::k);
        }
        return t;
    }();
    return table;
}

CenterSeries center_series(double kappa, int order) {
    check_kappa(kappa);
    if (order < 0 || order > 4) throw DomainError("published center series stops at order 4");
    CenterSeries cs;
    cs.kappa = kappa;
    cs.J1_center = M_PI / std::sqrt(kappa - 1);
    cs.c.resize(order + 1);
    const auto& t = center_series_table();
    for (int n = 0; n <= order; ++n)
        for (int i = 0; i < 6; ++i) cs.c[n][i] = t[i][n].eval(kappa);
    return cs;
}

namespace {

template <class T>
T tabs(const T& x) {
    return x < T(0) ? T(-x) : x;
}

// Solves A x = b in place by Gaussian elimination with partial pivoting.
template <class T>
std::array<T, 6> solve6(std::array<std::array<T, 6>, 6> A, std::array<T, 6> b) {
    for (int c = 0; c < 6; ++c) {
        int p = c;
        for (int r = c + 1; r < 6; ++r)
            if (tabs(A[r][c]) > tabs(A[p][c])) p = r;
        if (A[p][c] == T(0)) throw AlgebraError("singular recurrence matrix");
        std::swap(A[p], A[c]);
        std::swap(b[p], b[c]);
        for (int r = c + 1; r < 6; ++r) {
            T f = A[r][c] / A[c][c];
            if (f == T(0)) continue;
            for (int j = c; j < 6; ++j) A[r][j] -= f * A[c][j];
            b[r] -= f * b[c];
        }
    }
    std::array<T, 6> x;
    for (int r = 5; r >= 0; --r) {
        T acc = b[r];
        for (int j = r + 1; j < 6; ++j) acc -= A[r][j] * x[j];
        x[r] = acc / A[r][r];
    }
    return x;
}

}  // namespace

template <class T>
std::vector<std::array<T, 6>> center_recurrence(const T& kappa, int order) {
    using series::Coeffs;
    const std::size_t n1 = order + 1;
    const T K = kappa - T(1);
    // Entries of M(k + t) as power series in t.
    Coeffs<T> rm = series::binomial<T>(T(-1) / T(2), kappa, n1);
    Coeffs<T> rp = series::binomial<T>(T(1) / T(2), kappa, n1);
    Coeffs<T> tvar(n1, T(0));
    if (n1 > 1) tvar[1] = T(1);
    Coeffs<T> s_1(n1, T(0));  // s - 1 = K + t
    s_1[0] = K;
    if (n1 > 1) s_1[1] = T(1);
    std::array<std::array<Coeffs<T>, 6>, 6> M;
    for (auto& row : M)
        for (auto& e : row) e.assign(n1, T(0));
    M[0][0] = series::scale(s_1, T(-1));
    M[0][1][0] = K;
    M[1][0] = series::scale(s_1, T(-1));
    M[1][1] = s_1;
    M[2][0] = series::scale(rm, T(-K));
    M[2][1] = series::scale(rm, K);
    M[2][2] = series::scale(tvar, T(-2));
    M[2][3] = series::scale(series::mul(rm, tvar, n1), T(-1));
    M[3][0][0] = -K;
    M[3][1][0] = K;
    M[3][2] = series::scale(series::mul(rm, tvar, n1), T(T(-2) / kappa));
    M[3][3] = series::scale(tvar, T(-1));
    M[4][0] = series::scale(series::mul(rm, s_1, n1), T(-1));
    M[4][1] = series::mul(rm, s_1, n1);
    M[5][0] = series::scale(series::mul(rm, s_1, n1), T(-1));
    M[5][1] = series::scale(rp, K);

    std::vector<std::array<T, 6>> c(n1);
    c[0].fill(T(1));
    for (int n = 1; n <= order; ++n) {
        std::array<std::array<T, 6>, 6> A;
        std::array<T, 6> rhs;
        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 6; ++j) A[i][j] = (i == j ? T(6) * K * T(n) : T(0)) - M[i][j][0];
            T acc = T(-6) * T(n - 1) * c[n - 1][i];
            for (int m = 1; m <= n; ++m)
                for (int j = 0; j < 6; ++j) acc += M[i][j][m] * c[n - m][j];
            rhs[i] = acc;
        }
        c[n] = solve6(A, rhs);
    }
    return c;
}

template std::vector<std::array<double, 6>> center_recurrence<double>(const double&, int);
template std::vector<std::array<f128, 6>> center_recurrence<f128>(const f128&, int);
template std::vector<std::array<mpq_class, 6>> center_recurrence<mpq_class>(const mpq_class&, int);

CenterSeries center_series_recurrence(double kappa, int order) {
    check_kappa(kappa);
    // Quad precision keeps the high-order coefficients accurate.
    auto cq = center_recurrence<f128>(f128(kappa), order);
    CenterSeries cs;
    cs.kappa = kappa;
    cs.J1_center = M_PI / std::sqrt(kappa - 1);
    cs.c.resize(cq.size());
    for (std::size_t n = 0; n < cq.size(); ++n)
        for (int i = 0; i < 6; ++i) cs.c[n][i] = static_cast<double>(cq[n][i]);
    return cs;
}

// ---- homoclinic series ---------------------------------------------------------

std::array<double, 2> HomoclinicSeries::eval(double s) const {
    const double u = s - 1, L = std::log(u);
    double j1 = 0, j2 = 0;
    for (std::size_t n = A.size(); n-- > 0;) {
        j1 = j1 * u + (A[n] * L + B[n]);
        j2 = j2 * u + (C[n] * L + D[n]);
    }
    return {j1, j2};
}

HomoclinicSeries homoclinic_series_with_constant(double kappa, double constant, int order) {
    check_kappa(kappa);
    const double K = kappa - 1, rK = std::sqrt(K);
    HomoclinicSeries hs;
    hs.kappa = kappa;
    const int n1 = order + 1;
    hs.A.assign(n1, 0);
    hs.B.assign(n1, 0);
    hs.C.assign(n1, 0);
    hs.D.assign(n1, 0);
    hs.A[0] = -1 / (2 * rK);
    hs.B[0] = constant;
    hs.C[0] = 0;
    hs.D[0] = 3 / rK;
    for (int n = 1; n < n1; ++n) {
        const double q = 6 * K * n, m = 6.0 * (n - 1);
        hs.C[n] = ((m - 1) * hs.C[n - 1] + hs.A[n - 1]) / q;
        hs.A[n] = ((m + 1) * hs.A[n - 1] - K * hs.C[n]) / q;
        hs.D[n] = (6 * hs.C[n - 1] + (m - 1) * hs.D[n - 1] + hs.B[n - 1] - 6 * K * hs.C[n]) / q;
        hs.B[n] = (6 * hs.A[n - 1] + (m + 1) * hs.B[n - 1] - 6 * K * hs.A[n] - K * hs.D[n]) / q;
    }
    return hs;
}

HomoclinicSeries homoclinic_series(double kappa, int order, double max_residual) {
    check_kappa(kappa);
    const double K = kappa - 1;
    // The series is affine in the free constant.
    auto h0 = homoclinic_series_with_constant(kappa, 0, order);
    auto h1 = homoclinic_series_with_constant(kappa, 1, order);
    QuadratureOptions qo;
    qo.estimate_error = false;
    // the series in u = s-1 converges for |u| < min(1, K) (singular points s = 0 and s = k)
    const double L = std::min(K, 1.0);
    qo.enforce_guard = L == K;
    const int m = 9;
    std::vector<double> ss, j1, j2;
    for (int i = 0; i < m; ++i) {
        double u = L * std::pow(10.0, -3.0 + i / double(m - 1)) * (i == 0 ? 1.0001 : 1.0);
        auto b = basis(kappa, 1 + u, qo);
        ss.push_back(1 + u);
        j1.push_back(b.J[0]);
        j2.push_back(b.J[1]);
    }
    double num = 0, den = 0;
    for (int i = 0; i < m; ++i) {
        auto a = h0.eval(ss[i]), b = h1.eval(ss[i]);
        for (int c = 0; c < 2; ++c) {
            double y = (c ? j2[i] : j1[i]), w = 1 / (y * y);
            double base = a[c], slope = b[c] - a[c];
            num += w * slope * (y - base);
            den += w * slope * slope;
        }
    }
    auto hs = homoclinic_series_with_constant(kappa, num / den, order);
    hs.fit_points = m;
    for (int i = 0; i < m; ++i) {
        auto v = hs.eval(ss[i]);
        hs.fit_residual = std::max({hs.fit_residual, std::abs(v[0] - j1[i]) / j1[i], std::abs(v[1] - j2[i]) / j2[i]});
    }
    if (hs.fit_residual > max_residual)
        throw IntegrationError("homoclinic series fit residual " + std::to_string(hs.fit_residual) + " above tolerance");
    return hs;
}

// ---- closed-form derivatives of w -------------------------------------------------

double ratio_d1(double k, double s, double w) {
    return (1 - s + 2 * (s - 1) * w - (k - 1) * w * w) / (6 * (s - 1) * (s - k));
}

double ratio_d2(double k, double s, double w) {
    const double V1 = (k - 1) * w - (s - 1);
    const double V2 = (k - 1) * w * w + (4 * s - 3 * k - 1) * w - 2 * (s - 1);
    const double a = (s - 1) * (s - k);
    return V1 * V2 / (18 * a * a);
}

double ratio_d3(double k, double s, double w) {
    const double K = k - 1, u = s - 1;
    const double Phi = -u * u * (20 * s + k - 21) + 2 * u * (15 - k + 6 * k * k - 29 * s - 11 * k * s + 20 * s * s) * w -
                       2 * K * (1 + 18 * k - 19 * s) * (k - s) * w * w + 6 * K * K * (1 + 3 * k - 4 * s) * w * w * w -
                       3 * K * K * K * w * w * w * w;
    const double a = u * (s - k);
    return Phi / (108 * a * a * a);
}

// ---- propagation -----------------------------------------------------------------

namespace {

struct RiccatiRhs {
    double k;
    void operator()(double s, const Vec<double, 6>& y, Vec<double, 6>& d) const {
        const double K = k - 1, r = std::sqrt(k / s), D = 6 * (s - 1) * (s - k);
        const double w = y[0];
        // (M v) with v = (1, w, r3, r4, r5, r6)
        const double m1 = (1 - s) + K * w;
        const double m2 = (1 - s) + (s - 1) * w;
        const double m3 = -r * K + r * K * w - 2 * (s - k) * y[2] - r * (s - k) * y[3];
        const double m4 = -K + K * w - 2 * (s - k) / std::sqrt(s * k) * y[2] + (k - s) * y[3];
        const double m5 = -r * (s - 1) + r * (s - 1) * w;
        const double m6 = -r * (s - 1) + K * std::sqrt(s / k) * w;
        d[0] = (m2 - w * m1) / D;
        d[1] = m1 / D;
        d[2] = (m3 - y[2] * m1) / D;
        d[3] = (m4 - y[3] * m1) / D;
        d[4] = (m5 - y[4] * m1) / D;
        d[5] = (m6 - y[5] * m1) / D;
    }
};

}  // namespace

Propagation::Propagation(double kappa, PropagationOptions opts) : kappa_(kappa), opts_(opts) {
    check_kappa(kappa);
    const double K = kappa - 1;
    center_ = center_series_recurrence(kappa, opts.center_order);
    const std::size_t n1 = center_.c.size();
    w_series_ = series::div(center_.coeffs(1), center_.coeffs(0), n1);
    s_center_ = kappa - opts.center_band * K;
    s_loop_ = 1 + opts.loop_band * std::min(K, 1.0);
    const double s_floor = 1 + opts.floor * K;

    auto J = center_.eval(s_center_);
    State y{J[1] / J[0], std::log(J[0] / center_.J1_center), J[2] / J[0], J[3] / J[0], J[4] / J[0], J[5] / J[0]};
    node_s_.push_back(s_center_);
    node_y_.push_back(y);
    StepControl ctl;
    ctl.rtol = ctl.atol = opts.tol;
    ctl.h_init = 1e-3 * K;
    RiccatiRhs rhs{kappa};
    integrate<double, 6>(rhs, s_center_, y, s_floor, ctl, [&](double, const State&, double s, const State& yn, double) {
        node_s_.push_back(s);
        node_y_.push_back(yn);
        return true;
    });
    if (opts.fit_loop_series) loop_ = std::make_shared<HomoclinicSeries>(homoclinic_series(kappa));
}

const HomoclinicSeries& Propagation::homoclinic() const {
    if (!loop_) throw DomainError("propagation built without the homoclinic series");
    return *loop_;
}

Propagation::State Propagation::state_at(double s) const {
    if (s > node_s_.front() || s < node_s_.back()) throw DomainError("s outside the propagated range");
    // nodes are in decreasing s; the first node with node_s <= s ends the bracketing step
    auto it = std::lower_bound(node_s_.begin(), node_s_.end(), s, [](double a, double b) { return a > b; });
    std::size_t idx = it - node_s_.begin();
    if (idx < node_s_.size() && node_s_[idx] == s) return node_y_[idx];
    std::size_t from = idx - 1;
    RiccatiRhs rhs{kappa_};
    return rkf78_step<double, 6>(rhs, node_s_[from], node_y_[from], s - node_s_[from]);
}

BasisVector Propagation::at(double s) const {
    if (!(s > 1 && s <= kappa_)) throw DomainError("s outside (1, kappa]");
    BasisVector b;
    b.s = s;
    if (s >= s_center_) {
        b.J = center_.eval(s);
        b.provenance = Provenance::series_center;
        b.err = 1e-15;
        return b;
    }
    State y = state_at(s);
    if (s > s_loop_ || !loop_) {
        const double J1 = center_.J1_center * std::exp(y[1]);
        b.J = {J1, y[0] * J1, y[2] * J1, y[3] * J1, y[4] * J1, y[5] * J1};
        b.provenance = Provenance::ode;
        b.err = 10 * opts_.tol;
    } else {
        auto j = loop_->eval(s);
        b.J = {j[0], j[1], y[2] * j[0], y[3] * j[0], y[4] * j[0], y[5] * j[0]};
        b.provenance = Provenance::series_homoclinic;
        b.err = std::max(loop_->fit_residual, 10 * opts_.tol);
    }
    return b;
}

DerivBundle Propagation::bundle(double s) const {
    DerivBundle d;
    d.s = s;
    if (s >= s_center_) {
        const double t = s - kappa_;
        d.w = series::eval(w_series_, t);
        d.w1 = series::eval(w_series_, t, 1);
        d.w2 = series::eval(w_series_, t, 2);
        d.w3 = series::eval(w_series_, t, 3);
        auto c1 = center_.coeffs(0);
        d.J1 = center_.J1_center * series::eval(c1, t);
        d.J1p = center_.J1_center * series::eval(c1, t, 1);
        d.provenance = Provenance::series_center;
        return d;
    }
    auto b = at(s);
    d.provenance = b.provenance;
    d.J1 = b.J[0];
    d.w = b.J[1] / b.J[0];
    d.w1 = ratio_d1(kappa_, s, d.w);
    d.w2 = ratio_d2(kappa_, s, d.w);
    d.w3 = ratio_d3(kappa_, s, d.w);
    d.J1p = d.J1 * ((1 - s) + (kappa_ - 1) * d.w) / (6 * (s - 1) * (s - kappa_));
    return d;
}

std::vector<BasisVector> propagate(double kappa, const std::vector<double>& targets, PropagationOptions opts) {
    Propagation p(kappa, opts);
    std::vector<BasisVector> out;
    out.reserve(targets.size());
    for (double s : targets) out.push_back(p.at(s));
    return out;
}

DerivBundle deriv_bundle(const Propagation& p, double s) { return p.bundle(s); }

}  // namespace q4
