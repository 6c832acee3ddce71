#include "q4/exactpoly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace q4 {

namespace {

const char* kVarNames[kNumVars] = {"s", "w", "h", "k"};

bool divides(const Exponent& a, const Exponent& b) {
    for (int i = 0; i < kNumVars; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace

std::string to_string(const mpq_class& q) { return q.get_str(); }

RatPoly::RatPoly(long c) {
    if (c != 0) terms_[Exponent{0, 0, 0, 0}] = c;
}

RatPoly::RatPoly(const mpq_class& c) {
    if (sgn(c) != 0) terms_[Exponent{0, 0, 0, 0}] = c;
}

RatPoly RatPoly::var(Var v, int power) {
    Exponent e{0, 0, 0, 0};
    e[static_cast<int>(v)] = power;
    return monomial(1, e);
}

RatPoly RatPoly::monomial(const mpq_class& c, const Exponent& e) {
    RatPoly p;
    if (sgn(c) != 0) p.terms_[e] = c;
    return p;
}

void RatPoly::add_term(const Exponent& e, const mpq_class& c) {
    if (sgn(c) == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

bool RatPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0, 0, 0});
}

mpq_class RatPoly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw AlgebraError("polynomial is not constant");
    return terms_.begin()->second;
}

int RatPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Exponent& e = terms_.begin()->first;
    return e[0] + e[1] + e[2] + e[3];
}

int RatPoly::degree(Var v) const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(v)]);
    return d;
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
    *this = *this * o;
    return *this;
}

RatPoly& RatPoly::operator*=(const mpq_class& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    RatPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e;
            for (int i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

RatPoly RatPoly::pow(int n) const {
    if (n < 0) throw AlgebraError("negative power");
    RatPoly result(1), base = *this;
    while (n) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

RatPoly RatPoly::diff(Var v) const {
    int i = static_cast<int>(v);
    RatPoly r;
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponent f = e;
        f[i] -= 1;
        r.add_term(f, c * e[i]);
    }
    return r;
}

std::vector<RatPoly> RatPoly::coeffs_in(Var v) const {
    int i = static_cast<int>(v);
    std::vector<RatPoly> out(std::max(0, degree(v) + 1));
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        f[i] = 0;
        out[e[i]].add_term(f, c);
    }
    return out;
}

RatPoly RatPoly::from_coeffs(Var v, const std::vector<RatPoly>& c) {
    RatPoly r;
    for (std::size_t d = 0; d < c.size(); ++d) r += c[d] * RatPoly::var(v, static_cast<int>(d));
    return r;
}

RatPoly RatPoly::subs(Var v, const RatPoly& value) const {
    auto c = coeffs_in(v);
    RatPoly r;
    // Horner
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * value + *it;
    return r;
}

mpq_class RatPoly::eval(const std::array<mpq_class, kNumVars>& at) const {
    mpq_class sum = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class t = c;
        for (int i = 0; i < kNumVars; ++i)
            for (int j = 0; j < e[i]; ++j) t *= at[i];
        sum += t;
    }
    return sum;
}

double RatPoly::eval(const std::array<double, kNumVars>& at) const {
    double sum = 0;
    for (const auto& [e, c] : terms_) {
        double t = c.get_d();
        for (int i = 0; i < kNumVars; ++i)
            if (e[i]) t *= std::pow(at[i], e[i]);
        sum += t;
    }
    return sum;
}

std::optional<RatPoly> RatPoly::exact_div(const RatPoly& o) const {
    if (o.is_zero()) throw AlgebraError("division by zero polynomial");
    RatPoly q, r = *this;
    const auto& [ld, cd] = *o.terms_.begin();
    while (!r.is_zero()) {
        const auto [lr, cr] = *r.terms_.begin();
        if (!divides(ld, lr)) return std::nullopt;
        Exponent e;
        for (int i = 0; i < kNumVars; ++i) e[i] = lr[i] - ld[i];
        RatPoly t = monomial(cr / cd, e);
        q += t;
        r -= t * o;
    }
    return q;
}

std::string RatPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpq_class a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = (e == Exponent{0, 0, 0, 0});
        bool wrote = false;
        if (a != 1 || unit) {
            os << a.get_str();
            wrote = true;
        }
        for (int i = 0; i < kNumVars; ++i) {
            if (!e[i]) continue;
            if (wrote) os << "*";
            os << kVarNames[i];
            if (e[i] > 1) os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

// ---- parser -----------------------------------------------------------------

namespace {

class Parser {
public:
    explicit Parser(const std::string& t) : t_(t) {}

    RatPoly parse() {
        RatPoly r = expr();
        skip();
        if (i_ != t_.size()) fail("trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw AlgebraError("parse error at " + std::to_string(i_) + ": " + what + " in '" + t_ + "'");
    }
    void skip() {
        while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < t_.size() && t_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    RatPoly expr() {
        RatPoly r;
        skip();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        r = term();
        if (neg) r = -r;
        for (;;) {
            if (eat('+')) r += term();
            else if (eat('-')) r -= term();
            else break;
        }
        return r;
    }
    RatPoly term() {
        RatPoly r = unary();
        for (;;) {
            if (eat('*')) {
                r *= unary();
            } else if (eat('/')) {
                RatPoly d = unary();
                if (!d.is_constant() || d.is_zero()) fail("division by non-constant");
                r *= mpq_class(1) / d.constant_value();
            } else {
                break;
            }
        }
        return r;
    }
    RatPoly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        RatPoly b = primary();
        if (eat('^')) {
            skip();
            std::size_t st = i_;
            while (i_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[i_]))) ++i_;
            if (st == i_) fail("expected exponent");
            b = b.pow(std::stoi(t_.substr(st, i_ - st)));
        }
        return b;
    }
    RatPoly primary() {
        skip();
        if (i_ >= t_.size()) fail("unexpected end");
        char c = t_[i_];
        if (c == '(') {
            ++i_;
            RatPoly r = expr();
            if (!eat(')')) fail("expected )");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t st = i_;
            while (i_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[i_]))) ++i_;
            return RatPoly(mpq_class(mpz_class(t_.substr(st, i_ - st))));
        }
        // UTF-8 kappa
        if (static_cast<unsigned char>(c) == 0xCE && i_ + 1 < t_.size() &&
            static_cast<unsigned char>(t_[i_ + 1]) == 0xBA) {
            i_ += 2;
            return RatPoly::var(Var::k);
        }
        ++i_;
        switch (c) {
            case 's': return RatPoly::var(Var::s);
            case 'w': return RatPoly::var(Var::w);
            case 'h': return RatPoly::var(Var::h);
            case 'k': return RatPoly::var(Var::k);
            default: --i_; fail(std::string("unknown symbol '") + c + "'");
        }
    }

    const std::string& t_;
    std::size_t i_ = 0;
};

}  // namespace

RatPoly RatPoly::parse(const std::string& text) { return Parser(text).parse(); }

bool identity_check(const RatPoly& lhs, const RatPoly& rhs) { return (lhs - rhs).is_zero(); }

// ---- resultants ---------------------------------------------------------------

namespace {

using Coeffs = std::vector<RatPoly>;

int deg(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

void trim(Coeffs& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

RatPoly divx(const RatPoly& a, const RatPoly& b) {
    auto q = a.exact_div(b);
    if (!q) throw AlgebraError("inexact division in subresultant sequence");
    return *q;
}

Coeffs prem(Coeffs r, const Coeffs& b) {
    int n = deg(b);
    int e = deg(r) - n + 1;
    const RatPoly& lb = b.back();
    while (deg(r) >= n) {
        int shift = deg(r) - n;
        RatPoly lr = r.back();
        for (auto& c : r) c *= lb;
        for (int i = 0; i <= n; ++i) r[i + shift] -= lr * b[i];
        r.pop_back();
        trim(r);
        --e;
    }
    if (e > 0) {
        RatPoly f = lb.pow(e);
        for (auto& c : r) c *= f;
    }
    return r;
}

}  // namespace

RatPoly resultant(const RatPoly& p, const RatPoly& q, Var v) {
    if (p.is_zero() || q.is_zero()) throw AlgebraError("resultant of zero polynomial");
    Coeffs a = p.coeffs_in(v), b = q.coeffs_in(v);
    if (deg(a) < 1 || deg(b) < 1) throw AlgebraError("resultant needs positive degree in the variable");
    RatPoly g(1), h(1);
    long sign = 1;
    if (deg(a) < deg(b)) {
        std::swap(a, b);
        if ((deg(a) & 1) && (deg(b) & 1)) sign = -1;
    }
    for (;;) {
        int delta = deg(a) - deg(b);
        if ((deg(a) & 1) && (deg(b) & 1)) sign = -sign;
        Coeffs r = prem(a, b);
        a = b;
        if (r.empty()) return RatPoly();
        RatPoly den = g * h.pow(delta);
        for (auto& c : r) c = divx(c, den);
        b = std::move(r);
        g = a.back();
        if (delta == 0) {
            // h unchanged
        } else {
            h = divx(g.pow(delta), h.pow(delta - 1));
        }
        if (deg(b) == 0) break;
    }
    int da = deg(a);
    RatPoly res;
    if (da == 0) res = RatPoly(1);
    else res = divx(b.back().pow(da), h.pow(da - 1));
    return sign < 0 ? -res : res;
}

RatPoly sylvester_resultant(const RatPoly& p, const RatPoly& q, Var v) {
    Coeffs a = p.coeffs_in(v), b = q.coeffs_in(v);
    int m = deg(a), n = deg(b);
    if (m < 1 || n < 1) throw AlgebraError("resultant needs positive degree in the variable");
    int N = m + n;
    PolyMatrix s(N, std::vector<RatPoly>(N));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s[r][r + i] = a[m - i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s[n + r][r + i] = b[n - i];
    return det_bareiss(std::move(s));
}

RatPoly det_bareiss(PolyMatrix m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw AlgebraError("determinant of non-square matrix");
    if (n == 0) return RatPoly(1);
    RatPoly prev(1);
    long sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t i = k + 1;
            while (i < n && m[i][k].is_zero()) ++i;
            if (i == n) return RatPoly();
            std::swap(m[i], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = divx(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = RatPoly();
        }
        prev = m[k][k];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

RatPoly det_cofactor(const PolyMatrix& m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw AlgebraError("determinant of non-square matrix");
    if (n == 0) return RatPoly(1);
    if (n == 1) return m[0][0];
    RatPoly sum;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        PolyMatrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<RatPoly> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[i][c]);
            minor.push_back(std::move(row));
        }
        RatPoly t = m[0][j] * det_cofactor(minor);
        if (j & 1) sum -= t;
        else sum += t;
    }
    return sum;
}

// ---- univariate -----------------------------------------------------------------

UPoly::UPoly(std::vector<mpq_class> c) : c_(std::move(c)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly UPoly::from(const RatPoly& p, Var v) {
    std::vector<mpq_class> c(std::max(0, p.degree(v) + 1));
    for (const auto& [e, q] : p.terms()) {
        for (int i = 0; i < kNumVars; ++i)
            if (i != static_cast<int>(v) && e[i] != 0)
                throw AlgebraError("polynomial is not univariate in the requested variable");
        c[e[static_cast<int>(v)]] += q;
    }
    return UPoly(std::move(c));
}

RatPoly UPoly::to_ratpoly(Var v) const {
    RatPoly r;
    for (std::size_t d = 0; d < c_.size(); ++d) r += RatPoly(c_[d]) * RatPoly::var(v, static_cast<int>(d));
    return r;
}

mpq_class UPoly::eval(const mpq_class& x) const {
    mpq_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

double UPoly::eval(double x) const {
    double r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->get_d();
    return r;
}

UPoly UPoly::derivative() const {
    std::vector<mpq_class> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    std::vector<mpq_class> c = c_;
    mpq_class l = lead();
    for (auto& x : c) x /= l;
    return UPoly(std::move(c));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + b * mpq_class(-1); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const mpq_class& s) {
    std::vector<mpq_class> c = a.c_;
    for (auto& x : c) x *= s;
    return UPoly(std::move(c));
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.is_zero()) throw AlgebraError("division by zero polynomial");
    std::vector<mpq_class> rem = a.c_;
    int db = b.degree();
    std::vector<mpq_class> quo(std::max(0, a.degree() - db + 1));
    for (int i = a.degree(); i >= db; --i) {
        if (sgn(rem[i]) == 0) continue;
        mpq_class f = rem[i] / b.lead();
        quo[i - db] = f;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
    }
    q = UPoly(std::move(quo));
    r = UPoly(std::move(rem));
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

int sign_changes(const std::vector<UPoly>& seq, const mpq_class& x) {
    int changes = 0, last = 0;
    for (const auto& p : seq) {
        int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

RootCount sturm_count(const UPoly& p0, const mpq_class& lo, const mpq_class& hi) {
    if (p0.is_zero()) throw AlgebraError("root count of the zero polynomial");
    if (!(lo < hi)) throw AlgebraError("empty interval");
    RootCount rc{lo, hi, 0, CountMethod::sturm};
    UPoly p = p0;
    UPoly g = UPoly::gcd(p, p.derivative());
    UPoly q, r;
    if (g.degree() > 0) {
        UPoly::divmod(p, g, q, r);
        p = q;
    }
    for (const mpq_class& e : {lo, hi}) {
        if (sgn(p.eval(e)) == 0) {
            UPoly::divmod(p, UPoly({-e, 1}), q, r);
            p = q;
        }
    }
    if (p.degree() <= 0) return rc;
    std::vector<UPoly> seq{p, p.derivative()};
    while (seq.back().degree() > 0) {
        UPoly::divmod(seq[seq.size() - 2], seq.back(), q, r);
        if (r.is_zero()) break;
        seq.push_back(r * mpq_class(-1));
    }
    rc.count = sign_changes(seq, lo) - sign_changes(seq, hi);
    return rc;
}

RootCount sturm_count(const RatPoly& p, Var v, const mpq_class& lo, const mpq_class& hi) {
    return sturm_count(UPoly::from(p, v), lo, hi);
}

// ---- rational functions -------------------------------------------------------------

RatFunc::RatFunc(const mpq_class& c) : num_(std::vector<mpq_class>{c}), den_(std::vector<mpq_class>{1}) {}

RatFunc::RatFunc(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw AlgebraError("zero denominator");
    normalize();
}

RatFunc RatFunc::parse(const std::string& num, const std::string& den, Var v) {
    return RatFunc(UPoly::from(RatPoly::parse(num), v), UPoly::from(RatPoly::parse(den), v));
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = UPoly(std::vector<mpq_class>{1});
        return;
    }
    UPoly g = UPoly::gcd(num_, den_);
    UPoly q, r;
    if (g.degree() > 0) {
        UPoly::divmod(num_, g, q, r);
        num_ = q;
        UPoly::divmod(den_, g, q, r);
        den_ = q;
    }
    mpq_class l = den_.lead();
    num_ = num_ * (mpq_class(1) / l);
    den_ = den_ * (mpq_class(1) / l);
}

mpq_class RatFunc::eval(const mpq_class& x) const {
    mpq_class d = den_.eval(x);
    if (sgn(d) == 0) throw AlgebraError("pole");
    return num_.eval(x) / d;
}

double RatFunc::eval(double x) const { return num_.eval(x) / den_.eval(x); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return a + RatFunc(b.num_ * mpq_class(-1), b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw AlgebraError("division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::str(Var v) const {
    std::string n = num_.to_ratpoly(v).str();
    if (den_.degree() == 0) return n;
    return "(" + n + ")/(" + den_.to_ratpoly(v).str() + ")";
}

RatFunc det(const FuncMatrix& m0) {
    FuncMatrix m = m0;
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw AlgebraError("determinant of non-square matrix");
    RatFunc d(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k].is_zero()) ++p;
        if (p == n) return RatFunc();
        if (p != k) {
            std::swap(m[p], m[k]);
            d = d * RatFunc(-1);
        }
        d = d * m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            RatFunc f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] = m[i][j] - f * m[k][j];
        }
    }
    return d;
}

}  // namespace q4
