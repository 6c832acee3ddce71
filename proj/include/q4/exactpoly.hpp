#pragma once
// Exact polynomial algebra over Q in the fixed variables (s, w, h, k).

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace q4 {

enum class Var : int { s = 0, w = 1, h = 2, k = 3 };
constexpr int kNumVars = 4;

using Exponent = std::array<int, kNumVars>;

// Graded lexicographic, largest first, so begin() is the leading term.
struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const {
        int da = a[0] + a[1] + a[2] + a[3];
        int db = b[0] + b[1] + b[2] + b[3];
        if (da != db) return da > db;
        return a > b;
    }
};

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class RatPoly {
public:
    using TermMap = std::map<Exponent, mpq_class, GrlexGreater>;

    RatPoly() = default;
    RatPoly(long c);
    RatPoly(const mpq_class& c);
    static RatPoly var(Var v, int power = 1);
    static RatPoly monomial(const mpq_class& c, const Exponent& e);
    static RatPoly parse(const std::string& text);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    mpq_class constant_value() const;  // requires is_constant()
    int total_degree() const;
    int degree(Var v) const;
    bool uses(Var v) const { return degree(v) > 0; }

    RatPoly operator-() const;
    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    RatPoly& operator*=(const RatPoly& o);
    RatPoly& operator*=(const mpq_class& c);
    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(RatPoly a, const mpq_class& c) { return a *= c; }
    friend RatPoly operator*(const mpq_class& c, RatPoly a) { return a *= c; }
    friend RatPoly operator*(long c, RatPoly a) { return a *= mpq_class(c); }
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

    RatPoly pow(int n) const;
    RatPoly diff(Var v) const;
    RatPoly subs(Var v, const RatPoly& value) const;
    RatPoly subs(Var v, const mpq_class& value) const { return subs(v, RatPoly(value)); }
    RatPoly subs(Var v, long value) const { return subs(v, RatPoly(value)); }

    // Coefficients as a polynomial in v: result[d] multiplies v^d.
    std::vector<RatPoly> coeffs_in(Var v) const;
    static RatPoly from_coeffs(Var v, const std::vector<RatPoly>& c);

    mpq_class eval(const std::array<mpq_class, kNumVars>& at) const;
    double eval(const std::array<double, kNumVars>& at) const;

    // Exact quotient when o divides *this, otherwise nullopt.
    std::optional<RatPoly> exact_div(const RatPoly& o) const;

    std::string str() const;

private:
    void add_term(const Exponent& e, const mpq_class& c);
    TermMap terms_;
};

inline RatPoly operator""_rp(const char* s, std::size_t) { return RatPoly::parse(s); }

bool identity_check(const RatPoly& lhs, const RatPoly& rhs);

RatPoly resultant(const RatPoly& p, const RatPoly& q, Var v);
// Sylvester determinant via fraction-free elimination; used as a cross-check.
RatPoly sylvester_resultant(const RatPoly& p, const RatPoly& q, Var v);

using PolyMatrix = std::vector<std::vector<RatPoly>>;
RatPoly det_bareiss(PolyMatrix m);
RatPoly det_cofactor(const PolyMatrix& m);

// ---- univariate over Q ----------------------------------------------------

class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<mpq_class> c);
    static UPoly from(const RatPoly& p, Var v);  // p must involve only v
    RatPoly to_ratpoly(Var v) const;

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    const mpq_class& lead() const { return c_.back(); }
    mpq_class eval(const mpq_class& x) const;
    double eval(double x) const;
    UPoly derivative() const;
    UPoly monic() const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const mpq_class& c);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
    static UPoly gcd(UPoly a, UPoly b);

private:
    void trim();
    std::vector<mpq_class> c_;
};

enum class CountMethod { sturm, descartes };

struct RootCount {
    mpq_class lo, hi;
    int count = 0;
    CountMethod method = CountMethod::sturm;
};

// Distinct real roots in the open interval (lo, hi).
RootCount sturm_count(const UPoly& p, const mpq_class& lo, const mpq_class& hi);
RootCount sturm_count(const RatPoly& p, Var v, const mpq_class& lo, const mpq_class& hi);

// Rational function of one variable, kept in lowest terms with monic denominator.
class RatFunc {
public:
    RatFunc() : num_(), den_(std::vector<mpq_class>{1}) {}
    RatFunc(const mpq_class& c);
    RatFunc(UPoly num, UPoly den);
    static RatFunc parse(const std::string& num, const std::string& den, Var v);

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    mpq_class eval(const mpq_class& x) const;
    double eval(double x) const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    std::string str(Var v) const;

private:
    void normalize();
    UPoly num_, den_;
};

using FuncMatrix = std::vector<std::vector<RatFunc>>;
RatFunc det(const FuncMatrix& m);  // Bareiss over the field of rational functions

std::string to_string(const mpq_class& q);

}  // namespace q4
