#include "q4/catalogue.hpp"

namespace q4::catalogue {

namespace {
const RatPoly& cached(const char* text) {
    // Called once per distinct literal through the wrappers below.
    static thread_local std::map<const char*, RatPoly> cache;
    auto it = cache.find(text);
    if (it == cache.end()) it = cache.emplace(text, RatPoly::parse(text)).first;
    return it->second;
}
}  // namespace

const RatPoly& riccati_rhs() { return cached("1 - s + 2*(s-1)*w - (k-1)*w^2"); }
const RatPoly& riccati_denominator() { return cached("6*(s-1)*(s-k)"); }

const RatPoly& concavity_a() { return cached("(k-1)*w - (s-1)"); }
const RatPoly& concavity_b() { return cached("(k-1)*w^2 + (4*s-3*k-1)*w - 2*(s-1)"); }

const RatPoly& third_numerator() {
    return cached(
        "-(s-1)^2*(20*s+k-21) + 2*(s-1)*(15-k+6*k^2-29*s-11*k*s+20*s^2)*w"
        " - 2*(k-1)*(1+18*k-19*s)*(k-s)*w^2 + 6*(k-1)^2*(1+3*k-4*s)*w^3 - 3*(k-1)^3*w^4");
}

const RatPoly& third_eliminant() {
    return cached("-160425 + 316012*w - 314956*w^2 - 2112*w^3 + 1056*w^4");
}

const RatPoly& inflection_a_coeff(int i) {
    switch (i) {
        case 0: return cached("2*(s-1)^2*(-9+4*k+5*s)");
        case 1: return cached("-(s-1)*(36-67*k+51*k^2-5*s-35*k*s+20*s^2)");
        default: return cached("(k-1)*(18-41*k+18*k^2+5*s+5*k*s-5*s^2)");
    }
}

const RatPoly& inflection_a() {
    static thread_local RatPoly p = inflection_a_coeff(0) + inflection_a_coeff(1) * RatPoly::var(Var::w) +
                                    inflection_a_coeff(2) * RatPoly::var(Var::w, 2);
    return p;
}

const RatPoly& inflection_b_printed() {
    return cached(
        "(s-1)^2*(9+7*k-16*s) - (s-1)*(-9-62*k+39*k^2+80*s+16*k*s-32*s^2)*w"
        " - (k-1)*(-9+55*k+18*k^2-37*s-91*k*s+64*s^2)*w^2 + 9*(k-1)^2*(1+k-2*s)*w^3");
}

const RatPoly& inflection_b() {
    return cached(
        "(s-1)^2*(9+7*k-16*s) - (s-1)*(-9-62*k+39*k^2+80*s-16*k*s-32*s^2)*w"
        " - (k-1)*(-9+55*k+18*k^2-37*s-91*k*s+64*s^2)*w^2 + 9*(k-1)^2*(1+k-2*s)*w^3");
}

const RatPoly& inflection_b_eliminant() {
    return cached(
        "362313 + 701586*k - 1012697*k^2 + 421884*k^3 - 1012697*k^4 + 701586*k^5 + 362313*k^6"
        " - 8*(1+k)*(359433 - 174116*k - 174026*k^2 - 174116*k^3 + 359433*k^4)*s"
        " + 8*(991241 + 22492*k - 1044426*k^2 + 22492*k^3 + 991241*k^4)*s^2"
        " - 16384*(k+1)*(649 - 978*k + 649*k^2)*s^3 + 8192*(809 - 658*k + 809*k^2)*s^4"
        " - 1572864*(1+k)*s^5 + 524288*s^6");
}

RatPoly inflection_a_flow() {
    const RatPoly& a = inflection_a();
    return a.diff(Var::w) * riccati_rhs() + riccati_denominator() * a.diff(Var::s);
}

}  // namespace q4::catalogue
