#include "doctest.h"
#include "q4/catalogue.hpp"
#include "q4/exactpoly.hpp"

#include <random>

using namespace q4;
namespace cat = q4::catalogue;

TEST_CASE("arith expands and cancels") {
    RatPoly p = "(s-1)*(s-k)"_rp + RatPoly(0);
    CHECK(p == "s^2 - (1+k)*s + k"_rp);
    CHECK((p - p).is_zero());
    CHECK(p.str() == "s^2 - s*k - s + k");
}

TEST_CASE("parser handles rationals, powers and unary minus") {
    CHECK("-(3/2)*s^2 + 1/3"_rp == RatPoly(mpq_class(1, 3)) - RatPoly(mpq_class(3, 2)) * RatPoly::var(Var::s, 2));
    CHECK("2^3"_rp == RatPoly(8));
    CHECK_THROWS_AS(RatPoly::parse("s/(s+1)"), AlgebraError);
    CHECK_THROWS_AS(RatPoly::parse("x+1"), AlgebraError);
    CHECK(RatPoly::parse("\xCE\xBA - 1") == "k-1"_rp);
}

TEST_CASE("round trip through canonical text") {
    RatPoly p = cat::third_numerator();
    CHECK(RatPoly::parse(p.str()) == p);
}

TEST_CASE("discriminant of the inflection factor") {
    RatPoly d = cat::inflection_a_coeff(1).pow(2) - 4 * cat::inflection_a_coeff(0) * cat::inflection_a_coeff(2);
    CHECK(identity_check(d, "25*(s-k)^2*(s-1)^2*(81-146*k+81*k^2-16*s-16*k*s+16*s^2)"_rp));
}

TEST_CASE("trivial resultants") {
    CHECK(resultant("w^2-1"_rp, "w-1"_rp, Var::w).is_zero());
    CHECK(resultant("w-2"_rp, "w-3"_rp, Var::w) == RatPoly(-1));
    CHECK_THROWS_AS(resultant(RatPoly(), "w"_rp, Var::w), AlgebraError);
    CHECK_THROWS_AS(resultant("s"_rp, "w"_rp, Var::w), AlgebraError);
}

TEST_CASE("third-derivative eliminant factorization") {
    const RatPoly& phi = cat::third_numerator();
    RatPoly r = resultant(phi.diff(Var::s), phi.diff(Var::w), Var::s);
    CHECK(identity_check(r, RatPoly::parse("-8000*(k-1)^6*(w-1)^2*w^2*(2*w-1)") * cat::third_eliminant()));
}

TEST_CASE("inflection factor resultant: true power of (k-1) is four") {
    RatPoly r = resultant(cat::inflection_a(), cat::inflection_a_flow(), Var::w);
    RatPoly printed = RatPoly::parse("-35083125*(k-1)^5*(k-s)^5*(s-1)^5") * cat::inflection_a_coeff(2);
    RatPoly exact = RatPoly::parse("-35083125*(k-1)^4*(k-s)^5*(s-1)^5") * cat::inflection_a_coeff(2);
    CHECK(identity_check(r, exact));
    CHECK_FALSE(identity_check(r, printed));
}

TEST_CASE("second inflection factor resultant") {
    const RatPoly& b = cat::inflection_b();
    RatPoly r = resultant(b.diff(Var::s), b.diff(Var::k), Var::w);
    RatPoly base = RatPoly::parse("(k-1)^2*(s-k)^2*(s-1)^2") * cat::inflection_b_eliminant();
    CHECK(identity_check(r, RatPoly(-6075) * base));
    CHECK_FALSE(identity_check(r, RatPoly(-6705) * base));
    const RatPoly& bp = cat::inflection_b_printed();
    RatPoly rp = resultant(bp.diff(Var::s), bp.diff(Var::k), Var::w);
    CHECK_FALSE(identity_check(rp, RatPoly(-6705) * base));
}

TEST_CASE("eliminant of the eliminant has the (k-1)^25 shape with negative constant") {
    const RatPoly& g = cat::inflection_b_eliminant();
    RatPoly r = resultant(g.diff(Var::s), g.diff(Var::k), Var::s);
    auto q = r.exact_div("(k-1)^25"_rp);
    REQUIRE(q);
    REQUIRE(q->is_constant());
    mpq_class c = q->constant_value();
    CHECK(sgn(c) < 0);
    CHECK(c == mpq_class("-1119084869239046135653443011132121581000423613599675370700800000000"));
    CHECK(identity_check(g.subs(Var::s, 1), "362313*(k-1)^6"_rp));
    CHECK(identity_check(g.subs(Var::s, "k"_rp), "362313*(k-1)^6"_rp));
}

TEST_CASE("boundary evaluations") {
    RatPoly mid_s = "(k+1)/2"_rp;
    mpq_class half(1, 2);
    const RatPoly& phi = cat::third_numerator();
    const RatPoly& v2 = cat::concavity_b();
    CHECK(identity_check(phi.subs(Var::s, mid_s).subs(Var::w, half), "-(25/16)*(k-1)^3"_rp));
    CHECK(identity_check(phi.subs(Var::s, 1), "-3*(k-1)^3*w^2*(12-6*w+w^2)"_rp));
    CHECK(identity_check(phi.subs(Var::s, "k"_rp), "-3*(k-1)^3*(w-1)^2*(7+4*w+w^2)"_rp));
    CHECK(identity_check(phi.subs(Var::w, 0), "-(s-1)^2*(20*s+k-21)"_rp));
    CHECK(identity_check(phi.subs(Var::w, 1), "-(s-k)^2*(-1+21*k-20*s)"_rp));
    CHECK(identity_check(v2.subs(Var::s, mid_s).subs(Var::w, half), "-5*(k-1)/4"_rp));
    CHECK(identity_check(v2.subs(Var::w, 0), "-2*(s-1)"_rp));
    CHECK(identity_check(v2.subs(Var::w, 1), "2*(s-k)"_rp));
    CHECK(identity_check(v2.subs(Var::s, 1), "(k-1)*w*(w-3)"_rp));
    CHECK(identity_check(v2.subs(Var::s, "k"_rp), "(k-1)*(w-1)*(w+2)"_rp));
    const RatPoly& b = cat::inflection_b();
    CHECK(identity_check(b.subs(Var::s, 1), "9*(k-1)^3*w^2*(w-2)"_rp));
    CHECK(identity_check(b.subs(Var::s, "k"_rp), "-9*(k-1)^3*(w-1)^2*(w+1)"_rp));
    CHECK_FALSE(identity_check(cat::inflection_b_printed().subs(Var::s, "k"_rp), "-9*(k-1)^3*(w-1)^2*(w+1)"_rp));
    const RatPoly& t2 = cat::inflection_a_coeff(2);
    CHECK(identity_check(t2.subs(Var::s, 1), "18*(k-1)^3"_rp));
    CHECK(identity_check(t2.subs(Var::s, "k"_rp), "18*(k-1)^3"_rp));
}

TEST_CASE("sturm counts") {
    CHECK(sturm_count(cat::third_eliminant(), Var::w, 0, 1).count == 0);
    CHECK(sturm_count("(w-1/2)^3"_rp, Var::w, 0, 1).count == 1);
    for (long kk : {2L}) {
        RatPoly t2 = cat::inflection_a_coeff(2).subs(Var::k, kk);
        CHECK(sturm_count(t2, Var::s, 1, kk).count == 0);
    }
    // endpoint roots are excluded
    CHECK(sturm_count("w*(w-1)*(w-1/3)"_rp, Var::w, 0, 1).count == 1);
    CHECK_THROWS_AS(sturm_count(RatPoly(), Var::w, 0, 1), AlgebraError);
}

TEST_CASE("sturm count matches sampled sign changes on factored cubics and quartics") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> root(-12, 12), deg(3, 4), den(1, 4);
    for (int trial = 0; trial < 20; ++trial) {
        int d = deg(rng);
        std::vector<mpq_class> roots;
        UPoly p(std::vector<mpq_class>{1});
        for (int i = 0; i < d; ++i) {
            mpq_class r(root(rng), den(rng));
            r.canonicalize();
            roots.push_back(r);
            p = p * UPoly(std::vector<mpq_class>{-r, 1});
        }
        mpq_class lo(-2), hi(2);
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        int expected = 0;
        for (const auto& r : roots)
            if (r > lo && r < hi) ++expected;
        CHECK(sturm_count(p, lo, hi).count == expected);
        // sampled sign changes on a fine rational grid of the squarefree part
        UPoly sq(std::vector<mpq_class>{1});
        for (const auto& r : roots) sq = sq * UPoly(std::vector<mpq_class>{-r, 1});
        int changes = 0;
        int last = sgn(sq.eval(lo + mpq_class(1, 1000)));
        for (int i = 1; i < 4000; ++i) {
            mpq_class x = lo + (hi - lo) * mpq_class(i, 4000) + mpq_class(1, 100000);
            int sv = sgn(sq.eval(x));
            if (sv != 0 && sv != last) {
                ++changes;
                last = sv;
            }
        }
        CHECK(changes == expected);
    }
}

TEST_CASE("resultant is multiplicative in the second argument") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> c(-5, 5);
    auto rnd = [&](int d) {
        RatPoly p;
        for (int i = 0; i <= d; ++i) p += RatPoly(c(rng)) * RatPoly::var(Var::w, i) + RatPoly(c(rng)) * RatPoly::var(Var::w, i) * RatPoly::var(Var::k);
        p += RatPoly::var(Var::w, d + 1);
        return p;
    };
    for (int t = 0; t < 6; ++t) {
        RatPoly p = rnd(2), q = rnd(1), r = rnd(2);
        CHECK(resultant(p, q * r, Var::w) == resultant(p, q, Var::w) * resultant(p, r, Var::w));
    }
}

TEST_CASE("subresultant agrees with the Sylvester determinant up to degree four") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(-4, 4);
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            RatPoly p, q;
            for (int i = 0; i <= m; ++i) p += RatPoly(c(rng)) * RatPoly::var(Var::s, i) * (i % 2 ? "k"_rp : "w+1"_rp);
            for (int i = 0; i <= n; ++i) q += RatPoly(c(rng)) * RatPoly::var(Var::s, i) * (i % 2 ? "w"_rp : "k-2"_rp);
            p += RatPoly::var(Var::s, m);
            q += RatPoly::var(Var::s, n) * "k"_rp;
            if (p.degree(Var::s) < 1 || q.degree(Var::s) < 1) continue;
            CHECK(resultant(p, q, Var::s) == sylvester_resultant(p, q, Var::s));
        }
    CHECK(resultant(cat::third_numerator().diff(Var::s), cat::third_numerator().diff(Var::w), Var::s) ==
          sylvester_resultant(cat::third_numerator().diff(Var::s), cat::third_numerator().diff(Var::w), Var::s));
}

TEST_CASE("determinants") {
    PolyMatrix id(3, std::vector<RatPoly>(3));
    for (int i = 0; i < 3; ++i) id[i][i] = RatPoly(1);
    CHECK(det_bareiss(id) == RatPoly(1));
    PolyMatrix rep = {{"s"_rp, "k"_rp, RatPoly(2)}, {"w"_rp, RatPoly(0), "s*k"_rp}, {"s"_rp, "k"_rp, RatPoly(2)}};
    CHECK(det_bareiss(rep).is_zero());
    CHECK_THROWS_AS(det_bareiss(PolyMatrix{{RatPoly(1), RatPoly(2)}}), AlgebraError);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> c(-3, 3);
    const char* syms[] = {"s", "w", "k", "s+k", "1", "0", "w-1"};
    for (int n = 1; n <= 4; ++n)
        for (int t = 0; t < 5; ++t) {
            PolyMatrix m(n, std::vector<RatPoly>(n));
            for (auto& row : m)
                for (auto& e : row) e = RatPoly(c(rng)) * RatPoly::parse(syms[std::abs(c(rng)) + std::abs(c(rng)) % 4]);
            CHECK(det_bareiss(m) == det_cofactor(m));
        }
}

TEST_CASE("rational functions normalize") {
    RatFunc a = RatFunc::parse("k^2-1", "2*k-2", Var::k);
    CHECK(a == RatFunc::parse("k+1", "2", Var::k));
    CHECK(a.eval(mpq_class(3)) == 2);
    FuncMatrix m = {{RatFunc::parse("1", "k", Var::k), RatFunc(1)}, {RatFunc(0), RatFunc::parse("k", "k-1", Var::k)}};
    CHECK(det(m) == RatFunc::parse("1", "k-1", Var::k));
}
