#include <cmath>

#include "doctest.h"
#include "q4/zerocount.hpp"

using namespace q4;

TEST_CASE("g with a prescribed zero at the midpoint") {
    for (double k : {1.5, 2.0, 5.0, 20.0}) {
        Propagation prop(k);
        // beta = 0 so g = P2 = (s-k)(s-(1+k)/2)
        FamilyEvaluator ev(MelnikovParams::from_alphabeta(k, -(k + (1 + k) / 2), 1.0, 0, 0), prop);
        auto z = count_zeros(ev, FunctionId::g_of_s);
        REQUIRE(z.count == 1);
        CHECK(z.zeros[0].location == doctest::Approx((1 + k) / 2).epsilon(1e-10));
        CHECK(z.zeros[0].width <= 1e-10);
        CHECK(z.stable);
    }
}

TEST_CASE("zero parameters are degenerate") {
    Propagation prop(2.0);
    FamilyEvaluator ev(MelnikovParams::from_mu(2.0, {0, 0, 0, 0}), prop);
    for (auto id : {FunctionId::I_of_s, FunctionId::F_of_s, FunctionId::g_of_s}) {
        auto z = count_zeros(ev, id);
        CHECK(z.degenerate);
        CHECK(z.count == 0);
    }
}

TEST_CASE("sample grid is increasing and clusters at both ends") {
    auto g = sample_grid(3.0, 1 + 2e-7, 3 - 2e-7, 400);
    REQUIRE(g.size() >= 400);
    for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
    CHECK(g.front() - 1 < 1e-6);
    CHECK(3 - g.back() < 1e-6);
}

TEST_CASE("case threshold and classification") {
    CHECK(case_threshold(2.0) == doctest::Approx(8.0 / 31));
    const double k = 3;
    auto mk = [&](double b0, double b1) { return MelnikovParams::from_alphabeta(k, 0.5, 0.25, b0, b1); };
    CHECK(classify(mk(0.0, 0)) == CaseId::d);
    CHECK(classify(mk(0.3, 0)) == CaseId::c);
    CHECK(classify(mk(-2.0, 1)) == CaseId::a);  // below (54-69)/31
    CHECK(classify(mk(0.0, 1)) == CaseId::b);
    CHECK(classify(mk(2.0, 1)) == CaseId::a);  // beta0 >= 1
    // beta1 scaling does not change the case
    CHECK(classify(mk(0.0, 1)) == classify(MelnikovParams::from_alphabeta(k, 1.0, 0.5, 0.0, 2.0)));
    CHECK(case_bound(CaseId::a) == 2);
    CHECK(case_bound(CaseId::b) == 3);
    CHECK(case_bound(CaseId::c) == 2);
    CHECK(case_bound(CaseId::d) == 1);
}

TEST_CASE("chain on random draws, stable under doubling") {
    for (std::uint64_t i = 0; i < 30; ++i) {
        auto d = run_draw(draw_seed(7, i));
        CHECK(d.error.empty());
        CHECK(d.counts.chain_ok);
        CHECK(d.counts.I <= 5);
        CHECK(d.counts.g <= d.bound);
        CHECK(d.counts.stable);
    }
}

TEST_CASE("forced cases land in their case") {
    for (CaseId c : {CaseId::a, CaseId::b, CaseId::c, CaseId::d})
        for (std::uint64_t i = 0; i < 10; ++i) CHECK(classify(draw_params(draw_seed(11, i), c)) == c);
}

TEST_CASE("scan results do not depend on the worker count") {
    auto a = run_scan(99, 12, std::nullopt, 1);
    auto b = run_scan(99, 12, std::nullopt, 4);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].seed == b[i].seed);
        CHECK(a[i].counts.I == b[i].counts.I);
        CHECK(a[i].counts.g == b[i].counts.g);
        CHECK(a[i].params.kappa == b[i].params.kappa);
    }
    CHECK(run_scan(99, 0, std::nullopt, 2).empty());
}

TEST_CASE("argument bound for F is at least the observed count") {
    for (std::uint64_t i = 0; i < 10; ++i) {
        auto d = run_draw(draw_seed(3, i));
        CHECK(d.counts.F <= d.argument_bound);
    }
}
