#include <cmath>

#include "doctest.h"
#include "epnt/chebyshev.hpp"
#include "epnt/sieve.hpp"
#include "support.hpp"

using namespace epnt;

TEST_CASE("zeta log-derivative bound") {
    EvalContext ctx;
    CHECK(rel_err(zeta_log_deriv_bound(1.1, ctx).value(), 9.4415543350984671394) < 1e-14);
    // 1/(b-1) dominates as b -> 1
    Interval tiny = zeta_log_deriv_bound_iv(Interval(1e-8, 128));
    CHECK(rel_err(tiny, 1e8) < 1e-8);
    CHECK_THROWS_AS(zeta_log_deriv_bound(1.0, ctx), DomainError);
    CHECK_THROWS_AS(zeta_log_deriv_bound(1.31, ctx), DomainError);
    CHECK_NOTHROW(zeta_log_deriv_bound(1.3, ctx));
}

TEST_CASE("r2 golden values and the sieve") {
    EvalContext ctx;
    CHECK(rel_err(r2_iv(Interval(1126.0, 128)), 644.42401062439756004) < 1e-15);
    CHECK(rel_err(r2_iv(Interval(1e6, 128)), 517818.66128457378914) < 1e-15);
    CHECK_THROWS_AS(r2(1125.0, ctx), DomainError);

    LambdaTable t = sieve_lambda(200000);
    for (double x = 1126; x < 200000; x *= 1.37)
        CHECK(psi(x - 0.5, t) - psi(x / 2, t) <= r2(x, ctx).value());
}

TEST_CASE("lambda tail bound is (2/t)^b r2(t)") {
    EvalContext ctx;
    for (double t : {1126.0, 5000.0, 1e6})
        for (double b : {1.01, 1.2, 2.0}) {
            double want = std::pow(2.0 / t, b) * r2(t, ctx).value();
            CHECK(rel_err(lambda_tail_bound(t, b, ctx).value(), want) < 1e-13);
        }
    CHECK_THROWS_AS(lambda_tail_bound(2000.0, 1.0, ctx), DomainError);

    // and it dominates the sum it bounds
    LambdaTable lam = sieve_lambda(20000);
    double t = 17000.0, b = 1.05, s = 0.0;
    for (const auto& e : lam.entries())
        if (e.n > t / 2 && e.n < t - 0.5) s += std::log(double(e.p)) * std::pow(double(e.n), -b);
    CHECK(s <= lambda_tail_bound(t, b, ctx).value());
}

TEST_CASE("r3 golden values") {
    EvalContext ctx;
    CHECK(rel_err(r3_iv(Interval(3.0, 128)), 25.435869738964023327) < 1e-15);
    CHECK(rel_err(r3_iv(Interval(1e5, 128)), 14936567.238383807541) < 1e-15);
    CHECK(rel_err(r3_iv(Interval(1e9, 128)), 304665529989.95440917) < 1e-15);
    CHECK_THROWS_AS(r3(2.9, ctx), DomainError);
}

TEST_CASE("r3 stable fraction matches the naive form at high precision") {
    // 2/(1 + sqrt(x-1.5) - sqrt(x)) evaluated directly at 1024 bits
    for (double x : {3.0, 17.0, 1e4, 1e12, 1e30}) {
        Prec p = 1024;
        Interval X(x, p);
        Interval naive = 2.0 / (1.0 + sqrt(X - 1.5) - sqrt(X));
        Interval stable = 2.0 / (1.0 - 1.5 / (sqrt(X - 1.5) + sqrt(X)));
        CHECK(rel_err(stable, naive.mid()) < 1e-15);
    }
    // at double-sized precision the naive form loses every digit for huge x
    Interval X(1e30, 53);
    Interval naive = 2.0 / (1.0 + sqrt(X - 1.5) - sqrt(X));
    Interval stable = 2.0 / (1.0 - 1.5 / (sqrt(X - 1.5) + sqrt(X)));
    CHECK(naive.upper() - naive.lower() > 100.0 * (stable.upper() - stable.lower()));
}

TEST_CASE("Perron remainder") {
    Prec p = 128;
    PerronParams par{log(Interval(1e6, p)), Interval(0.1, p), Interval(1e4, p)};
    Interval zero(0.0, p);
    Interval base = perron_remainder_iv(par, zero, zero);
    CHECK(base.lower() > 0.0);
    // increasing in both sums
    Interval more = perron_remainder_iv(par, Interval(5.0, p), Interval(1.0, p));
    CHECK(certainly_lt(base, more));
    // larger T shrinks the remainder
    PerronParams wide = par;
    wide.T = Interval(1e6, p);
    CHECK(certainly_lt(perron_remainder_iv(wide, zero, zero), base));

    PerronParams bad = par;
    bad.b_minus_one = Interval(0.0, p);
    CHECK_THROWS_AS(perron_remainder_iv(bad, zero, zero), DomainError);
    bad = par;
    bad.T = Interval(0.5, p);
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = par;
    bad.log_x = Interval(1.0, p);
    CHECK_THROWS_AS(bad.validate(), DomainError);
}
