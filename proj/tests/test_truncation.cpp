#include <cmath>

#include "doctest.h"
#include "epnt/truncation.hpp"
#include "epnt/zero_data.hpp"
#include "support.hpp"

using namespace epnt;

TEST_CASE("r4, r5, r6 golden values") {
    CHECK(rel_err(r4_iv(Interval(1e6, 128), Interval(10.0, 128)), 27.413454512625627162) < 1e-15);
    CHECK(rel_err(r5_iv(Interval(10.0, 128), Interval(-0.5, 128), Interval(10.0, 128)), 29.288082757271408275) <
          1e-15);
    CHECK(rel_err(r6_iv(Interval(10.0, 128)), 7.4181363071230233906) < 1e-15);
    // r6 is even
    CHECK(rel_err(r6_iv(Interval(-10.0, 128)), 7.4181363071230233906) < 1e-15);

    EvalContext ctx;
    CHECK_THROWS_AS(r4(1.5, 10.0, ctx), DomainError);
    CHECK_THROWS_AS(r4(100.0, 1.0, ctx), DomainError);
    CHECK_THROWS_AS(r5(0.0, 0.5, 10.0, ctx), DomainError);
}

TEST_CASE("stable r4 agrees with the naive difference") {
    // (T+1) log(q(T+1)/2 pi e) - (T-1) log(q(T-1)/2 pi e), formed directly at
    // enough precision that the cancellation is harmless
    auto naive_diff = [](double T, double q) {
        Prec p = 2048;
        Interval c = const_pi(p) * 2.0 * const_e(p);
        Interval t(T, p), Q(q, p);
        Interval d = (t + 1.0) * log(Q * (t + 1.0) / c) - (t - 1.0) * log(Q * (t - 1.0) / c);
        return d / const_pi(p);
    };
    auto stable_diff = [](double T, double q) {
        Prec p = 128;
        // r4 minus its two r1 summands
        Interval t(T, p), Q(q, p);
        Interval r1s = r1_from_log(log(Q) + log(t + 1.0)) + r1_from_log(log(Q) + log(t - 1.0));
        return r4_iv(t, Q) - r1s;
    };
    for (double T : {2.0, 10.0, 1e6, 1e40, 1e200})
        for (double q : {3.0, 1e4}) {
            CAPTURE(T);
            CHECK(rel_err(stable_diff(T, q), naive_diff(T, q).mid()) < 1e-14);
        }
}

TEST_CASE("r5 and r6 maxima dominate the sampled functions") {
    Prec p = 128;
    double T = 50.0, q = 20.0;
    Interval m5 = r5_max_bound_iv(Interval(T, p), Interval(q, p));
    Interval m6 = r6_max_bound_iv(Interval(T, p));
    for (double x = T - 1.0; x <= T + 1.0; x += 0.01)
        CHECK(certainly_le(r5_iv(Interval(x, p), Interval(-0.5, p), Interval(q, p)), m5));
    for (double x = -(T + 1.0); x <= T + 1.0; x += 0.37) CHECK(certainly_le(r6_iv(Interval(x, p)), m6));
}

TEST_CASE("R objective golden values") {
    CHECK(rel_err(r_factor_objective(3.4, 1, 1, 128).value(), 35.376107578513021457) < 1e-14);
    CHECK(rel_err(r_factor_objective(4.9, 7, 1, 128).value(), 20.146812924817107527) < 1e-14);
    // the literal reading evaluates R3 at x and can only be larger
    CHECK(r_factor_objective(3.4, 1, 1, 128) <= r_factor_objective(3.4, 1, 1, 128, Reading::verbatim));
}

TEST_CASE("r_factor row") {
    EvalContext ctx;
    SupCertificate c = r_factor(3.4, 1, 1, ctx);
    CHECK(c.tail_certified);
    CHECK(c.q_monotone);
    CHECK(c.argmax_Y >= 3.4);
    CHECK(r_factor_objective(3.4, 1, 1, 128) <= c.value);
    CHECK(rel_err(c.value.value(), 35.376107578513021457) < 1e-3);
    CHECK_THROWS_AS(r_factor(1.5, 1, 1, ctx), DomainError);
    CHECK_THROWS_AS(r_factor(3.0, 0, 1, ctx), DomainError);
}

TEST_CASE("q-dependent summands are monotone in q") {
    Prec p = 128;
    for (double Y : {3.4, 5.0, 8.0}) {
        auto in = TruncationInputs::from_loglog(Y, 5.0, 1.0, p);
        CHECK(r_star_q_scan(in.log_x, in.T, in.q) == "");
        CHECK(r_star_q_scan(in.log_x, in.T, Interval(2.0, p)) == "");
    }
}

TEST_CASE("R* parts") {
    auto in = TruncationInputs::from_loglog(4.0, 5.0, 1.0, 128);
    RStarParts r = r_star_parts(in);
    Interval sum = r.total();
    CHECK(rel_err(r_star(in).value(), sum.mid()) < 1e-15);
    for (const Interval* t : {&r.R2, &r.R3, &r.R5, &r.R7, &r.R8, &r.R11}) CHECK(t->lower() > 0.0);
    BigRTerms b = big_r_terms(in);
    CHECK(rel_err(b.R11.value(), r.R11.mid()) < 1e-15);

    TruncationInputs bad = in;
    bad.log_x = Interval(5.0, 128);
    CHECK_THROWS_AS(r_star(bad), DomainError);
    CHECK(parse_reading("verbatim") == Reading::verbatim);
    CHECK_THROWS_AS(parse_reading("literal"), ConfigError);
}
