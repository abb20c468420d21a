#include <gmp.h>

#include <cmath>
#include <random>

#include "doctest.h"
#include "epnt/rigor.hpp"
#include "support.hpp"

using namespace epnt;

namespace {

bool contains_q(const Interval& v, const mpq_t q) {
    return mpfr_cmp_q(v.lo().get(), q) <= 0 && mpfr_cmp_q(v.hi().get(), q) >= 0;
}

bool nested(const Interval& inner, const Interval& outer) {
    return cmp(outer.lo(), inner.lo()) <= 0 && cmp(inner.hi(), outer.hi()) <= 0;
}

}  // namespace

TEST_CASE("points are exact and decimals are enclosed") {
    Interval a(0.375, 64);
    CHECK(cmp(a.lo(), a.hi()) == 0);
    CHECK(a.contains(0.375));

    mpq_t q;
    mpq_init(q);
    mpq_set_str(q, "63970/10000", 10);
    mpq_canonicalize(q);
    Interval r0 = Interval::decimal("6.3970", 53);
    CHECK(contains_q(r0, q));
    CHECK(cmp(r0.lo(), r0.hi()) < 0);  // 6.397 is not a binary fraction
    mpq_clear(q);

    CHECK_THROWS_AS(Interval::decimal("6.39x", 53), ConfigError);
}

TEST_CASE("arithmetic encloses the exact rational result") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    mpq_t qa, qb, qr;
    mpq_inits(qa, qb, qr, nullptr);
    for (int s = 0; s < 500; ++s) {
        double a = std::ldexp(u(rng), s % 50 - 25), b = std::ldexp(u(rng), (7 * s) % 50 - 25);
        Interval A(a, 53), B(b, 53);
        mpq_set_d(qa, a);
        mpq_set_d(qb, b);
        mpq_add(qr, qa, qb);
        CHECK(contains_q(A + B, qr));
        mpq_mul(qr, qa, qb);
        CHECK(contains_q(A * B, qr));
        mpq_div(qr, qa, qb);
        CHECK(contains_q(A / B, qr));
        mpq_set_d(qr, 3.0);
        mpq_sub(qr, qa, qr);
        CHECK(contains_q(A - 3.0, qr));
    }
    mpq_clears(qa, qb, qr, nullptr);
}

TEST_CASE("transcendental enclosures nest as precision grows") {
    for (double v : {0.5, 1.0, 2.0, 10.0, 1e6}) {
        Interval lo = log(Interval(v, 64)), hi = log(Interval(v, 256));
        CHECK(nested(hi, lo));
        CHECK(std::fabs(lo.mid() - std::log(v)) < 1e-14);
        CHECK(nested(exp(Interval(v / 1e6, 256)), exp(Interval(v / 1e6, 64))));
        CHECK(nested(sqrt(Interval(v, 256)), sqrt(Interval(v, 64))));
    }
    CHECK(nested(const_pi(300), const_pi(100)));
    CHECK(rel_err(const_pi(64), M_PI) < 1e-15);
}

TEST_CASE("division by an interval straddling zero is refused") {
    Interval z = Interval::hull(-1.0, 1.0, 64);
    CHECK_THROWS_AS(Interval(1.0, 64) / z, DomainError);
    CHECK_THROWS_AS(log(z), DomainError);
}

TEST_CASE("extended exponent range holds x = exp(exp(40))") {
    Interval L = exp(Interval(40.0, 128));
    Interval x = exp(L);
    CHECK_FALSE(x.hi().is_inf());
    CHECK(rel_err(log(x), L.mid()) < 1e-25);
}

TEST_CASE("UBound basics") {
    Prec p = 128;
    CHECK(UBound::zero(p).is_zero());
    CHECK(UBound::from_double(0.0, p).is_zero());
    CHECK_THROWS_AS(UBound::from_double(-1.0, p), DomainError);
    CHECK(UBound::from_interval(Interval::hull(-2.0, -1.0, p)).is_zero());

    UBound two = UBound::from_double(2.0, p);
    UBound three = UBound::from_double(3.0, p);
    CHECK(rel_err(ub_add(two, three).value(), 5.0) < 1e-15);
    CHECK(ub_add(two, three).value() >= 5.0);
    CHECK(ub_mul(two, three).value() >= 6.0);
    CHECK(rel_err(ub_pow(two, 10.0).value(), 1024.0) < 1e-15);
    CHECK(ub_pow(two, 0.0).value() == 1.0);
    CHECK(ub_add(UBound::zero(p), three).value() == doctest::Approx(3.0));
    CHECK(ub_max(two, three).value() == doctest::Approx(3.0));
    CHECK(ub_min(two, three).value() == doctest::Approx(2.0));
    CHECK(UBound::from_double(1000.0, p).log10_value() >= 3.0);
    CHECK(UBound::from_double(1000.0, p).log10_value() == doctest::Approx(3.0));
    CHECK(ub_div_by_lower(UBound::from_double(6.0, p), Interval(3.0, p)).value() >= 2.0);

    // x^t with x = exp(1e30): far outside double, still ordered
    UBound huge = ub_pow_xt(1e30, 0.5, p);
    CHECK(huge.value() == INFINITY);
    CHECK(huge.log10_value() == doctest::Approx(0.5e30 / std::log(10.0)));
    CHECK(two < huge);
}

TEST_CASE("ub_add is monotone in each argument") {
    Prec p = 96;
    for (double a = 0.125; a < 100; a *= 3.7)
        for (double b = 0.5; b < 50; b *= 2.3) {
            UBound A = UBound::from_double(a, p), A2 = UBound::from_double(a * 1.0001, p);
            UBound B = UBound::from_double(b, p);
            CHECK(ub_add(A, B) <= ub_add(A2, B));
            CHECK(ub_add(A, B) <= ub_add(B, A2));
        }
}

TEST_CASE("sup_scan") {
    EvalContext ctx;
    SUBCASE("constant objective is not tail-certified") {
        auto c = sup_scan([](double) { return UBound::from_double(4.0, 128); }, 2.0, ctx);
        CHECK(c.value.value() == doctest::Approx(4.0));
        CHECK(c.argmax_Y == 2.0);  // ties keep the smallest Y
        CHECK_FALSE(c.tail_certified);
    }
    SUBCASE("decreasing objective peaks at the start") {
        auto f = [](double Y) { return UBound::from_interval(exp(-exp(Interval(Y, 128)))); };
        auto c = sup_scan(f, 1.0, ctx);
        CHECK(c.argmax_Y == 1.0);
        CHECK(c.tail_certified);
        CHECK(c.Y_end == doctest::Approx(7.0));
        REQUIRE(c.tail_evidence.size() == 4);
        CHECK(c.tail_evidence[0].first == doctest::Approx(8.0));
        CHECK(c.tail_evidence[3].first == doctest::Approx(15.0));
    }
    SUBCASE("interior maximum") {
        auto f = [](double Y) { return UBound::from_double(std::exp(-(Y - 3.0) * (Y - 3.0)), 128); };
        auto c = sup_scan(f, 1.0, ctx);
        CHECK(c.argmax_Y == doctest::Approx(3.0));
        CHECK(c.tail_certified);
    }
    SUBCASE("bad context") {
        EvalContext bad;
        bad.grid_step = 0.0;
        CHECK_THROWS_AS(sup_scan([](double) { return UBound(); }, 0.0, bad), ConfigError);
    }
}

TEST_CASE("KahanSum keeps what naive summation drops") {
    KahanSum k;
    k.add(1e16);
    k.add(1.0);
    k.add(-1e16);
    CHECK(k.value() == 1.0);
    KahanSum s;
    for (int i = 0; i < 1000000; ++i) s.add(0.1);
    CHECK(std::fabs(s.value() - 100000.0) < 1e-9);
}
