#include <cmath>
#include <cstring>

#include "doctest.h"
#include "epnt/zero_data.hpp"
#include "support.hpp"

using namespace epnt;

TEST_CASE("zero-free region constants enclose their decimals") {
    for (Prec p : {53, 128, 512}) {
        Interval a = R0(p), b = R1(p);
        CHECK(rel_err(a, 6.397) < 1e-15);
        CHECK(rel_err(b, 2.0452) < 1e-15);
        Real w(p);
        mpfr_sub(w.get(), a.hi().get(), a.lo().get(), MPFR_RNDU);
        CHECK(w.to_double() <= std::ldexp(8.0, -int(p)));
    }
}

TEST_CASE("Liu-Wang tables are the published ones") {
    // checksum computed separately from the table as printed
    CHECK(lw_checksum() == 0x8d9e84404a927a88ULL);
    const auto& t = lw_tables();
    CHECK(std::strcmp(t.eta[0], "0.16") == 0);
    CHECK(std::strcmp(t.xi[6], "0.2067") == 0);
    CHECK(std::strcmp(t.nu[0], "0.26213") == 0);
    CHECK(t.M[11] == 6166);
    CHECK(t.varrho_n[11] == 7000);

    // eta increases to the common endpoint, xi decreases to it, nu is increasing
    for (int i = 1; i < 7; ++i) {
        CHECK(certainly_lt(lw_eta(i, 128), lw_eta(i + 1, 128)));
        CHECK(certainly_lt(lw_xi(i + 1, 128), lw_xi(i, 128)));
    }
    CHECK(rel_err(lw_eta(7, 128), 0.2067) < 1e-15);
    CHECK(rel_err(lw_xi(7, 128), 0.2067) < 1e-15);
    for (int j = 1; j < 13; ++j) CHECK(certainly_lt(lw_nu(j, 128), lw_nu(j + 1, 128)));
    CHECK(lw_M(5) == 4);

    CHECK_THROWS_AS(lw_eta(0, 128), DomainError);
    CHECK_THROWS_AS(lw_xi(8, 128), DomainError);
    CHECK_THROWS_AS(lw_nu(14, 128), DomainError);
    CHECK_THROWS_AS(lw_M(13), DomainError);
}

TEST_CASE("r1") {
    EvalContext ctx;
    // mpmath at the corner of the domain
    Interval v = r1_iv(Interval(3.0, 128), Interval(5.0, 128) / 7.0);
    CHECK(rel_err(v, 4.5851177355099752347) < 1e-15);
    CHECK(r1(3.0, 5.0 / 7.0 + 1e-12, ctx).value() >= 4.585117735);

    // the two linear pieces cross at log qT = 2.536/0.051
    double cross = 2.536 / 0.051;
    Interval below = r1_from_log(Interval(cross - 1.0, 128));
    Interval above = r1_from_log(Interval(cross + 1.0, 128));
    CHECK(rel_err(below, 0.298 * (cross - 1.0) + 4.358) < 1e-14);
    CHECK(rel_err(above, 0.247 * (cross + 1.0) + 6.894) < 1e-14);

    CHECK_THROWS_AS(r1(1.0, 10.0, ctx), DomainError);
    CHECK_THROWS_AS(r1(3.0, 0.7, ctx), DomainError);
}

TEST_CASE("Siegel bounds") {
    EvalContext ctx;
    SiegelBounds s = siegel_bounds(1000000, ctx);
    CHECK_FALSE(s.empty);
    CHECK(rel_err(s.lower.to_double(), 5.2392138058781647006e-4) < 1e-15);
    CHECK(rel_err(s.upper.to_double(), 1.0 - 5.2392138058781647006e-4) < 1e-15);
    CHECK(s.lower.to_double() <= 5.2392138058781647006e-4 * (1 + 1e-16));

    // 100/(sqrt(q) log^2 q) > 1/2 for small q: nothing to exclude
    CHECK(siegel_bounds(3, ctx).empty);
    CHECK(siegel_bounds(10000, ctx).empty == false);
    CHECK_THROWS_AS(siegel_bounds(2, ctx), DomainError);
}

TEST_CASE("zero_free_check boundary") {
    EvalContext ctx;
    double q = 1000.0;
    double thr = 1.0 - 1.0 / (6.397 * std::log(q));
    CHECK(zero_free_check(thr + 1e-9, 0.5, q, ctx));
    CHECK_FALSE(zero_free_check(thr - 1e-9, 0.5, q, ctx));
    // |gamma| > 1 moves the threshold up
    double thr_g = 1.0 - 1.0 / (6.397 * std::log(q * 50.0));
    CHECK_FALSE(zero_free_check(thr_g - 1e-9, -50.0, q, ctx));
    CHECK(zero_free_check(thr_g + 1e-9, -50.0, q, ctx));
    CHECK(zero_free_check(1.0, 0.0, 3.0, ctx));
    CHECK_THROWS_AS(zero_free_check(0.9, 0.0, 2.0, ctx), DomainError);
}
