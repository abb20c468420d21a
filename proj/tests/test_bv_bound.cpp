#include <cmath>

#include "doctest.h"
#include "epnt/bv_bound.hpp"
#include "support.hpp"

using namespace epnt;

namespace {

double log10_of(const Interval& v) { return std::log10(v.mid()); }

double log10_mid(const Interval& v) {
    // mid() overflows for x-sized values, so go through the log
    return log(v).mid() / std::log(10.0);
}

const NamedInterval& find(const std::vector<NamedInterval>& v, const std::string& name) {
    for (const auto& t : v)
        if (t.name == name) return t;
    FAIL("missing term " << name);
    return v.front();
}

}  // namespace

TEST_CASE("c0 and psi(113)") {
    CHECK(rel_err(c0_iv(128), 48.832145335435819575) < 1e-15);
    CHECK(rel_err(psi113_iv(128), 117.38672526983167791) < 1e-15);
    CHECK((psi113_iv(128) / 113.0).upper() < 1.05);
    // enclosures at higher precision sit inside the lower-precision ones
    Interval lo = c0_iv(64), hi = c0_iv(256);
    CHECK(cmp(lo.lo(), hi.lo()) <= 0);
    CHECK(cmp(hi.hi(), lo.hi()) <= 0);
    CHECK(log10_of(lo) == doctest::Approx(log10_of(hi)).epsilon(1e-15));
}

TEST_CASE("c1 brackets") {
    Interval c = c1_iv(128);
    CHECK(c.lower() > 1.9);
    CHECK(c.upper() < 2.0);
    CHECK(rel_err(c.lo().to_double(), 1.9435963050921034176) < 1e-14);
    CHECK(rel_err(c.hi().to_double(), 1.9435982486893803081) < 1e-14);
    CHECK(c.contains(1.9435970));
    // a shorter product gives a wider bracket that still overlaps
    Interval k = c1_iv(128, 1000);
    CHECK(k.lower() <= c.lower());
    CHECK(k.upper() >= c.upper());
    CHECK_THROWS_AS(c1_iv(128, 1), DomainError);
}

TEST_CASE("E parts at (Y, A, Q1) = (8, 4, (log x)^4)") {
    BVParams p = BVParams::from_exponent(8.0, 4.0, 4.0, 128);
    auto parts = e_term_parts(p, 128);
    REQUIRE(parts.size() == 3);
    CHECK(log10_mid(find(parts, "E_sqrt").value) == doctest::Approx(646.7140).epsilon(1e-7));
    CHECK(log10_mid(find(parts, "E_exceptional").value) == doctest::Approx(1289.9967).epsilon(1e-7));
    CHECK(log10_mid(find(parts, "E_large_sieve").value) == doctest::Approx(1198.3466).epsilon(1e-7));
    EvalContext ctx;
    CHECK(e_term(p, ctx).log10_value() == doctest::Approx(1289.9967).epsilon(1e-7));

    // the exceptional-zero piece outweighs the prime number theorem error
    auto mid = e_term_middle_parts(p, 128);
    CHECK(certainly_lt(find(mid, "pnt").value, find(mid, "exceptional").value));
    CHECK(log10_mid(find(mid, "exceptional").value) == doctest::Approx(1284.726).epsilon(1e-6));
    CHECK(log10_mid(find(mid, "pnt").value) == doctest::Approx(1282.220).epsilon(1e-6));
}

TEST_CASE("bv right-hand side at (8, 5, (log x)^5)") {
    EvalContext ctx;
    BVParams p = BVParams::from_exponent(8.0, 5.0, 5.0, ctx.prec());
    BVResult r = bv_rhs(p, ctx);
    CHECK(r.certified);
    CHECK(r.C.tail_certified);
    CHECK(r.total.log10_value() == doctest::Approx(1327.6791105138516).epsilon(1e-12));
    // the bound is far above x here: log10 x = e^8/log 10 = 1294.6
    double log10_x = std::exp(8.0) / std::log(10.0);
    CHECK(r.total.log10_value() - log10_x == doctest::Approx(33.0655).epsilon(1e-5));

    REQUIRE(r.terms.size() == 7);
    const char* names[] = {"sqrt_x",   "small_moduli", "large_moduli",  "zero_sum",
                           "E_sqrt",   "E_exceptional", "E_large_sieve"};
    double want[] = {647.3068, 1295.1548, 1295.1548, 1327.6791, 643.2420, 1292.0671, 1196.6094};
    for (int i = 0; i < 7; ++i) {
        CHECK(r.terms[i].first == names[i]);
        CHECK(r.terms[i].second.log10_value() == doctest::Approx(want[i]).epsilon(1e-7));
        CHECK(r.terms[i].second <= r.total);
    }
    CHECK(r.C.value.log10_value() == doctest::Approx(31.1765).epsilon(1e-5));
}

TEST_CASE("Q1 dependence") {
    EvalContext ctx;
    SupCertificate C = bv_constant_C(5.0, ctx);
    BVParams p = BVParams::from_exponent(8.0, 5.0, 3.0, ctx.prec());
    BVParams p2 = p;
    p2.log_Q1 = p.log_Q1 + const_log2(ctx.prec());
    BVResult a = bv_rhs(p, ctx, C), b = bv_rhs(p2, ctx, C);
    double la = a.terms[2].second.log10_value(), lb = b.terms[2].second.log10_value();
    CHECK(la - lb == doctest::Approx(std::log10(2.0)).epsilon(1e-9));
    // everything else but the log q summand of E is unchanged
    CHECK(a.terms[0].second.log10_value() == b.terms[0].second.log10_value());
    CHECK(a.terms[3].second.log10_value() == b.terms[3].second.log10_value());
}

TEST_CASE("validation") {
    Prec p = 128;
    CHECK(bv_threshold(5.0) == 7.0);
    CHECK(bv_threshold(1.0) == doctest::Approx(11 * std::log(10.0) / 2));
    CHECK_THROWS_AS(BVParams::from_exponent(8.0, 3.0, 1.0, p).validate(), DomainError);
    CHECK_THROWS_AS(BVParams::from_exponent(6.9, 5.0, 1.0, p).validate(), DomainError);
    CHECK_THROWS_AS(BVParams::from_exponent(8.0, 5.0, 5.5, p).validate(), DomainError);
    CHECK_THROWS_AS(BVParams::from_exponent(8.0, 5.0, -0.1, p).validate(), DomainError);
    CHECK_NOTHROW(BVParams::from_exponent(8.0, 5.0, 5.0, p).validate());
    CHECK_NOTHROW(BVParams::from_exponent(8.0, 5.0, 0.0, p).validate());
    EvalContext ctx;
    CHECK_THROWS_AS(bv_constant_C(3.0, ctx), DomainError);
}
