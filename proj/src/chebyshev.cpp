#include "epnt/chebyshev.hpp"

namespace epnt {

Interval zeta_log_deriv_bound_iv(const Interval& b_minus_one) {
    require(b_minus_one.lo().sign() > 0, "zeta_log_deriv_bound needs b > 1");
    Prec p = b_minus_one.prec();
    return 1.0 / b_minus_one - const_euler(p) + Interval::decimal("0.1877", p) * b_minus_one;
}

UBound zeta_log_deriv_bound(double b, const EvalContext& ctx) {
    require(b > 1.0 && b <= 1.3, "zeta_log_deriv_bound needs 1 < b <= 1.3");
    Interval bm1 = Interval(b, ctx.prec()) - 1.0;
    return UBound::from_interval(zeta_log_deriv_bound_iv(bm1));
}

Interval r2_iv(const Interval& t) {
    require(mpfr_cmp_si(t.lo().get(), 1126) >= 0, "r2 needs t >= 1126");
    Interval tm = t - 0.5;
    Interval half = t / 2.0;
    Interval lm = log(tm);
    return half * (1.0 + 1.0 / lm - 1.0 / (2.0 * log(half))) + sqrt(tm) * (1.0 + 1.0 / lm) -
           Interval::decimal("0.98", t.prec()) * sqrt(half) + 3.0 * cbrt(tm) -
           0.5 * (1.0 + 1.0 / (2.0 * lm));
}

UBound r2(double t, const EvalContext& ctx) {
    return UBound::from_interval(r2_iv(Interval(t, ctx.prec())));
}

Interval lambda_tail_bound_iv(const Interval& t, const Interval& b) {
    require(mpfr_cmp_si(b.lo().get(), 1) > 0, "lambda_tail_bound needs b > 1");
    Interval r = r2_iv(t);
    return exp(b * (const_log2(t.prec()) - log(t))) * r;
}

UBound lambda_tail_bound(double t, double b, const EvalContext& ctx) {
    return UBound::from_interval(lambda_tail_bound_iv(Interval(t, ctx.prec()), Interval(b, ctx.prec())));
}

Interval r3_iv(const Interval& x) {
    require(mpfr_cmp_si(x.lo().get(), 3) >= 0, "r3 needs x >= 3");
    Prec p = x.prec();
    Interval L = log(x);
    Interval ln2 = const_log2(p);
    Interval pi = const_pi(p);
    Interval s2 = sqrt(Interval(2.0, p));
    Interval sx = sqrt(x);
    // 2/(1 + sqrt(x-1.5) - sqrt(x)) without the cancellation
    Interval frac = 2.0 / (1.0 - 1.5 / (sqrt(x - 1.5) + sx));
    Interval tail = (1.0 / sx) * (1.0 - log((s2 - 1.0) / (s2 + 1.0)));
    Interval bracket = (Interval(2.0, p) / 3.0) * (4.0 + 1.0 / ln2) + 2.0 * log(L) + 2.0 / L +
                       (Interval(16.0, p) / 15.0) * log(L / ln2) +
                       (sqr(pi) / 6.0 - 1.0) * (frac - tail);
    return x * L * bracket;
}

UBound r3(double x, const EvalContext& ctx) {
    return UBound::from_interval(r3_iv(Interval(x, ctx.prec())));
}

void PerronParams::validate() const {
    require(b_minus_one.lo().sign() > 0, "Perron remainder needs b > 1");
    require(mpfr_cmp_si(T.lo().get(), 1) >= 0, "Perron remainder needs T >= 1");
    require(!certainly_lt(log_x, log(Interval(3.0, log_x.prec()))), "Perron remainder needs x >= 3");
}

Interval perron_remainder_iv(const PerronParams& params, const Interval& lambda_sum,
                             const Interval& mid_sum) {
    params.validate();
    Prec p = params.log_x.prec();
    const Interval& L = params.log_x;
    const Interval& T = params.T;
    Interval b = 1.0 + params.b_minus_one;
    Interval pi = const_pi(p);
    Interval ln2 = const_log2(p);
    Interval x = exp(L);
    Interval xb = exp(b * L);
    Interval inv2x = 0.5 / x;

    Interval head = xb / (pi * T * ln2) * lambda_sum + xb / (2.0 * pi * T) * mid_sum;

    // the two boundary-point terms at x - 1/2 and x + 1/2
    Interval xm = x - 0.5, xp = x + 0.5;
    Interval log_xm = L + log1p(-inv2x), log_xp = L + log1p(inv2x);
    Interval bp_minus = log_xm * xm * (2.0 + 1.0 / xm) * exp(-b * log1p(-inv2x));
    Interval bp_plus = log_xp * 2.0 * xp * exp(-b * log1p(inv2x));
    Interval r3x = r3_iv(x);
    Interval two_b = exp(b * ln2);
    return head + (two_b * (bp_minus + bp_plus + r3x) + 2.0 * r3x) / (pi * T);
}

UBound perron_remainder(const PerronParams& params, const UBound& lambda_sum_bound,
                        const UBound& mid_sum_bound) {
    return UBound::from_interval(
        perron_remainder_iv(params, lambda_sum_bound.as_interval(), mid_sum_bound.as_interval()));
}

}  // namespace epnt
