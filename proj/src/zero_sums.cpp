#include "epnt/zero_sums.hpp"

#include <cmath>

#include "epnt/zero_data.hpp"

namespace epnt {

namespace {

void require_tail_threshold(const Interval& T, const Interval& q) {
    Prec p = T.prec();
    require(!certainly_lt(log(q * T), log(Interval(kLWThresholdTail, p))),
            "the zero-density tail needs qT >= 10^11");
}

void require_branch1(const Interval& q) {
    Prec p = q.prec();
    require(mpfr_cmp_si(q.lo().get(), 1) > 0 && certainly_lt(Interval(1.0, p), R0(p) * log(q)),
            "mu branch 1 needs R0 log q > 1 (violated: R0 log q ≤ 1)");
}

}  // namespace

void SigmaParams::validate() const {
    require(i >= 1 && i <= 6, "i must lie in 1..6");
    require(J >= 0 && J <= 12, "J must lie in 0..12");
    require(log_x.lo().sign() > 0, "log x must be positive");
    require(mpfr_cmp_si(q.lo().get(), 1) > 0, "q must exceed 1");
}

Interval s_factor_iv(const Interval& T, const Interval& q) {
    Prec p = T.prec();
    require(mpfr_cmp_si(q.lo().get(), 1) > 0, "S(T,q) needs q > 1");
    require(!certainly_lt(T * 7.0, Interval(5.0, p)), "S(T,q) needs T >= 5/7");
    Interval pi = const_pi(p);
    Interval logT = log(T), logq = log(q);
    Interval main = (2.0 + logT) * (logq - log(2.0 * pi) - 1.0) + T * (logT - 1.0) + 1.0;
    return main / pi + 2.0 * r1_from_log(logq) + logT * r1_from_log(logq + 0.5 * logT);
}

UBound s_factor(double T, double q, const EvalContext& ctx) {
    return UBound::from_interval(s_factor_iv(Interval(T, ctx.prec()), Interval(q, ctx.prec())));
}

Interval R_iJ(int i, int J, Prec prec) {
    require(i >= 1 && i <= 6 && J >= 0 && J <= 12, "R_{i,J} needs 1 <= i <= 6, 0 <= J <= 12");
    return 1.0 / max(lw_xi(i + 1, prec), lw_nu(J + 1, prec));
}

Interval sigma0_rate_iv(const Interval& log_x, const Interval& T, const Interval& q, const Interval& rate) {
    Interval lqT = log(q * T);
    return q * s_factor_iv(T, q) / 2.0 * exp(-(rate * log_x / lqT));
}

Interval sigma0_iv(const SigmaParams& params) {
    params.validate();
    Prec p = params.log_x.prec();
    return sigma0_rate_iv(params.log_x, params.T, params.q, 1.0 / R_iJ(params.i, params.J, p));
}

UBound sigma0_bound(const SigmaParams& params) { return UBound::from_interval(sigma0_iv(params)); }

Interval mu_branch1_iv(const Interval& log_x, const Interval& q) {
    require_branch1(q);
    Interval d = R0(q.prec()) * log(q);
    return exp(-(log_x / d)) / (1.0 - 1.0 / d);
}

Interval mu_branch2_iv(const Interval& log_x, const Interval& q) {
    return q * exp(-2.0 * sqrt(log_x / R0(q.prec())));
}

Interval mu_branch3_iv(const Interval& lambda, const Interval& log_x, const Interval& T, const Interval& q) {
    Interval lqT = log(q * T);
    return q * exp(-(lambda * log_x / lqT) - lqT / (R0(q.prec()) * lambda));
}

Interval mu_iv(const Interval& lambda, const Interval& log_x, const Interval& T, const Interval& q,
               MuRegion region) {
    require(log_x.lo().sign() > 0, "mu needs log x > 0");
    require(lambda.lo().sign() > 0, "mu needs lambda > 0");
    if (region == MuRegion::small_gamma) return mu_branch1_iv(log_x, q);
    Prec p = q.prec();
    Interval r0 = R0(p);
    Interval lhs = sqrt(log_x / r0);
    Interval rhs = log(q * T) / (r0 * lambda);
    if (certainly_lt(lhs, rhs)) return mu_branch2_iv(log_x, q);
    if (certainly_le(rhs, lhs)) return mu_branch3_iv(lambda, log_x, T, q);
    // undecided at this precision: both branches are candidates
    return max(mu_branch2_iv(log_x, q), mu_branch3_iv(lambda, log_x, T, q));
}

UBound mu(const Interval& lambda, const Interval& log_x, const Interval& T, const Interval& q,
          MuRegion region) {
    return UBound::from_interval(mu_iv(lambda, log_x, T, q, region));
}

Interval sigma1_small_gamma_iv(const Interval& log_x, const Interval& q) {
    require_branch1(q);
    Prec p = q.prec();
    Interval head = (log(q) - log(2.0 * const_pi(p)) - 1.0) / const_pi(p) + r1_from_log(log(q));
    return head * mu_branch1_iv(log_x, q);
}

UBound sigma1_small_gamma(const Interval& log_x, const Interval& q) {
    return UBound::from_interval(sigma1_small_gamma_iv(log_x, q));
}

Interval sigma1_tail_iv(const SigmaParams& params) {
    params.validate();
    require_tail_threshold(params.T, params.q);
    Prec p = params.log_x.prec();
    const auto& L = params.log_x;
    const auto& T = params.T;
    const auto& q = params.q;
    Interval xi = lw_xi(params.i + 1, p);
    Interval s = mu_iv(lw_eta(params.i, p), L, T, q, MuRegion::large_gamma) +
                 mu_iv(xi, L, T, q, MuRegion::large_gamma);
    for (int j = 1; j <= params.J; ++j)
        s = s + Interval(static_cast<double>(lw_M(j)), p) *
                    mu_iv(max(xi, lw_nu(j, p)), L, T, q, MuRegion::large_gamma);
    return 2.0 * q * s;
}

UBound sigma1_tail(const SigmaParams& params) { return UBound::from_interval(sigma1_tail_iv(params)); }

}  // namespace epnt
