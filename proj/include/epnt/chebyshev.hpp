#pragma once

#include "epnt/rigor.hpp"

namespace epnt {

// -zeta'/zeta(b) <= 1/(b-1) - gamma + 0.1877 (b-1), for 1 < b <= 1.3.
// The enclosure form takes b - 1 directly so b = 1 + 1/log x loses nothing.
Interval zeta_log_deriv_bound_iv(const Interval& b_minus_one);
UBound zeta_log_deriv_bound(double b, const EvalContext& ctx);

// psi(t - 1/2) - psi(t/2) <= r2(t), t >= 1126
Interval r2_iv(const Interval& t);
UBound r2(double t, const EvalContext& ctx);

// sum_{t/2 < n < t-1/2} Lambda(n) n^{-b} <= (2/t)^b r2(t)
Interval lambda_tail_bound_iv(const Interval& t, const Interval& b);
UBound lambda_tail_bound(double t, double b, const EvalContext& ctx);

// Goldston-type weighted sum bound, x >= 3
Interval r3_iv(const Interval& x);
UBound r3(double x, const EvalContext& ctx);

struct PerronParams {
    Interval log_x;        // x itself is exp(log_x)
    Interval b_minus_one;  // b = 1 + b_minus_one
    Interval T;

    void validate() const;
};

Interval perron_remainder_iv(const PerronParams& params, const Interval& lambda_sum,
                             const Interval& mid_sum);
UBound perron_remainder(const PerronParams& params, const UBound& lambda_sum_bound,
                        const UBound& mid_sum_bound);

}  // namespace epnt
