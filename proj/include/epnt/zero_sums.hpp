#pragma once

#include "epnt/rigor.hpp"

namespace epnt {

struct SigmaParams {
    Interval log_x;
    Interval T;
    Interval q;
    int i = 1;  // 1..6
    int J = 0;  // 0..12

    void validate() const;
};

Interval s_factor_iv(const Interval& T, const Interval& q);
UBound s_factor(double T, double q, const EvalContext& ctx);

// R_{i,J} = 1/max{xi_{i+1}, nu_{J+1}}
Interval R_iJ(int i, int J, Prec prec);

// q S(T,q)/2 * x^{-rate/log qT}; the zero-sum bound uses rate = 1/R_{i,J}
Interval sigma0_rate_iv(const Interval& log_x, const Interval& T, const Interval& q, const Interval& rate);
Interval sigma0_iv(const SigmaParams& params);
UBound sigma0_bound(const SigmaParams& params);

// |gamma| <= 1 selects the first branch; above that the branch condition
// exp sqrt(log x/R0) < (qT)^{1/(R0 lambda)} decides between the other two.
enum class MuRegion { small_gamma, large_gamma };

Interval mu_branch1_iv(const Interval& log_x, const Interval& q);
Interval mu_branch2_iv(const Interval& log_x, const Interval& q);
Interval mu_branch3_iv(const Interval& lambda, const Interval& log_x, const Interval& T, const Interval& q);
Interval mu_iv(const Interval& lambda, const Interval& log_x, const Interval& T, const Interval& q,
               MuRegion region);
UBound mu(const Interval& lambda, const Interval& log_x, const Interval& T, const Interval& q,
          MuRegion region);

Interval sigma1_small_gamma_iv(const Interval& log_x, const Interval& q);
UBound sigma1_small_gamma(const Interval& log_x, const Interval& q);

// 2q (mu(eta_i) + mu(xi_{i+1}) + sum_{j<=J} M_j mu(max{xi_{i+1}, nu_j}))
Interval sigma1_tail_iv(const SigmaParams& params);
UBound sigma1_tail(const SigmaParams& params);

}  // namespace epnt
