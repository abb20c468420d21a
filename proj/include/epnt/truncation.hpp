#pragma once

#include <string>

#include "epnt/rigor.hpp"

namespace epnt {

// Two ways of reading the displayed truncation and C formulas.
//   reference  the reading that regenerates the published R, C and C1 tables
//   verbatim   every display taken literally
enum class Reading { reference, verbatim };

const char* to_string(Reading r);
Reading parse_reading(const std::string& s);

// The point at which the reference reading evaluates R3's point-dependent
// factors.
constexpr double kPerronPoint = 2.5;

struct TruncationInputs {
    Interval log_x;
    Interval T;
    Interval q;

    void validate() const;
    // log x = e^Y, T = (log x)^alpha_T, q = (log x)^alpha_q
    static TruncationInputs from_loglog(double Y, double alpha_T, double alpha_q, Prec prec);
};

Interval r4_iv(const Interval& T, const Interval& q);
UBound r4(double T, double q, const EvalContext& ctx);

Interval r5_iv(const Interval& x, const Interval& sigma, const Interval& q);
UBound r5(double x, double sigma, double q, const EvalContext& ctx);
Interval r6_iv(const Interval& x);
UBound r6(double x, const EvalContext& ctx);

// the closed-form maxima of r5(., -1/2, q) on [T-1, T+1] and of r6 on
// [-(T+1), T+1] used in the R7 / R8 terms
Interval r5_max_bound_iv(const Interval& T, const Interval& q);
Interval r6_max_bound_iv(const Interval& T);

struct BigRTerms {
    UBound R2, R3, R5, R7, R8, R11;
};

// every summand of R*(x,T,q), as enclosures
struct RStarParts {
    Interval log_q_over_log2, R2, R3, log2, R5, R7, R8, log_x, r4_term, R11;

    Interval total() const;
};

RStarParts r_star_parts(const TruncationInputs& in, Reading reading = Reading::reference);
BigRTerms big_r_terms(const TruncationInputs& in, Reading reading = Reading::reference);
UBound r_star(const TruncationInputs& in, Reading reading = Reading::reference);

// Checks that every q-dependent summand of R* is nondecreasing along a grid
// of q in [3, q_max] (at fixed x, T). Returns the name of the first failing
// term, or an empty string.
std::string r_star_q_scan(const Interval& log_x, const Interval& T, const Interval& q_max,
                          Reading reading = Reading::reference);

// sup over log log x >= C of R* T / (x log x log log x), T = (log x)^{a1+a2+3},
// q = (log x)^{a1}
SupCertificate r_factor(double C, double alpha1, double alpha2, const EvalContext& ctx,
                        Reading reading = Reading::reference);

// the scaled objective at one point; exposed for term attribution
UBound r_factor_objective(double Y, double alpha1, double alpha2, Prec prec,
                          Reading reading = Reading::reference);

}  // namespace epnt
