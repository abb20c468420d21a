#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "epnt/rigor.hpp"
#include "epnt/truncation.hpp"

namespace epnt {

struct BVParams {
    double Y = 8.0;       // log log x
    double A = 5.0;
    Interval log_Q1;      // log Q1, 0 <= log Q1 <= A log log x

    void validate() const;
    // Q1 = (log x)^{Q1_exp}
    static BVParams from_exponent(double Y, double A, double Q1_exp, Prec prec);
};

// max{7, 11 log 10/(2A)}
double bv_threshold(double A);

// psi(113) as an enclosure of sum log p over prime powers <= 113
Interval psi113_iv(Prec prec);

Interval c0_iv(Prec prec);
UBound c0(const EvalContext& ctx);

// prod_{p <= P} (1 + 1/(p(p-1))) is a lower bound for c1, and times exp(1/P)
// an upper bound; the result is the hull of the two.
Interval c1_iv(Prec prec, std::uint64_t P = 1000000);
UBound c1(const EvalContext& ctx);

struct NamedInterval {
    std::string name;
    Interval value;
};

// E(x, A) split into its three grouped summands, with log q/log 2 taken at
// q = Q1 unless log_q is given.
std::vector<NamedInterval> e_term_parts(const BVParams& params, Prec prec, const Interval* log_q = nullptr);
// the single summands of E's middle group
std::vector<NamedInterval> e_term_middle_parts(const BVParams& params, Prec prec);
UBound e_term(const BVParams& params, const EvalContext& ctx);

struct BVResult {
    UBound total;
    std::vector<std::pair<std::string, UBound>> terms;
    std::vector<NamedInterval> enclosures;
    bool certified = false;
    SupCertificate C;
};

// C(A, A-3, Y0) at Y0 = bv_threshold(A)
SupCertificate bv_constant_C(double A, const EvalContext& ctx, Reading reading = Reading::reference);

BVResult bv_rhs(const BVParams& params, const EvalContext& ctx);
// same, reusing an already computed C(A, A-3, .)
BVResult bv_rhs(const BVParams& params, const EvalContext& ctx, const SupCertificate& C);

}  // namespace epnt
