#pragma once

#include "epnt/rigor.hpp"
#include "epnt/truncation.hpp"

namespace epnt {

struct BoundParams {
    double alpha1 = 1.0;
    double alpha2 = 1.0;
    double Y0 = 7.0;

    // max{11 log 10/(a1+a2+3), 2}
    double threshold() const;
    void validate() const;
};

// loglog: the outer max runs over log log x >= Y0
// raw:    over x >= Y0 literally, clipped to where the objective is defined
enum class Domain { loglog, raw };

const char* to_string(Domain d);
Domain parse_domain(const std::string& s);

// Sigma0 decay rate of the reference reading (= 10 nu_12).
constexpr double kReferenceSigma0Rate = 4.75;

struct CTerms {
    Interval rstar_term;
    Interval small_gamma;  // zero in the reference reading
    Interval zero_sum;
    int best_i = 0;        // 0 when the reading has no (i, J) optimisation
    int best_J = 0;

    Interval total() const { return rstar_term + small_gamma + zero_sum; }
};

// The summands of the C objective at log x = L, truncation height T and
// modulus q.
CTerms c_terms(const Interval& log_x, const Interval& T, const Interval& q, double alpha2,
               Reading reading = Reading::reference);

// Objective at log log x = Y with q = (log x)^{a1}; no q scan.
CTerms constant_C_terms(double Y, double alpha1, double alpha2, Prec prec,
                        Reading reading = Reading::reference);
UBound constant_C_objective(double Y, double alpha1, double alpha2, Prec prec,
                            Reading reading = Reading::reference);

// First Y at which the scan starts for the given domain reading.
double constant_C_start(const BoundParams& params, Domain domain);

SupCertificate constant_C(const BoundParams& params, const EvalContext& ctx,
                          Reading reading = Reading::reference, Domain domain = Domain::loglog);

// 2 exp(-100 L^{1-a1/2}/(a1 Y)^2) L^{a2}, L = e^Y
Interval siegel_absorption_iv(double Y, double alpha1, double alpha2, Prec prec);
UBound siegel_absorption(double Y, double alpha1, double alpha2, Prec prec);

// C1 = sup of the Siegel term over Y >= Y0, plus C at Y0. The returned
// certificate carries the Siegel scan's grid and probes; its value is the
// sum and it is tail-certified only if both scans are.
SupCertificate constant_C1(const BoundParams& params, const EvalContext& ctx,
                           Reading reading = Reading::reference, Domain domain = Domain::loglog);

}  // namespace epnt
