#include "epnt/constants.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "epnt/zero_sums.hpp"

namespace epnt {

double BoundParams::threshold() const { return std::max(11.0 * std::log(10.0) / (alpha1 + alpha2 + 3.0), 2.0); }

void BoundParams::validate() const {
    require(alpha1 > 0.0 && alpha2 > 0.0, "alpha1 and alpha2 must be positive");
    require(std::isfinite(Y0) && Y0 >= threshold(), "Y0 must be >= max{11 log 10/(a1+a2+3), 2}");
}

const char* to_string(Domain d) { return d == Domain::loglog ? "loglog" : "raw"; }

Domain parse_domain(const std::string& s) {
    if (s == "loglog") return Domain::loglog;
    if (s == "raw") return Domain::raw;
    throw ConfigError("domain must be 'loglog' or 'raw'");
}

CTerms c_terms(const Interval& log_x, const Interval& T, const Interval& q, double alpha2, Reading reading) {
    Prec p = log_x.prec();
    const Interval& L = log_x;
    Interval x = exp(L);
    Interval rstar = r_star_parts({L, T, q}, reading).total();
    Interval La2 = exp(log(L) * alpha2);
    CTerms t{Interval(p), Interval(0.0, p), Interval(p)};
    if (reading == Reading::reference) {
        t.rstar_term = rstar * T / (x * sqr(L) * L);
        t.zero_sum = La2 * sigma0_rate_iv(L, T, q, Interval(kReferenceSigma0Rate, p));
        return t;
    }
    t.rstar_term = rstar * T / (x * sqr(L));
    t.small_gamma = sigma1_small_gamma_iv(L, q);
    Interval best(p);
    for (int i = 1; i <= 6; ++i) {
        Interval row(p);
        int row_J = -1;
        for (int J = 0; J <= 12; ++J) {
            SigmaParams sp{L, T, q, i, J};
            Interval v = sigma0_iv(sp) + sigma1_tail_iv(sp);
            if (row_J < 0) {
                row = v;
                row_J = J;
            } else {
                if (cmp(v.hi(), row.hi()) < 0) row_J = J;
                row = min(row, v);
            }
        }
        if (i == 1 || cmp(row.hi(), best.hi()) > 0) {
            t.best_i = i;
            t.best_J = row_J;
        }
        best = i == 1 ? row : max(best, row);
    }
    t.zero_sum = La2 * best;
    return t;
}

CTerms constant_C_terms(double Y, double alpha1, double alpha2, Prec prec, Reading reading) {
    auto in = TruncationInputs::from_loglog(Y, alpha1 + alpha2 + 3.0, alpha1, prec);
    return c_terms(in.log_x, in.T, in.q, alpha2, reading);
}

UBound constant_C_objective(double Y, double alpha1, double alpha2, Prec prec, Reading reading) {
    return UBound::from_interval(constant_C_terms(Y, alpha1, alpha2, prec, reading).total());
}

double constant_C_start(const BoundParams& params, Domain domain) {
    if (domain == Domain::loglog) return params.Y0;
    double raw = params.Y0 > 1.0 ? std::log(std::log(params.Y0)) : params.threshold();
    return std::max(raw, params.threshold());
}

namespace {

// objective with q at its maximum (log x)^{a1}; if the total is not
// nondecreasing along a q grid in [3, q_max], fall back to the max over it
UBound c_point(double Y, double a1, double a2, Prec prec, Reading reading, bool& q_ok) {
    auto in = TruncationInputs::from_loglog(Y, a1 + a2 + 3.0, a1, prec);
    Interval top = c_terms(in.log_x, in.T, in.q, a2, reading).total();
    double qm = in.q.mid();
    if (qm <= 3.0) return UBound::from_interval(top);
    const int n = 4;
    std::vector<Interval> vals;
    for (int k = 0; k < n; ++k) {
        Interval q(3.0 * std::pow(qm / 3.0, double(k) / n), prec);
        vals.push_back(c_terms(in.log_x, in.T, q, a2, reading).total());
    }
    vals.push_back(top);
    bool mono = true;
    for (size_t k = 1; k < vals.size(); ++k)
        if (cmp(vals[k - 1].hi(), vals[k].hi()) > 0) mono = false;
    if (mono) return UBound::from_interval(top);
    q_ok = false;
    UBound best = UBound::from_interval(top);
    for (int k = 0; k < 8; ++k) {
        Interval q(3.0 * std::pow(qm / 3.0, k / 8.0), prec);
        best = ub_max(best, UBound::from_interval(c_terms(in.log_x, in.T, q, a2, reading).total()));
    }
    return best;
}

}  // namespace

SupCertificate constant_C(const BoundParams& params, const EvalContext& ctx, Reading reading, Domain domain) {
    params.validate();
    bool q_ok = true;
    auto f = [&](double Y) { return c_point(Y, params.alpha1, params.alpha2, ctx.prec(), reading, q_ok); };
    SupCertificate cert = sup_scan(f, constant_C_start(params, domain), ctx);
    cert.q_monotone = q_ok;
    return cert;
}

Interval siegel_absorption_iv(double Y, double alpha1, double alpha2, Prec prec) {
    Interval y(Y, prec);
    Interval logL = y;
    Interval a1y = Interval(alpha1, prec) * y;
    Interval e = 100.0 * exp(logL * (1.0 - Interval(alpha1, prec) / 2.0)) / sqr(a1y);
    return 2.0 * exp(-e + logL * alpha2);
}

UBound siegel_absorption(double Y, double alpha1, double alpha2, Prec prec) {
    return UBound::from_interval(siegel_absorption_iv(Y, alpha1, alpha2, prec));
}

SupCertificate constant_C1(const BoundParams& params, const EvalContext& ctx, Reading reading, Domain domain) {
    params.validate();
    require(params.alpha1 < 2.0, "C1 needs alpha1 < 2");
    SupCertificate c = constant_C(params, ctx, reading, domain);
    auto f = [&](double Y) { return siegel_absorption(Y, params.alpha1, params.alpha2, ctx.prec()); };
    SupCertificate s = sup_scan(f, constant_C_start(params, domain), ctx);
    s.value = ub_add(s.value, c.value);
    s.tail_certified = s.tail_certified && c.tail_certified;
    s.q_monotone = c.q_monotone;
    return s;
}

}  // namespace epnt
