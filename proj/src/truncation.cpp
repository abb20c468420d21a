#include "epnt/truncation.hpp"

#include <cmath>

#include "epnt/chebyshev.hpp"
#include "epnt/zero_data.hpp"

namespace epnt {

namespace {

Interval dec(const char* s, Prec p) { return Interval::decimal(s, p); }

// log(q (T + d)) for d in {-1, 0, 1}, without forming T + d when T is huge
Interval log_q_shift(const Interval& q, const Interval& T, double d) {
    Interval l = log(q) + log(T);
    if (d != 0.0) l = l + log1p(d / T);
    return l;
}

}  // namespace

const char* to_string(Reading r) { return r == Reading::reference ? "reference" : "verbatim"; }

Reading parse_reading(const std::string& s) {
    if (s == "reference") return Reading::reference;
    if (s == "verbatim") return Reading::verbatim;
    throw ConfigError("reading must be 'reference' or 'verbatim'");
}

void TruncationInputs::validate() const {
    Prec p = log_x.prec();
    require(!certainly_lt(log_x, log(Interval(1126.0, p))), "truncation needs x >= 1126");
    require(!certainly_lt(T * 7.0, Interval(12.0, p)), "truncation needs T >= 5/7 + 1");
    require(mpfr_cmp_si(q.lo().get(), 1) > 0, "truncation needs q > 1");
}

TruncationInputs TruncationInputs::from_loglog(double Y, double alpha_T, double alpha_q, Prec prec) {
    Interval y(Y, prec);
    Interval L = exp(y);
    return {L, exp(y * alpha_T), exp(y * alpha_q)};
}

Interval r4_iv(const Interval& T, const Interval& q) {
    Prec p = T.prec();
    require(!certainly_lt(T * 7.0, Interval(12.0, p)), "r4 needs T >= 5/7 + 1");
    require(mpfr_cmp_si(q.lo().get(), 1) > 0, "r4 needs q > 1");
    Interval pi = const_pi(p);
    Interval c = log(2.0 * pi) + 1.0;  // log(2 pi e)
    Interval inv = 1.0 / T;
    // (T+1) log(q(T+1)/2pi e) - (T-1) log(q(T-1)/2pi e), rearranged so that
    // nothing of size T log T cancels
    Interval diff = 2.0 * (log_q_shift(q, T, 0.0) - c) + (T + 1.0) * log1p(inv) -
                    (T - 1.0) * log1p(-inv);
    return diff / pi + r1_from_log(log_q_shift(q, T, 1.0)) + r1_from_log(log_q_shift(q, T, -1.0));
}

UBound r4(double T, double q, const EvalContext& ctx) {
    return UBound::from_interval(r4_iv(Interval(T, ctx.prec()), Interval(q, ctx.prec())));
}

Interval r5_iv(const Interval& x, const Interval& sigma, const Interval& q) {
    Prec p = x.prec();
    require(x.lo().sign() > 0, "r5 needs x > 0");
    Interval x2 = sqr(x);
    Interval inner = 1.75 * log(q * x) + 1.0 / (2.5 + x2) + 1.0 / (x * sqrt(2.25 + x2)) +
                     const_pi(p) / (4.0 * x) + dec("3.31", p);
    return (2.0 - sigma) * inner + dec("0.62", p);
}

UBound r5(double x, double sigma, double q, const EvalContext& ctx) {
    Prec p = ctx.prec();
    return UBound::from_interval(r5_iv(Interval(x, p), Interval(sigma, p), Interval(q, p)));
}

Interval r6_iv(const Interval& x) {
    Prec p = x.prec();
    Interval x2 = sqr(x);
    return 1.75 * log(2.0 + abs(x)) + 1.0 / (2.5 + x2) + dec("2.43", p) +
           1.0 / sqrt((4.0 + x2) * (0.25 + x2)) + dec("0.62", p);
}

UBound r6(double x, const EvalContext& ctx) { return UBound::from_interval(r6_iv(Interval(x, ctx.prec()))); }

Interval r5_max_bound_iv(const Interval& T, const Interval& q) {
    Prec p = T.prec();
    Interval tm = T - 1.0;
    Interval inner = 1.75 * log_q_shift(q, T, 1.0) + 1.0 / (2.5 + sqr(tm)) +
                     1.0 / (tm * sqrt(2.25 + sqr(tm))) + const_pi(p) / (4.0 * tm) + dec("3.31", p);
    return 2.5 * inner + dec("0.62", p);
}

Interval r6_max_bound_iv(const Interval& T) {
    Prec p = T.prec();
    Interval inner = 1.75 * log(2.0 * T + 3.0) + 1.0 / Interval(2.5, p) + dec("2.43", p) +
                     1.0 / sqrt(Interval(4.0 * 0.25, p));
    return 2.5 * inner + dec("0.62", p);
}

Interval RStarParts::total() const {
    return log_q_over_log2 + R2 + R3 + log2 + R5 + R7 + R8 + log_x + r4_term + R11;
}

RStarParts r_star_parts(const TruncationInputs& in, Reading reading) {
    in.validate();
    Prec p = in.log_x.prec();
    const Interval& L = in.log_x;
    const Interval& T = in.T;
    const Interval& q = in.q;
    Interval pi = const_pi(p);
    Interval ln2 = const_log2(p);
    Interval gamma = const_euler(p);
    Interval x = exp(L);
    Interval invL = 1.0 / L;
    Interval b = 1.0 + invL;
    Interval zeta_b = L - gamma + dec("0.1877", p) * invL;  // = -zeta'/zeta bound at b

    RStarParts r{Interval(p), Interval(p), Interval(p), Interval(p), Interval(p),
                 Interval(p), Interval(p), Interval(p), Interval(p), Interval(p)};
    Interval logq = log(q);
    r.log_q_over_log2 = logq / ln2;
    r.log2 = ln2;
    r.log_x = L;

    r.R2 = perron_remainder_iv({L, invL, T}, zeta_b, lambda_tail_bound_iv(x, b));

    Interval P = reading == Reading::reference ? Interval(kPerronPoint, p) : x;
    Interval logP = reading == Reading::reference ? log(P) : L;
    r.R3 = (zeta_b + exp((1.0 + invL) * ln2) * (P * logP + 1.5 * P - 0.5) * logP +
            P * (logP + ln2 + 2.0) * (ln2 + logP)) /
           (pi * T * ln2);

    Interval log_xp = L + log1p(0.5 / x);
    r.R5 = zeta_b * (T + 1.0) * exp(log_xp / L) / (2.0 * pi);

    Interval Tp1 = T + 1.0, Tm1 = T - 1.0;
    Interval r4p = r4_iv(Tp1, q);
    Interval lead = 1.5 + invL;
    r.R7 = lead * (const_e(p) * x + exp((1.0 + invL) * log(Interval(2.5, p)))) / (2.0 * pi * Tm1) *
           (r4p * (r4p + 1.0) + r5_max_bound_iv(T, q));
    r.R8 = (1.0 / sqrt(x) + 1.0 / sqrt(Interval(2.5, p))) * lead / (2.0 * pi * Tm1) *
           (2.0 * r4p + r6_max_bound_iv(T));

    r.r4_term = x / Tm1 * r4_iv(T, q);

    Interval sx = sqrt(x);
    Interval one(1.0, p);
    Interval logT = log(T);
    r.R11 = (sx + 2.0) * sqrt(q) * sqr(logq) / 100.0 +
            (sx + 1.0) * (R0(p) * r1_from_log(logq) * logq + r1_from_log(log_q_shift(q, T, 1.0)) / Tp1 +
                          logT / pi * (logq + 0.5 * logT - log(2.0 * pi) - 1.0) +
                          r1_from_log(logq + logT));
    return r;
}

BigRTerms big_r_terms(const TruncationInputs& in, Reading reading) {
    RStarParts r = r_star_parts(in, reading);
    return {UBound::from_interval(r.R2), UBound::from_interval(r.R3), UBound::from_interval(r.R5),
            UBound::from_interval(r.R7), UBound::from_interval(r.R8), UBound::from_interval(r.R11)};
}

UBound r_star(const TruncationInputs& in, Reading reading) {
    return UBound::from_interval(r_star_parts(in, reading).total());
}

std::string r_star_q_scan(const Interval& log_x, const Interval& T, const Interval& q_max,
                          Reading reading) {
    Prec p = log_x.prec();
    double qm = q_max.mid();
    if (qm <= 3.0) return {};
    const int n = 4;
    RStarParts prev = r_star_parts({log_x, T, Interval(3.0, p)}, reading);
    for (int k = 1; k <= n; ++k) {
        Interval q = k == n ? q_max : Interval(3.0 * std::pow(qm / 3.0, double(k) / n), p);
        RStarParts cur = r_star_parts({log_x, T, q}, reading);
        struct {
            const char* name;
            const Interval* a;
            const Interval* b;
        } terms[] = {{"log q/log 2", &prev.log_q_over_log2, &cur.log_q_over_log2},
                     {"R7", &prev.R7, &cur.R7},
                     {"R8", &prev.R8, &cur.R8},
                     {"x r4/(T-1)", &prev.r4_term, &cur.r4_term},
                     {"R11", &prev.R11, &cur.R11}};
        for (auto& t : terms)
            if (cmp(t.a->hi(), t.b->hi()) > 0) return t.name;
        prev = std::move(cur);
    }
    return {};
}

namespace {

// R* T / (x log x loglog x) at q = (log x)^{a1}, with the q-grid fallback
UBound r_factor_point(double Y, double alpha1, double alpha2, Prec prec, Reading reading, bool* q_ok) {
    auto in = TruncationInputs::from_loglog(Y, alpha1 + alpha2 + 3.0, alpha1, prec);
    Interval scale = in.T / (exp(in.log_x) * in.log_x * Interval(Y, prec));
    std::string bad = q_ok ? r_star_q_scan(in.log_x, in.T, in.q, reading) : std::string();
    if (bad.empty()) return UBound::from_interval(r_star_parts(in, reading).total() * scale);
    *q_ok = false;
    UBound best(prec);
    double qm = in.q.mid();
    for (int k = 0; k <= 8; ++k) {
        Interval q = k == 8 ? in.q : Interval(3.0 * std::pow(qm / 3.0, k / 8.0), prec);
        best = ub_max(best, UBound::from_interval(r_star_parts({in.log_x, in.T, q}, reading).total() * scale));
    }
    return best;
}

}  // namespace

UBound r_factor_objective(double Y, double alpha1, double alpha2, Prec prec, Reading reading) {
    return r_factor_point(Y, alpha1, alpha2, prec, reading, nullptr);
}

SupCertificate r_factor(double C, double alpha1, double alpha2, const EvalContext& ctx, Reading reading) {
    require(C >= 2.0, "r_factor needs C >= 2");
    require(alpha1 > 0.0 && alpha2 > 0.0, "r_factor needs alpha1, alpha2 > 0");
    bool q_ok = true;
    auto f = [&](double Y) { return r_factor_point(Y, alpha1, alpha2, ctx.prec(), reading, &q_ok); };
    SupCertificate cert = sup_scan(f, C, ctx);
    cert.q_monotone = q_ok;
    return cert;
}

}  // namespace epnt
