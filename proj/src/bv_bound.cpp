#include "epnt/bv_bound.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <utility>

#include "epnt/constants.hpp"
#include "epnt/sieve.hpp"
#include "epnt/zero_data.hpp"

namespace epnt {

double bv_threshold(double A) { return std::max(7.0, 11.0 * std::log(10.0) / (2.0 * A)); }

void BVParams::validate() const {
    require(A > 3.0, "bv bound needs A > 3");
    require(std::isfinite(Y) && Y >= bv_threshold(A), "bv bound needs log log x >= max{7, 11 log 10/(2A)}");
    Prec p = log_Q1.prec();
    require(log_Q1.lo().sign() >= 0, "bv bound needs Q1 >= 1");
    Interval cap = Interval(A, p) * Interval(Y, p);
    require(!certainly_lt(cap, log_Q1), "bv bound needs Q1 <= (log x)^A");
}

BVParams BVParams::from_exponent(double Y, double A, double Q1_exp, Prec prec) {
    return {Y, A, Interval(Q1_exp, prec) * Interval(Y, prec)};
}

Interval psi113_iv(Prec prec) {
    static const LambdaTable table = sieve_lambda(113);
    Interval s(0.0, prec);
    for (const auto& e : table.entries()) s = s + log(Interval(double(e.p), prec));
    return s;
}

Interval c0_iv(Prec p) {
    Interval ln2 = const_log2(p);
    Interval num = exp(ln2 * 6.5) * (2.0 + log(ln2 / log(Interval(4.0, p) / 3.0)));
    Interval den = 9.0 * const_pi(p) * sqr(ln2);
    return num / den * (1.0 / Interval(3.0, p) + 3.0 / (2.0 * ln2)) * sqrt(psi113_iv(p) / 113.0);
}

UBound c0(const EvalContext& ctx) { return UBound::from_interval(c0_iv(ctx.prec())); }

Interval c1_iv(Prec prec, std::uint64_t P) {
    require(P >= 2 && P <= kMaxSieveLimit, "c1 needs 2 <= P <= 10^9");
    static std::mutex mu;
    static std::map<std::pair<Prec, std::uint64_t>, Interval> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(prec, P);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    LambdaTable table = sieve_lambda(P);
    Interval prod(1.0, prec);
    for (const auto& e : table.entries()) {
        if (e.k != 1) continue;
        double pp = double(e.p);
        // p(p-1) overflows the double mantissa past p ~ 9.5e7
        prod = prod * (1.0 + 1.0 / (Interval(pp, prec) * (pp - 1.0)));
    }
    // sum_{n > P} 1/(n(n-1)) = 1/P bounds the log of the tail product
    Interval upper = prod * exp(1.0 / Interval(double(P), prec));
    Interval r(prod.lo(), upper.hi());
    cache.emplace(key, r);
    return r;
}

UBound c1(const EvalContext& ctx) { return UBound::from_interval(c1_iv(ctx.prec())); }

namespace {

struct BVFrame {
    Interval L, logL, x, sx, c0, c1, A;
};

BVFrame frame(const BVParams& params, Prec p) {
    Interval y(params.Y, p);
    Interval L = exp(y);
    Interval x = exp(L);
    return {L, y, x, sqrt(x), c0_iv(p), c1_iv(p), Interval(params.A, p)};
}

// L^e for real e
Interval Lpow(const BVFrame& f, const Interval& e) { return exp(f.logL * e); }

// x^e, computed as exp(e L) so no huge power is formed twice
Interval xpow(const BVFrame& f, const Interval& e) { return exp(e * f.L); }

}  // namespace

std::vector<NamedInterval> e_term_middle_parts(const BVParams& params, Prec p) {
    params.validate();
    BVFrame f = frame(params, p);
    Interval d = 1.0 / (2.0 * f.A * R1(p) * f.logL);
    Interval exceptional = xpow(f, 1.0 - d) / (1.0 - d);
    Interval pnt = 34.0 * f.x * Lpow(f, Interval::decimal("1.52", p)) *
                   exp(-(Interval::decimal("0.81", p) * sqrt(f.L)));
    return {{"exceptional", exceptional}, {"pnt", pnt}, {"log_q", params.log_Q1 / const_log2(p)}};
}

std::vector<NamedInterval> e_term_parts(const BVParams& params, Prec p, const Interval* log_q) {
    params.validate();
    BVFrame f = frame(params, p);
    Interval first = sqr(f.L + f.A * f.logL) * f.sx / (4.0 * Lpow(f, f.A - 2.0));

    auto mid = e_term_middle_parts(params, p);
    Interval lq = log_q ? *log_q / const_log2(p) : mid[2].value;
    Interval second = sqr(f.c1) * (1.0 + f.A * f.logL) * f.L / 2.0 * (mid[0].value + mid[1].value + lq);

    Interval x56 = xpow(f, Interval(5.0, p) / 6.0);
    Interval inner = 4.0 * f.sx * Lpow(f, f.A) + 18.0 * xpow(f, Interval(11.0, p) / 12.0) / Lpow(f, f.A / 2.0) +
                     5.0 * x56 + 2.5 * x56 * f.L;
    Interval third = f.c0 * f.c1 * Lpow(f, Interval(4.5, p)) / 2.0 * inner;
    return {{"E_sqrt", first}, {"E_exceptional", second}, {"E_large_sieve", third}};
}

UBound e_term(const BVParams& params, const EvalContext& ctx) {
    auto parts = e_term_parts(params, ctx.prec());
    return UBound::from_interval(parts[0].value + parts[1].value + parts[2].value);
}

SupCertificate bv_constant_C(double A, const EvalContext& ctx, Reading reading) {
    require(A > 3.0, "bv bound needs A > 3");
    return constant_C({A, A - 3.0, bv_threshold(A)}, ctx, reading);
}

BVResult bv_rhs(const BVParams& params, const EvalContext& ctx) {
    params.validate();
    return bv_rhs(params, ctx, bv_constant_C(params.A, ctx));
}

BVResult bv_rhs(const BVParams& params, const EvalContext& ctx, const SupCertificate& C) {
    params.validate();
    Prec p = ctx.prec();
    BVFrame f = frame(params, p);
    Interval C_iv(Real(0.0, p), C.value.as_interval().hi());

    BVResult r;
    r.C = C;
    r.certified = C.tail_certified;
    auto& e = r.enclosures;
    e.push_back({"sqrt_x", f.sx});
    e.push_back({"small_moduli", 2.0 * f.c1 * f.c0 * f.x / Lpow(f, f.A - 4.5)});
    e.push_back({"large_moduli", 2.0 * f.c1 * f.c0 * f.x * Lpow(f, Interval(4.5, p)) / exp(params.log_Q1)});
    e.push_back({"zero_sum", sqr(f.c1) * f.x * C_iv * (1.0 + f.A * f.logL) * f.L / (2.0 * Lpow(f, f.A - 4.0))});
    for (auto& part : e_term_parts(params, p)) e.push_back(part);

    Interval total(0.0, p);
    for (const auto& t : e) {
        total = total + t.value;
        r.terms.emplace_back(t.name, UBound::from_interval(t.value));
    }
    r.total = UBound::from_interval(total);
    return r;
}

}  // namespace epnt
