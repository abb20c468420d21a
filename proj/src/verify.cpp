#include "epnt/verify.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <cfloat>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "epnt/bv_bound.hpp"
#include "epnt/characters.hpp"
#include "epnt/chebyshev.hpp"
#include "epnt/constants.hpp"
#include "epnt/reference_tables.hpp"
#include "epnt/truncation.hpp"
#include "epnt/zero_data.hpp"
#include "epnt/zero_sums.hpp"

namespace epnt {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
        case CheckStatus::info: return "info";
    }
    return "?";
}

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void fail(CheckResult& r, const std::string& what) {
    if (r.status != CheckStatus::fail) r.detail = what;
    r.status = CheckStatus::fail;
}

double uniform(std::mt19937_64& rng, double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(rng);
}

std::uint64_t uniform_int(std::mt19937_64& rng, std::uint64_t a, std::uint64_t b) {
    return std::uniform_int_distribution<std::uint64_t>(a, b)(rng);
}

}  // namespace

CheckResult check_r2_window(const LambdaTable& table, const VerifyOptions& opt) {
    CheckResult r{"r2_window"};
    auto t_max = static_cast<std::uint64_t>(table.limit());
    if (t_max < 1126) {
        r.status = CheckStatus::skipped;
        r.detail = "no t >= 1126 below the sieve limit";
        return r;
    }
    Prec p = opt.precision_bits;
    for (std::uint64_t t = 1126; t <= t_max; ++t) {
        double td = double(t);
        double lhs = psi(td - 0.5, table) - psi(td / 2.0, table);
        double rhs = r2_iv(Interval(td, p)).lower();
        ++r.checked;
        if (!(lhs <= rhs)) fail(r, "t=" + std::to_string(t) + " lhs=" + fmt(lhs) + " r2=" + fmt(rhs));
    }
    return r;
}

CheckResult check_goldston_left(const LambdaTable& table, const VerifyOptions& opt, LeftRange range) {
    CheckResult r{range == LeftRange::lemma ? "goldston_left" : "goldston_left_perron_range"};
    double x_max = std::min(opt.goldston_x_max, double(table.limit()) / 2.0);
    if (x_max < 3.0) {
        r.status = CheckStatus::skipped;
        r.detail = "sieve limit below 6";
        return r;
    }
    Prec p = opt.precision_bits;
    double worst = 0.0;
    for (long k = 0;; ++k) {
        double x = 3.0 + opt.goldston_step * double(k);
        if (x > x_max) break;
        double lhs = goldston_sum_left(x, table, range);
        double rhs = r3_iv(Interval(x, p)).lower();
        ++r.checked;
        worst = std::max(worst, lhs / rhs);
        if (!(lhs <= rhs)) fail(r, "x=" + fmt(x) + " sum=" + fmt(lhs) + " r3=" + fmt(rhs));
    }
    if (r.status == CheckStatus::pass) r.detail = "max sum/r3 = " + fmt(worst);
    // the Perron-range variant is reported, never counted
    if (range == LeftRange::perron) r.status = CheckStatus::info;
    return r;
}

CheckResult check_goldston_right(const LambdaTable& table, const VerifyOptions& opt) {
    CheckResult r{"goldston_right"};
    double x_max = std::min(opt.goldston_x_max, double(table.limit()) / 2.0);
    if (x_max < 3.0) {
        r.status = CheckStatus::skipped;
        r.detail = "sieve limit below 6";
        return r;
    }
    Prec p = opt.precision_bits;
    double worst = 0.0;
    for (long k = 0;; ++k) {
        double x = 3.0 + opt.goldston_step * double(k);
        if (x > x_max) break;
        double lhs = goldston_sum_right(x, table);
        double rhs = 2.0 * r3_iv(Interval(x, p)).lower();
        ++r.checked;
        worst = std::max(worst, lhs / rhs);
        if (!(lhs <= rhs)) fail(r, "x=" + fmt(x) + " sum=" + fmt(lhs) + " 2 r3=" + fmt(rhs));
    }
    if (r.status == CheckStatus::pass) r.detail = "max sum/(2 r3) = " + fmt(worst);
    return r;
}

CheckResult check_prime_window(const LambdaTable& table, const VerifyOptions& opt) {
    CheckResult r{"prime_window"};
    double lim = double(table.limit());
    if (lim < 3.0) {
        r.status = CheckStatus::skipped;
        r.detail = "sieve limit below 3";
        return r;
    }
    std::mt19937_64 rng(opt.seed);
    Prec p = opt.precision_bits;
    for (int s = 0; s < opt.window_samples; ++s) {
        double x = uniform(rng, 2.0, lim);
        double y = std::exp(uniform(rng, 0.0, 1.0) * std::log(x));
        if (!(y > 1.0)) y = std::nextafter(1.0, 2.0);
        if (y > x) y = x;
        std::uint64_t count = prime_count_window(x, y, table);
        Interval yi(y, p);
        double rhs = (2.0 * yi / log(yi)).lower();
        ++r.checked;
        if (!(double(count) <= rhs))
            fail(r, "x=" + fmt(x) + " y=" + fmt(y) + " count=" + std::to_string(count) + " bound=" + fmt(rhs));
    }
    return r;
}

CheckResult check_orthogonality(const VerifyOptions& opt) {
    CheckResult r{"orthogonality"};
    for (std::uint64_t q = 1; q <= opt.orthogonality_q_max; ++q) {
        auto rep = orthogonality_check(CharTable(q));
        r.checked += rep.pairs;
        if (rep.failures)
            fail(r, "q=" + std::to_string(q) + " pair (" + std::to_string(rep.first_failure.first) + ", " +
                        std::to_string(rep.first_failure.second) + ")");
    }
    return r;
}

CheckResult check_partition(const LambdaTable& table, const VerifyOptions& opt) {
    CheckResult r{"partition_identity"};
    double lim = double(table.limit());
    if (lim < 10.0) {
        r.status = CheckStatus::skipped;
        r.detail = "sieve limit below 10";
        return r;
    }
    std::mt19937_64 rng(opt.seed + 1);
    for (int s = 0; s < opt.partition_samples; ++s) {
        double x = uniform(rng, 2.0, lim);
        std::uint64_t q = uniform_int(rng, 1, 200);
        KahanSum sum;
        for (std::uint64_t a = 0; a < q; ++a) sum.add(psi_progression(x, q, std::int64_t(a), table));
        double whole = psi(x, table);
        // each compensated sum is within a few ulps of its value
        double slack = 8.0 * DBL_EPSILON * double(q + 2) * std::max(whole, 1.0);
        ++r.checked;
        if (!(std::fabs(sum.value() - whole) <= slack))
            fail(r, "x=" + fmt(x) + " q=" + std::to_string(q) + " sum=" + fmt(sum.value()) + " psi=" + fmt(whole));
    }
    return r;
}

CheckResult check_inversion(const LambdaTable& table, const VerifyOptions& opt) {
    CheckResult r{"inversion_identity"};
    double lim = double(table.limit());
    if (lim < 10.0) {
        r.status = CheckStatus::skipped;
        r.detail = "sieve limit below 10";
        return r;
    }
    std::mt19937_64 rng(opt.seed + 2);
    for (int s = 0; s < opt.inversion_samples; ++s) {
        double x = uniform(rng, 2.0, lim);
        std::uint64_t q = uniform_int(rng, 1, 60);
        std::uint64_t a;
        do a = uniform_int(rng, 0, q - 1);
        while (std::gcd(a, q) != 1);
        CharTable chars(q);
        std::complex<double> acc = 0.0;
        for (std::size_t c = 0; c < chars.size(); ++c)
            acc += psi_chi(x, chars, c, table) * std::conj(chars.complex_value(c, a));
        double phi = double(euler_phi(q));
        double target = phi * psi_progression(x, q, std::int64_t(a), table);
        double whole = psi(x, table);
        // character values carry a few ulps each, every psi(x, chi) is a
        // compensated sum of magnitude <= psi(x)
        double slack = 16.0 * DBL_EPSILON * phi * std::max(whole, 1.0);
        ++r.checked;
        if (!(std::abs(acc - target) <= slack))
            fail(r, "x=" + fmt(x) + " q=" + std::to_string(q) + " a=" + std::to_string(a) +
                        " lhs=" + fmt(acc.real()) + "+" + fmt(acc.imag()) + "i rhs=" + fmt(target));
    }
    return r;
}

namespace {

// One randomly drawn pipeline evaluation, reproducible from its kind and
// the drawn parameters.
struct PipelineDraw {
    int kind;
    double a, b, c, d;
    int i, J;
};

PipelineDraw draw(std::mt19937_64& rng) {
    PipelineDraw w{};
    w.kind = int(uniform_int(rng, 0, 9));
    w.a = uniform(rng, 0.0, 1.0);
    w.b = uniform(rng, 0.0, 1.0);
    w.c = uniform(rng, 0.0, 1.0);
    w.d = uniform(rng, 0.0, 1.0);
    w.i = int(uniform_int(rng, 1, 6));
    w.J = int(uniform_int(rng, 0, 12));
    return w;
}

std::string describe(const PipelineDraw& w) {
    static const char* names[] = {"r_factor", "C_reference", "sigma0", "mu",  "r2",
                                  "r3",       "e_term",      "siegel", "sigma1_tail", "C_verbatim"};
    return std::string(names[w.kind]) + "(" + fmt(w.a) + ", " + fmt(w.b) + ", " + fmt(w.c) + ", " + fmt(w.d) +
           ", i=" + std::to_string(w.i) + ", J=" + std::to_string(w.J) + ")";
}

UBound evaluate(const PipelineDraw& w, Prec p) {
    double a1 = 1.0 + std::floor(w.b * 7.0);
    double a2 = 1.0 + std::floor(w.c * 9.0);
    switch (w.kind) {
        case 0: return r_factor_objective(3.4 + 3.0 * w.a, a1, a2, p);
        case 1:
        case 9: {
            BoundParams bp{a1, a2, 0.0};
            double Y = bp.threshold() + 0.5 + 3.0 * w.a;
            return constant_C_objective(Y, a1, a2, p, w.kind == 1 ? Reading::reference : Reading::verbatim);
        }
        case 2:
        case 3:
        case 8: {
            double Y = 5.1 + 3.0 * w.a;
            Interval L = exp(Interval(Y, p));
            Interval T = exp(Interval(Y, p) * (5.0 + w.c * 5.0));
            Interval q = exp(Interval(Y, p) * (0.5 + w.b * 3.0));
            SigmaParams sp{L, T, q, w.i, w.J};
            if (w.kind == 2) return sigma0_bound(sp);
            if (w.kind == 8) return sigma1_tail(sp);
            Interval lam = Interval::decimal("0.16", p) + 0.32 * Interval(w.d, p);
            return mu(lam, L, T, q, MuRegion::large_gamma);
        }
        case 4: return UBound::from_interval(r2_iv(Interval(1126.0 + w.a * 1e9, p)));
        case 5: return UBound::from_interval(r3_iv(Interval(3.0 + w.a * 1e9, p)));
        case 6: {
            double A = 3.5 + 4.5 * w.b;
            double Y = bv_threshold(A) + 2.0 * w.a;
            auto parts = e_term_parts(BVParams::from_exponent(Y, A, A * w.c, p), p);
            return UBound::from_interval(parts[0].value + parts[1].value + parts[2].value);
        }
        default: return siegel_absorption(2.0 + 10.0 * w.a, 0.2 + 1.7 * w.b, a2, p);
    }
}

}  // namespace

CheckResult check_precision_monotonicity(const VerifyOptions& opt) {
    CheckResult r{"precision_monotonicity"};
    std::mt19937_64 rng(opt.seed + 3);
    Prec p = opt.precision_bits;
    for (int s = 0; s < opt.monotonicity_samples; ++s) {
        PipelineDraw w = draw(rng);
        UBound lo = evaluate(w, p);
        UBound hi = evaluate(w, 2 * p);
        ++r.checked;
        if (!(hi <= lo))
            fail(r, describe(w) + ": log bound " + hi.log_value().str() + " at 2p exceeds " + lo.log_value().str());
    }
    return r;
}

CheckResult check_rational_soundness(const VerifyOptions& opt) {
    CheckResult r{"rational_soundness"};
    std::mt19937_64 rng(opt.seed + 4);
    mpq_t qa, qb, qr;
    mpq_inits(qa, qb, qr, nullptr);
    auto inside = [&](const Interval& v) {
        return mpfr_cmp_q(v.lo().get(), qr) <= 0 && mpfr_cmp_q(v.hi().get(), qr) >= 0;
    };
    for (int s = 0; s < 2000; ++s) {
        double a = std::ldexp(uniform(rng, -1.0, 1.0), int(uniform_int(rng, 0, 120)) - 60);
        double b = std::ldexp(uniform(rng, -1.0, 1.0), int(uniform_int(rng, 0, 120)) - 60);
        if (b == 0.0) continue;
        Interval A(a, 53), B(b, 53);
        mpq_set_d(qa, a);
        mpq_set_d(qb, b);
        mpq_add(qr, qa, qb);
        bool ok = inside(A + B);
        mpq_sub(qr, qa, qb);
        ok = ok && inside(A - B);
        mpq_mul(qr, qa, qb);
        ok = ok && inside(A * B);
        mpq_div(qr, qa, qb);
        ok = ok && inside(A / B);
        r.checked += 4;
        if (!ok) fail(r, "a=" + fmt(a) + " b=" + fmt(b));
    }
    // decimal literals against their exact rational values
    const char* decs[] = {"6.3970", "2.0452", "0.1877", "0.98", "1.52", "0.81", "0.247", "6.894"};
    for (const char* d : decs) {
        std::string s(d);
        auto dot = s.find('.');
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::string text = digits + "/1" + std::string(s.size() - dot - 1, '0');
        mpq_set_str(qr, text.c_str(), 10);
        mpq_canonicalize(qr);
        ++r.checked;
        if (!inside(Interval::decimal(d, 53))) fail(r, std::string("decimal ") + d);
    }
    mpq_clears(qa, qb, qr, nullptr);
    return r;
}

CheckResult check_mu_crossover(const VerifyOptions& opt) {
    CheckResult r{"mu_crossover"};
    std::mt19937_64 rng(opt.seed + 5);
    Prec p = opt.precision_bits;
    for (int s = 0; s < 50; ++s) {
        Interval lam = Interval::decimal("0.16", p) + 0.32 * Interval(uniform(rng, 0.0, 1.0), p);
        Interval q = exp(Interval(uniform(rng, 1.1, 14.0), p));
        Interval T = exp(Interval(uniform(rng, 26.0, 90.0), p));
        Interval lqT = log(q * T);
        Interval r0 = R0(p);
        // the point where exp sqrt(log x/R0) = (qT)^{1/(R0 lambda)}
        Interval L = r0 * sqr(lqT / (r0 * lam));
        Interval b2 = mu_branch2_iv(L, q);
        Interval b3 = mu_branch3_iv(lam, L, T, q);
        Interval both = mu_iv(lam, L, T, q, MuRegion::large_gamma);
        double rel = std::fabs(b2.mid() - b3.mid()) / b2.mid();
        ++r.checked;
        bool ok = rel <= std::ldexp(1.0, -int(p) / 2) && cmp(both.hi(), b2.lo()) >= 0 && cmp(both.hi(), b3.lo()) >= 0;
        if (!ok) fail(r, "lambda=" + fmt(lam.mid()) + " q=" + fmt(q.mid()) + " T=" + fmt(T.mid()) + " rel=" + fmt(rel));
    }
    return r;
}

CheckResult check_C_monotone_in_Y0(const VerifyOptions& opt) {
    CheckResult r{"C_monotone_in_Y0"};
    EvalContext ctx;
    ctx.precision_bits = opt.precision_bits;
    auto rows = reference_rows(TableKind::c);
    std::size_t stride = std::max<std::size_t>(1, rows.size() / 10);
    for (std::size_t k = 0; k < rows.size() && r.checked < 10; k += stride) {
        const auto& row = rows[k];
        BoundParams lo{row.alpha1, row.alpha2, row.param};
        BoundParams hi{row.alpha1, row.alpha2, row.param + 0.1};
        UBound a = constant_C(lo, ctx).value;
        UBound b = constant_C(hi, ctx).value;
        ++r.checked;
        if (!(b <= a))
            fail(r, "(" + fmt(row.alpha1) + ", " + fmt(row.alpha2) + ", " + fmt(row.param) + "): C(Y0+0.1)=" +
                        fmt(b.value()) + " > C(Y0)=" + fmt(a.value()));
    }
    return r;
}

CheckResult check_bv_term_sum(const VerifyOptions& opt) {
    CheckResult r{"bv_term_sum"};
    EvalContext ctx;
    ctx.precision_bits = opt.precision_bits;
    Prec p = ctx.prec();
    std::mt19937_64 rng(opt.seed + 6);
    const double As[] = {3.5, 4.0, 5.0, 6.0, 8.0};
    std::map<double, SupCertificate> Cs;
    for (int s = 0; s < opt.bv_samples; ++s) {
        double A = As[uniform_int(rng, 0, 4)];
        double Y = bv_threshold(A) + uniform(rng, 0.0, 3.0);
        double e = uniform(rng, 0.0, A);
        if (!Cs.count(A)) Cs.emplace(A, bv_constant_C(A, ctx));
        BVResult res = bv_rhs(BVParams::from_exponent(Y, A, e, p), ctx, Cs.at(A));
        UBound sum(p);
        bool dominated = true;
        for (const auto& [name, u] : res.terms) {
            sum = ub_add(sum, u);
            if (!(u <= res.total)) dominated = false;
        }
        // both are upper bounds on the same sum, rounded along different paths
        Real diff(p);
        mpfr_sub(diff.get(), res.total.log_value().get(), sum.log_value().get(), MPFR_RNDN);
        double d = std::fabs(diff.to_double());
        ++r.checked;
        if (!dominated || !(d <= std::ldexp(1.0, -int(p) / 2)))
            fail(r, "Y=" + fmt(Y) + " A=" + fmt(A) + " Q1 exp=" + fmt(e) + " |log total - log sum|=" + fmt(d));
    }
    return r;
}

std::vector<CheckResult> oracle_suite(const VerifyOptions& opt) {
    if (opt.sieve_limit > kMaxSieveLimit) throw ConfigError("sieve limit exceeds 10^9");
    LambdaTable table = sieve_lambda(opt.sieve_limit);
    return {check_r2_window(table, opt),
            check_goldston_left(table, opt, LeftRange::lemma),
            check_goldston_right(table, opt),
            check_goldston_left(table, opt, LeftRange::perron),
            check_prime_window(table, opt),
            check_orthogonality(opt),
            check_partition(table, opt),
            check_inversion(table, opt)};
}

std::vector<CheckResult> property_suite(const VerifyOptions& opt) {
    return {check_precision_monotonicity(opt), check_rational_soundness(opt), check_mu_crossover(opt),
            check_C_monotone_in_Y0(opt), check_bv_term_sum(opt)};
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (r.status == CheckStatus::fail) return false;
    return true;
}

}  // namespace epnt
