// Acceptance run: one PASS/FAIL line per criterion, details indented below.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "epnt/bv_bound.hpp"
#include "epnt/constants.hpp"
#include "epnt/reference_tables.hpp"
#include "epnt/truncation.hpp"
#include "epnt/verify.hpp"

using namespace epnt;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int n, bool ok, const std::string& what, double secs) {
    std::printf("criterion %d: %s  %s  [%.1f s]\n", n, ok ? "PASS" : "FAIL", what.c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++failures;
}

void detail(const std::string& s) { std::printf("    %s\n", s.c_str()); }

std::string fmt(const char* f, double a, double b, double c) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

std::string largest_r_term(double Y, double a1, double a2, Prec p) {
    RStarParts r = r_star_parts(TruncationInputs::from_loglog(Y, a1 + a2 + 3.0, a1, p));
    std::pair<const char*, const Interval*> parts[] = {
        {"log q/log 2", &r.log_q_over_log2}, {"R2", &r.R2}, {"R3", &r.R3}, {"R5", &r.R5}, {"R7", &r.R7},
        {"R8", &r.R8}, {"log x", &r.log_x}, {"x r4/(T-1)", &r.r4_term}, {"R11", &r.R11}};
    auto* best = &parts[0];
    for (auto& q : parts)
        if (cmp(q.second->hi(), best->second->hi()) > 0) best = &q;
    return best->first;
}

std::string largest_c_term(double Y, double a1, double a2, Prec p) {
    CTerms t = constant_C_terms(Y, a1, a2, p);
    return cmp(t.rstar_term.hi(), t.zero_sum.hi()) >= 0 ? "R* term" : "zero sum";
}

// 1: every R row within 2% of its printed value, under 5 minutes
void criterion1() {
    auto t0 = Clock::now();
    EvalContext ctx;
    int n = 0, ok = 0;
    double worst = 0.0;
    std::vector<std::string> misses;
    for (const auto& row : reference_rows(TableKind::r)) {
        SupCertificate c = r_factor(row.param, row.alpha1, row.alpha2, ctx);
        double paper = std::stod(row.value);
        double dev = std::fabs(c.value.value() / paper - 1.0);
        worst = std::max(worst, dev);
        ++n;
        if (dev <= 0.02)
            ++ok;
        else
            misses.push_back(fmt("(%g, %g, %g)", row.param, row.alpha1, row.alpha2) + " dominant " +
                             largest_r_term(c.argmax_Y, row.alpha1, row.alpha2, ctx.prec()));
    }
    double secs = seconds_since(t0);
    report(1, ok == n && secs < 300.0,
           std::to_string(ok) + "/" + std::to_string(n) + " R rows within 2%, worst deviation " +
               fmt("%.3f%%", 100 * worst, 0, 0),
           secs);
    for (const auto& m : misses) detail("miss " + m);
}

// 2: every well-formed C and C1 row within a factor of 2, under 30 minutes;
// the malformed C1 entries are flagged, not scored
void criterion2() {
    auto t0 = Clock::now();
    EvalContext ctx;
    int n = 0, ok = 0, flagged = 0;
    std::vector<std::string> misses, malformed;
    for (TableKind kind : {TableKind::c, TableKind::c1}) {
        const char* tab = kind == TableKind::c ? "C" : "C1";
        for (const auto& row : reference_rows(kind)) {
            BoundParams bp{row.alpha1, row.alpha2, row.param};
            SupCertificate c = kind == TableKind::c ? constant_C(bp, ctx) : constant_C1(bp, ctx);
            double v = c.value.value(), paper = std::stod(row.value);
            double ratio = v / paper;
            if (row.source) {
                ++flagged;
                malformed.push_back(std::string(tab) + fmt(" (%g, %g, %g)", row.param, row.alpha1, row.alpha2) +
                                    " printed \"" + row.source + "\", computed " + fmt("%.3g", v, 0, 0));
                continue;
            }
            ++n;
            if (ratio >= 0.5 && ratio <= 2.0) {
                ++ok;
                continue;
            }
            std::string dominant = largest_c_term(c.argmax_Y, row.alpha1, row.alpha2, ctx.prec());
            if (kind == TableKind::c1 &&
                constant_C(bp, ctx).value < siegel_absorption(c.argmax_Y, row.alpha1, row.alpha2, ctx.prec()))
                dominant = "Siegel term";
            std::string m = std::string(tab) + fmt(" (%g, %g, %g)", row.param, row.alpha1, row.alpha2) + " printed " +
                            row.value + fmt(" computed %.3g ratio %.3g", v, ratio, 0) + ", dominant " + dominant;
            if (row.errata) m += "; note: " + std::string(row.errata);
            misses.push_back(m);
        }
    }
    double secs = seconds_since(t0);
    report(2, ok == n && flagged == 2 && secs < 1800.0,
           std::to_string(ok) + "/" + std::to_string(n) + " well-formed C/C1 rows within 2x, " +
               std::to_string(flagged) + " malformed entries flagged",
           secs);
    for (const auto& m : malformed) detail("errata " + m);
    for (const auto& m : misses) detail("miss " + m);
}

void print_checks(const std::vector<CheckResult>& v) {
    for (const auto& r : v)
        detail(r.name + ": " + to_string(r.status) + ", " + std::to_string(r.checked) + " checked" +
               (r.detail.empty() ? "" : ", " + r.detail));
}

bool passed(const CheckResult& r) { return r.status == CheckStatus::pass; }

// 3: the sieve-backed inequalities at limit 10^6, under 10 minutes
void criterion3() {
    auto t0 = Clock::now();
    VerifyOptions opt;
    LambdaTable table = sieve_lambda(opt.sieve_limit);
    std::vector<CheckResult> v{check_r2_window(table, opt), check_goldston_left(table, opt, LeftRange::lemma),
                               check_goldston_right(table, opt), check_prime_window(table, opt),
                               check_goldston_left(table, opt, LeftRange::perron)};
    double secs = seconds_since(t0);
    bool ok = passed(v[0]) && passed(v[1]) && passed(v[2]) && passed(v[3]) && v[0].checked == 1000000 - 1125 &&
              v[3].checked == 10000 && secs <= 600.0;
    report(3, ok, "r2 window, Goldston sums, prime windows at sieve limit 10^6", secs);
    print_checks(v);
}

// 4: exact character algebra
void criterion4() {
    auto t0 = Clock::now();
    VerifyOptions opt;
    LambdaTable table = sieve_lambda(opt.sieve_limit);
    std::vector<CheckResult> v{check_orthogonality(opt), check_partition(table, opt), check_inversion(table, opt)};
    double secs = seconds_since(t0);
    bool ok = passed(v[0]) && passed(v[1]) && passed(v[2]) && v[1].checked == 50 && v[2].checked == 20;
    report(4, ok, "orthogonality q <= 200, partition and inversion identities", secs);
    print_checks(v);
}

// 5: rounding soundness
void criterion5() {
    auto t0 = Clock::now();
    VerifyOptions opt;
    std::vector<CheckResult> v{check_precision_monotonicity(opt), check_mu_crossover(opt),
                               check_C_monotone_in_Y0(opt)};
    double secs = seconds_since(t0);
    bool ok = passed(v[0]) && passed(v[1]) && passed(v[2]) && v[0].checked == 200 && v[2].checked == 10;
    report(5, ok, "precision monotonicity, mu crossover, C nonincreasing in Y0", secs);
    print_checks(v);
}

// 6: bv terms add up to the reported total
void criterion6() {
    auto t0 = Clock::now();
    VerifyOptions opt;
    CheckResult r = check_bv_term_sum(opt);
    double secs = seconds_since(t0);
    report(6, passed(r) && r.checked == 100, "bv_rhs total equals the sum of its terms at 100 points", secs);
    print_checks({r});
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    std::printf("%d of 6 criteria failed\n", failures);
    return failures ? 1 : 0;
}
