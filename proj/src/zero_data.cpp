#include "epnt/zero_data.hpp"

#include <cmath>
#include <sstream>

namespace epnt {

namespace {

const LWTables kTables = {
    {"0.16", "0.17", "0.18", "0.19", "0.20", "0.206", "0.2067"},
    {"0.2605", "0.2477", "0.2356", "0.2242", "0.2135", "0.2074", "0.2067"},
    {4, 5, 6, 7, 10, 18, 45, 91, 146, 332, 834, 7000},
    {"0.28", "0.31", "0.32", "0.33", "0.36", "0.39", "0.42", "0.45", "0.46", "0.47", "0.475", "0.478"},
    {"0.26213", "0.27", "0.30", "0.32", "0.33", "0.36", "0.39", "0.42", "0.45", "0.46", "0.47",
     "0.475", "0.478"},
    {1, 1, 1, 1, 4, 7, 47, 57, 55, 186, 502, 6166},
};

}  // namespace

Interval R0(Prec prec) { return Interval::decimal(ZeroRegionConstants::R0, prec); }
Interval R1(Prec prec) { return Interval::decimal(ZeroRegionConstants::R1, prec); }

const LWTables& lw_tables() { return kTables; }

std::string lw_canonical_text() {
    std::ostringstream os;
    auto list = [&os](const char* name, const auto& xs) {
        os << name << ':';
        for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
        os << ';';
    };
    list("eta", kTables.eta);
    list("xi", kTables.xi);
    list("n", kTables.varrho_n);
    list("varrho", kTables.varrho);
    list("nu", kTables.nu);
    list("M", kTables.M);
    return os.str();
}

std::uint64_t lw_checksum() {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : lw_canonical_text()) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

Interval lw_eta(int i, Prec prec) {
    require(i >= 1 && i <= 7, "eta index must lie in 1..7");
    return Interval::decimal(kTables.eta[static_cast<std::size_t>(i - 1)], prec);
}

Interval lw_xi(int i, Prec prec) {
    require(i >= 1 && i <= 7, "xi index must lie in 1..7");
    return Interval::decimal(kTables.xi[static_cast<std::size_t>(i - 1)], prec);
}

Interval lw_nu(int j, Prec prec) {
    require(j >= 1 && j <= 13, "nu index must lie in 1..13");
    return Interval::decimal(kTables.nu[static_cast<std::size_t>(j - 1)], prec);
}

int lw_M(int j) {
    require(j >= 1 && j <= 12, "M index must lie in 1..12");
    return kTables.M[static_cast<std::size_t>(j - 1)];
}

Interval r1_from_log(const Interval& log_qT) {
    Prec p = log_qT.prec();
    Interval a = Interval::decimal("0.247", p) * log_qT + Interval::decimal("6.894", p);
    Interval b = Interval::decimal("0.298", p) * log_qT + Interval::decimal("4.358", p);
    return min(a, b);
}

Interval r1_iv(const Interval& q, const Interval& T) {
    require(mpfr_cmp_si(q.lo().get(), 1) > 0, "r1 needs q > 1");
    require(!certainly_lt(T * 7.0, Interval(5.0, T.prec())), "r1 needs T >= 5/7");
    return r1_from_log(log(q * T));
}

UBound r1(const Interval& q, const Interval& T) { return UBound::from_interval(r1_iv(q, T)); }

UBound r1(double q, double T, const EvalContext& ctx) {
    return r1(Interval(q, ctx.prec()), Interval(T, ctx.prec()));
}

SiegelBounds siegel_bounds(std::uint64_t q, const EvalContext& ctx) {
    require(q >= 3, "siegel_bounds needs q >= 3");
    Prec p = ctx.prec();
    Interval qq(static_cast<double>(q), p);
    Interval d = 100.0 / (sqrt(qq) * sqr(log(qq)));
    Interval up = 1.0 - d;
    SiegelBounds s{d.lo(), up.hi(), false};
    s.empty = cmp(s.lower, s.upper) > 0;
    return s;
}

bool zero_free_check(double beta, double gamma, double q, const EvalContext& ctx) {
    require(q >= 3.0, "zero_free_check needs q >= 3");
    Prec p = ctx.prec();
    double m = std::max(q, q * std::fabs(gamma));
    Interval thr = 1.0 - 1.0 / (R0(p) * log(Interval(m, p)));
    return mpfr_cmp_d(thr.lo().get(), beta) <= 0;
}

}  // namespace epnt
