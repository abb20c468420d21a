#include "epnt/rigor.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace epnt {

namespace {

// x = exp(exp(Y)) must be representable for Y up to ~40, far past the
// default MPFR exponent range. The range is thread-local in MPFR.
void widen_exponent_range() {
    thread_local bool done = [] {
        mpfr_set_emax(mpfr_get_emax_max());
        mpfr_set_emin(mpfr_get_emin_min());
        return true;
    }();
    (void)done;
}

Prec pmax(Prec a, Prec b) { return a > b ? a : b; }

// Product with the interval convention 0 * inf = 0.
void mul_rnd(mpfr_ptr out, mpfr_srcptr a, mpfr_srcptr b, mpfr_rnd_t rnd) {
    if (mpfr_zero_p(a) || mpfr_zero_p(b)) {
        mpfr_set_zero(out, 1);
        return;
    }
    mpfr_mul(out, a, b, rnd);
}

using Unary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

Interval monotone(const Interval& a, Unary f) {
    Interval r(a.prec());
    f(r.lo().get(), a.lo().get(), MPFR_RNDD);
    f(r.hi().get(), a.hi().get(), MPFR_RNDU);
    return r;
}

}  // namespace

// ---- Real -------------------------------------------------------------

Real::Real(Prec prec) {
    widen_exponent_range();
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Real::Real(double v, Prec prec) : Real(prec) { mpfr_set_d(v_, v, MPFR_RNDN); }

Real::Real(const Real& o) : Real(o.prec()) { mpfr_set(v_, o.v_, MPFR_RNDN); }

Real::Real(Real&& o) noexcept : Real(o.prec()) { mpfr_swap(v_, o.v_); }

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

std::string Real::str(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

Real Real::neg_inf(Prec prec) {
    Real r(prec);
    mpfr_set_inf(r.get(), -1);
    return r;
}

Real Real::pos_inf(Prec prec) {
    Real r(prec);
    mpfr_set_inf(r.get(), 1);
    return r;
}

// ---- Interval ---------------------------------------------------------

Interval::Interval(Prec prec) : lo_(prec), hi_(prec) {}

Interval::Interval(double v, Prec prec) : lo_(prec), hi_(prec) {
    mpfr_set_d(lo_.get(), v, MPFR_RNDD);
    mpfr_set_d(hi_.get(), v, MPFR_RNDU);
}

Interval::Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

Interval Interval::decimal(const char* text, Prec prec) {
    Interval r(prec);
    if (mpfr_set_str(r.lo_.get(), text, 10, MPFR_RNDD) != 0 ||
        mpfr_set_str(r.hi_.get(), text, 10, MPFR_RNDU) != 0)
        throw ConfigError(std::string("bad decimal literal: ") + text);
    return r;
}

Interval Interval::hull(double lo, double hi, Prec prec) {
    Interval r(prec);
    mpfr_set_d(r.lo_.get(), lo, MPFR_RNDD);
    mpfr_set_d(r.hi_.get(), hi, MPFR_RNDU);
    return r;
}

double Interval::mid() const {
    double a = lo_.to_double(), b = hi_.to_double();
    if (std::isinf(a)) return b;
    if (std::isinf(b)) return a;
    return 0.5 * (a + b);
}

bool Interval::contains(double v) const {
    return mpfr_cmp_d(lo_.get(), v) <= 0 && mpfr_cmp_d(hi_.get(), v) >= 0;
}

Interval operator+(const Interval& a, const Interval& b) {
    Interval r(pmax(a.prec(), b.prec()));
    mpfr_add(r.lo().get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
    mpfr_add(r.hi().get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval r(pmax(a.prec(), b.prec()));
    mpfr_sub(r.lo().get(), a.lo().get(), b.hi().get(), MPFR_RNDD);
    mpfr_sub(r.hi().get(), a.hi().get(), b.lo().get(), MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a) {
    Interval r(a.prec());
    mpfr_neg(r.lo().get(), a.hi().get(), MPFR_RNDD);
    mpfr_neg(r.hi().get(), a.lo().get(), MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b) {
    Prec p = pmax(a.prec(), b.prec());
    Interval r(p);
    if (a.lo().sign() >= 0 && b.lo().sign() >= 0) {
        mul_rnd(r.lo().get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
        mul_rnd(r.hi().get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
        return r;
    }
    const Real* xs[2] = {&a.lo(), &a.hi()};
    const Real* ys[2] = {&b.lo(), &b.hi()};
    Real t(p);
    bool first = true;
    for (const Real* x : xs) {
        for (const Real* y : ys) {
            mul_rnd(t.get(), x->get(), y->get(), MPFR_RNDD);
            if (first || cmp(t, r.lo()) < 0) mpfr_set(r.lo().get(), t.get(), MPFR_RNDD);
            mul_rnd(t.get(), x->get(), y->get(), MPFR_RNDU);
            if (first || cmp(t, r.hi()) > 0) mpfr_set(r.hi().get(), t.get(), MPFR_RNDU);
            first = false;
        }
    }
    return r;
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw DomainError("division by an enclosure containing zero");
    Prec p = pmax(a.prec(), b.prec());
    Interval r(p);
    const Real* xs[2] = {&a.lo(), &a.hi()};
    const Real* ys[2] = {&b.lo(), &b.hi()};
    Real t(p);
    bool first = true;
    for (const Real* x : xs) {
        for (const Real* y : ys) {
            mpfr_div(t.get(), x->get(), y->get(), MPFR_RNDD);
            if (first || cmp(t, r.lo()) < 0) mpfr_set(r.lo().get(), t.get(), MPFR_RNDD);
            mpfr_div(t.get(), x->get(), y->get(), MPFR_RNDU);
            if (first || cmp(t, r.hi()) > 0) mpfr_set(r.hi().get(), t.get(), MPFR_RNDU);
            first = false;
        }
    }
    return r;
}

Interval operator+(const Interval& a, double b) { return a + Interval(b, a.prec()); }
Interval operator-(const Interval& a, double b) { return a - Interval(b, a.prec()); }
Interval operator*(const Interval& a, double b) { return a * Interval(b, a.prec()); }
Interval operator/(const Interval& a, double b) { return a / Interval(b, a.prec()); }
Interval operator+(double a, const Interval& b) { return Interval(a, b.prec()) + b; }
Interval operator-(double a, const Interval& b) { return Interval(a, b.prec()) - b; }
Interval operator*(double a, const Interval& b) { return Interval(a, b.prec()) * b; }
Interval operator/(double a, const Interval& b) { return Interval(a, b.prec()) / b; }

Interval exp(const Interval& a) { return monotone(a, mpfr_exp); }

Interval log(const Interval& a) {
    if (a.lo().sign() < 0) throw DomainError("log of an enclosure reaching below zero");
    return monotone(a, mpfr_log);
}

Interval log1p(const Interval& a) {
    if (mpfr_cmp_si(a.lo().get(), -1) < 0) throw DomainError("log1p argument below -1");
    return monotone(a, mpfr_log1p);
}

Interval sqrt(const Interval& a) {
    if (a.lo().sign() < 0) throw DomainError("sqrt of an enclosure reaching below zero");
    return monotone(a, mpfr_sqrt);
}

Interval cbrt(const Interval& a) { return monotone(a, mpfr_cbrt); }

Interval abs(const Interval& a) {
    if (a.lo().sign() >= 0) return a;
    if (a.hi().sign() <= 0) return -a;
    Interval r(a.prec());
    mpfr_set_zero(r.lo().get(), 1);
    mpfr_neg(r.hi().get(), a.lo().get(), MPFR_RNDU);
    if (cmp(a.hi(), r.hi()) > 0) mpfr_set(r.hi().get(), a.hi().get(), MPFR_RNDU);
    return r;
}

Interval sqr(const Interval& a) {
    Interval m = abs(a);
    return m * m;
}

Interval pow(const Interval& base, const Interval& e) { return exp(e * log(base)); }

Interval pow(const Interval& base, double e) { return pow(base, Interval(e, base.prec())); }

Interval min(const Interval& a, const Interval& b) {
    return Interval(cmp(a.lo(), b.lo()) <= 0 ? a.lo() : b.lo(),
                    cmp(a.hi(), b.hi()) <= 0 ? a.hi() : b.hi());
}

Interval max(const Interval& a, const Interval& b) {
    return Interval(cmp(a.lo(), b.lo()) >= 0 ? a.lo() : b.lo(),
                    cmp(a.hi(), b.hi()) >= 0 ? a.hi() : b.hi());
}

Interval const_pi(Prec prec) {
    Interval r(prec);
    mpfr_const_pi(r.lo().get(), MPFR_RNDD);
    mpfr_const_pi(r.hi().get(), MPFR_RNDU);
    return r;
}

Interval const_euler(Prec prec) {
    Interval r(prec);
    mpfr_const_euler(r.lo().get(), MPFR_RNDD);
    mpfr_const_euler(r.hi().get(), MPFR_RNDU);
    return r;
}

Interval const_log2(Prec prec) {
    Interval r(prec);
    mpfr_const_log2(r.lo().get(), MPFR_RNDD);
    mpfr_const_log2(r.hi().get(), MPFR_RNDU);
    return r;
}

Interval const_e(Prec prec) { return exp(Interval(1.0, prec)); }

bool certainly_lt(const Interval& a, const Interval& b) { return cmp(a.hi(), b.lo()) < 0; }
bool certainly_le(const Interval& a, const Interval& b) { return cmp(a.hi(), b.lo()) <= 0; }

// ---- UBound -----------------------------------------------------------

UBound::UBound(Prec prec) : log_(Real::neg_inf(prec)) {}

UBound UBound::one(Prec prec) { return from_log(Real(0.0, prec)); }

UBound UBound::from_log(Real log_value) {
    if (log_value.is_nan()) throw DomainError("NaN reached a certified bound");
    UBound u(log_value.prec());
    u.log_ = std::move(log_value);
    return u;
}

UBound UBound::from_double(double v, Prec prec) {
    if (!(v >= 0.0)) throw DomainError("UBound of a negative or NaN value");
    UBound u(prec);
    if (v == 0.0) return u;
    Real t(prec);
    mpfr_set_d(t.get(), v, MPFR_RNDU);
    mpfr_log(u.log_.get(), t.get(), MPFR_RNDU);
    return u;
}

UBound UBound::from_interval(const Interval& v) {
    if (v.hi().is_nan() || v.lo().is_nan()) throw DomainError("NaN reached a certified bound");
    UBound u(v.prec());
    if (v.hi().sign() <= 0) return u;
    mpfr_log(u.log_.get(), v.hi().get(), MPFR_RNDU);
    return u;
}

double UBound::log10_value() const {
    if (log_.is_inf()) return log_.to_double();
    Real ln10(prec());
    Real r(prec());
    // Rounding up a quotient by a positive constant: pick the ln 10 endpoint
    // that makes the magnitude move in the upward direction.
    mpfr_set_ui(ln10.get(), 10, MPFR_RNDN);
    mpfr_log(ln10.get(), ln10.get(), log_.sign() >= 0 ? MPFR_RNDD : MPFR_RNDU);
    mpfr_div(r.get(), log_.get(), ln10.get(), MPFR_RNDU);
    return r.to_double(MPFR_RNDU);
}

double UBound::value() const {
    Real r(prec());
    mpfr_exp(r.get(), log_.get(), MPFR_RNDU);
    return r.to_double(MPFR_RNDU);
}

Interval UBound::as_interval() const {
    Interval r(prec());
    mpfr_exp(r.hi().get(), log_.get(), MPFR_RNDU);
    return r;
}

bool operator<(const UBound& a, const UBound& b) { return cmp(a.log_value(), b.log_value()) < 0; }
bool operator<=(const UBound& a, const UBound& b) { return cmp(a.log_value(), b.log_value()) <= 0; }

// Sums go through the linear domain (exp, add, log, all rounded up). Each step
// is monotone and correctly rounded, so the result never loosens when the
// precision grows; MPFR's exponent range keeps exp finite for any log_value
// this library produces, and overflow saturates to +inf.
UBound ub_add(const UBound& a, const UBound& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Prec p = pmax(a.prec(), b.prec());
    Real ea(p), eb(p), s(p);
    mpfr_exp(ea.get(), a.log_value().get(), MPFR_RNDU);
    mpfr_exp(eb.get(), b.log_value().get(), MPFR_RNDU);
    mpfr_add(s.get(), ea.get(), eb.get(), MPFR_RNDU);
    mpfr_log(s.get(), s.get(), MPFR_RNDU);
    return UBound::from_log(std::move(s));
}

UBound ub_mul(const UBound& a, const UBound& b) {
    Prec p = pmax(a.prec(), b.prec());
    if (a.is_zero() || b.is_zero()) return UBound(p);
    Real s(p);
    mpfr_add(s.get(), a.log_value().get(), b.log_value().get(), MPFR_RNDU);
    return UBound::from_log(std::move(s));
}

UBound ub_pow(const UBound& a, double e) {
    if (!(e >= 0.0)) throw DomainError("ub_pow needs a nonnegative exponent");
    if (e == 0.0) return UBound::one(a.prec());
    if (a.is_zero()) return a;
    Real s(a.prec());
    mpfr_mul_d(s.get(), a.log_value().get(), e, MPFR_RNDU);
    return UBound::from_log(std::move(s));
}

UBound ub_pow_xt(const Interval& log_x, const Interval& exponent) {
    if (log_x.lo().sign() <= 0) throw DomainError("ub_pow_xt needs log_x > 0");
    Interval t = exponent * log_x;
    return UBound::from_log(t.hi());
}

UBound ub_pow_xt(double log_x, double exponent, Prec prec) {
    return ub_pow_xt(Interval(log_x, prec), Interval(exponent, prec));
}

UBound ub_exp(const UBound& a) {
    Real s(a.prec());
    if (a.is_zero()) return UBound::one(a.prec());
    mpfr_exp(s.get(), a.log_value().get(), MPFR_RNDU);
    return UBound::from_log(std::move(s));
}

Real ub_log(const UBound& a) { return a.log_value(); }

UBound ub_min(const UBound& a, const UBound& b) { return b < a ? b : a; }
UBound ub_max(const UBound& a, const UBound& b) { return a < b ? b : a; }

UBound ub_div_by_lower(const UBound& a, const Interval& denominator) {
    if (denominator.lo().sign() <= 0)
        throw DomainError("ub_div_by_lower needs a positive lower bound on the denominator");
    if (a.is_zero()) return a;
    Prec p = pmax(a.prec(), denominator.prec());
    Real ld(p), s(p);
    mpfr_log(ld.get(), denominator.lo().get(), MPFR_RNDD);
    mpfr_sub(s.get(), a.log_value().get(), ld.get(), MPFR_RNDU);
    return UBound::from_log(std::move(s));
}

// ---- EvalContext / sup_scan -------------------------------------------

void EvalContext::validate() const {
    if (precision_bits < 53 || precision_bits > (1 << 20))
        throw ConfigError("precision_bits must lie in [53, 2^20]");
    if (!(grid_step > 0.0 && grid_step <= 0.1)) throw ConfigError("grid_step must lie in (0, 0.1]");
    if (tail_doublings < 1) throw ConfigError("tail_doublings must be positive");
    if (!(span > 0.0)) throw ConfigError("span must be positive");
}

SupCertificate sup_scan(const std::function<UBound(double)>& f, double Y_start,
                        const EvalContext& ctx) {
    ctx.validate();
    SupCertificate cert;
    cert.value = UBound(ctx.prec());
    cert.step = ctx.grid_step;
    cert.Y_start = Y_start;
    long n = std::lround(ctx.span / ctx.grid_step);
    cert.Y_end = Y_start + static_cast<double>(n) * ctx.grid_step;
    bool first = true;
    for (long k = 0; k <= n; ++k) {
        double Y = Y_start + static_cast<double>(k) * ctx.grid_step;
        UBound v = f(Y);
        // strict comparison keeps the smaller Y on ties
        if (first || cert.value < v) {
            cert.value = v;
            cert.argmax_Y = Y;
            first = false;
        }
    }
    bool ok = true;
    double offset = 1.0;
    for (int j = 0; j < ctx.tail_doublings; ++j, offset *= 2.0) {
        double Y = cert.Y_end + offset;
        UBound v = f(Y);
        if (!(v < cert.value)) ok = false;
        if (!cert.tail_evidence.empty() && !(v < cert.tail_evidence.back().second)) ok = false;
        cert.tail_evidence.emplace_back(Y, v);
    }
    cert.tail_certified = ok;
    return cert;
}

void KahanSum::add(double v) {
    double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v))
        comp_ += (sum_ - t) + v;
    else
        comp_ += (v - t) + sum_;
    sum_ = t;
}

}  // namespace epnt
