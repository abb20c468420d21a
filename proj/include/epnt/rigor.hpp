#pragma once

// Directed-rounding numeric kernel.
//
// Real      RAII wrapper around mpfr_t.
// Interval  outward-rounded enclosure [lo, hi]; every formula in the library
//           is evaluated on these, so results at precision 2p nest inside
//           results at precision p.
// UBound    certified upper bound on a nonnegative quantity, kept as the
//           natural log of the bound (rounded up; -inf means exactly zero).

#include <mpfr.h>

#include <functional>
#include <string>
#include <vector>

#include "epnt/errors.hpp"

namespace epnt {

using Prec = mpfr_prec_t;

class Real {
public:
    explicit Real(Prec prec = 128);
    Real(double v, Prec prec);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    Prec prec() const { return mpfr_get_prec(v_); }

    double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(v_, rnd); }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    std::string str(int digits = 20) const;

    static Real neg_inf(Prec prec);
    static Real pos_inf(Prec prec);

private:
    mpfr_t v_;
};

inline int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.get(), b.get()); }

class Interval {
public:
    explicit Interval(Prec prec = 128);
    Interval(double v, Prec prec);                 // exact point
    Interval(Real lo, Real hi);
    static Interval decimal(const char* text, Prec prec);  // enclosure of a decimal literal
    static Interval hull(double lo, double hi, Prec prec);

    const Real& lo() const { return lo_; }
    const Real& hi() const { return hi_; }
    Real& lo() { return lo_; }
    Real& hi() { return hi_; }
    Prec prec() const { return lo_.prec(); }

    double mid() const;
    double upper() const { return hi_.to_double(MPFR_RNDU); }
    double lower() const { return lo_.to_double(MPFR_RNDD); }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    bool contains(double v) const;

private:
    Real lo_, hi_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator+(const Interval& a, double b);
Interval operator-(const Interval& a, double b);
Interval operator*(const Interval& a, double b);
Interval operator/(const Interval& a, double b);
Interval operator+(double a, const Interval& b);
Interval operator-(double a, const Interval& b);
Interval operator*(double a, const Interval& b);
Interval operator/(double a, const Interval& b);

Interval exp(const Interval& a);
Interval log(const Interval& a);
Interval log1p(const Interval& a);
Interval sqrt(const Interval& a);
Interval cbrt(const Interval& a);
Interval sqr(const Interval& a);
Interval abs(const Interval& a);
Interval pow(const Interval& base, const Interval& e);  // base > 0
Interval pow(const Interval& base, double e);
Interval min(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);

Interval const_pi(Prec prec);
Interval const_euler(Prec prec);
Interval const_log2(Prec prec);
Interval const_e(Prec prec);

// Certain ordering (every point of a below every point of b).
bool certainly_lt(const Interval& a, const Interval& b);
bool certainly_le(const Interval& a, const Interval& b);

class UBound {
public:
    explicit UBound(Prec prec = 128);  // zero
    static UBound zero(Prec prec) { return UBound(prec); }
    static UBound one(Prec prec);
    static UBound from_log(Real log_value);
    static UBound from_double(double v, Prec prec);
    // Upper endpoint of an enclosure of a nonnegative quantity. A negative
    // upper endpoint is clamped to zero.
    static UBound from_interval(const Interval& v);

    const Real& log_value() const { return log_; }
    Prec prec() const { return log_.prec(); }
    bool is_zero() const { return log_.is_inf() && log_.sign() < 0; }
    bool is_inf() const { return log_.is_inf() && log_.sign() > 0; }

    double log10_value() const;       // rounded up
    double value() const;             // rounded up; may be +inf or 0
    Interval as_interval() const;     // [0, bound]

private:
    Real log_;
};

bool operator<(const UBound& a, const UBound& b);
bool operator<=(const UBound& a, const UBound& b);

UBound ub_add(const UBound& a, const UBound& b);
UBound ub_mul(const UBound& a, const UBound& b);
UBound ub_pow(const UBound& a, double e);                  // e >= 0
UBound ub_pow_xt(const Interval& log_x, const Interval& exponent);
UBound ub_pow_xt(double log_x, double exponent, Prec prec);
UBound ub_exp(const UBound& a);                            // bound on e^a
Real ub_log(const UBound& a);                              // upper bound on log a
UBound ub_min(const UBound& a, const UBound& b);
UBound ub_max(const UBound& a, const UBound& b);
UBound ub_div_by_lower(const UBound& a, const Interval& denominator);

struct EvalContext {
    int precision_bits = 128;
    double grid_step = 0.05;
    int tail_doublings = 4;
    double span = 6.0;

    void validate() const;
    Prec prec() const { return static_cast<Prec>(precision_bits); }
};

struct SupCertificate {
    UBound value;
    double argmax_Y = 0.0;
    double Y_start = 0.0, Y_end = 0.0, step = 0.0;
    bool tail_certified = false;
    std::vector<std::pair<double, UBound>> tail_evidence;
    bool q_monotone = true;  // false if some grid point fell back to a q-grid
};

SupCertificate sup_scan(const std::function<UBound(double)>& f, double Y_start,
                        const EvalContext& ctx);

// Neumaier compensated summation.
class KahanSum {
public:
    void add(double v);
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0, comp_ = 0.0;
};

}  // namespace epnt
