#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "epnt/rigor.hpp"

namespace epnt {

// Zero-free region constants (Kadiri): at most one zero with
// beta >= 1 - 1/(R0 log max{q, q|gamma|}).
struct ZeroRegionConstants {
    static constexpr const char* R0 = "6.3970";
    static constexpr const char* R1 = "2.0452";
};

Interval R0(Prec prec);
Interval R1(Prec prec);

// Liu-Wang zero-density data, kept as the decimal strings they were
// published with so every precision gets its own correctly rounded enclosure.
struct LWTables {
    std::array<const char*, 7> eta;
    std::array<const char*, 7> xi;
    std::array<int, 12> varrho_n;
    std::array<const char*, 12> varrho;
    std::array<const char*, 13> nu;
    std::array<int, 12> M;
};

const LWTables& lw_tables();
std::string lw_canonical_text();
std::uint64_t lw_checksum();  // FNV-1a 64 of lw_canonical_text()

// 1-based accessors, as the indices appear in the formulas
Interval lw_eta(int i, Prec prec);
Interval lw_xi(int i, Prec prec);
Interval lw_nu(int j, Prec prec);
int lw_M(int j);

// qT thresholds for the eta/xi data and for the varrho / nu tail data
constexpr double kLWThresholdEtaXi = 8e9;
constexpr double kLWThresholdTail = 1e11;

// min{0.247 log qT + 6.894, 0.298 log qT + 4.358}
Interval r1_from_log(const Interval& log_qT);
Interval r1_iv(const Interval& q, const Interval& T);
UBound r1(const Interval& q, const Interval& T);
UBound r1(double q, double T, const EvalContext& ctx);

struct SiegelBounds {
    Real lower;   // rounded down
    Real upper;   // rounded up
    bool empty;   // lower > upper: no Siegel zero possible at this q
};

SiegelBounds siegel_bounds(std::uint64_t q, const EvalContext& ctx);

// True iff (beta, gamma) lies in the closed exceptional region
// beta >= 1 - 1/(R0 log max{q, q|gamma|}). Undecidable boundary cases at the
// working precision count as inside.
bool zero_free_check(double beta, double gamma, double q, const EvalContext& ctx);

}  // namespace epnt
