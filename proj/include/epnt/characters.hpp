#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "epnt/sieve.hpp"

namespace epnt {

// chi(a) = exp(2 pi i num/den); den is the exponent of (Z/qZ)^* for every
// value coming out of a CharTable.
struct Rotation {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

class CharTable {
public:
    explicit CharTable(std::uint64_t q);

    std::uint64_t modulus() const { return q_; }
    std::size_t size() const { return count_; }         // phi(q)
    std::int64_t exponent() const { return exponent_; }  // common angle denominator

    // nullopt when gcd(a, q) > 1
    std::optional<Rotation> value(std::size_t chi, std::uint64_t a) const;
    std::complex<double> complex_value(std::size_t chi, std::uint64_t a) const;
    // complex values for every residue 0..q-1 (zero off the unit group)
    std::vector<std::complex<double>> value_table(std::size_t chi) const;

    bool is_principal(std::size_t chi) const;
    bool is_real(std::size_t chi) const;
    std::uint64_t conductor(std::size_t chi) const;
    std::size_t principal_index() const { return 0; }

private:
    enum class Kind { odd, two_sign, two_five };
    struct Component {
        Kind kind;
        std::uint64_t p;      // prime
        int e;                // exponent of p in q
        std::int64_t order;   // order of the cyclic factor
    };

    std::vector<std::int64_t> exponents_of(std::size_t chi) const;

    std::uint64_t q_;
    std::size_t count_ = 1;
    std::int64_t exponent_ = 1;
    std::vector<Component> comps_;
    std::vector<std::int32_t> logs_;  // q * comps_.size(), -1 off the unit group
};

inline CharTable characters(std::uint64_t q) { return CharTable(q); }

std::complex<double> psi_chi(double x, const CharTable& table, std::size_t chi,
                             const LambdaTable& lambda);

// Exact value of sum_a chi(a) conj(chi'(a)) by reduction in Z[zeta]; nullopt
// if the sum is not a rational integer.
std::optional<std::int64_t> orthogonality_sum(const CharTable& table, std::size_t chi1,
                                              std::size_t chi2);

struct OrthogonalityReport {
    std::size_t pairs = 0;
    std::size_t failures = 0;
    std::pair<std::size_t, std::size_t> first_failure{0, 0};
};

// All phi(q)^2 pairs, each checked exactly.
OrthogonalityReport orthogonality_check(const CharTable& table);

// Exact value of sum_i zeta_n^{d_i} for a multiset given as counts[d],
// d = 0..n-1; nullopt if it is not a rational integer.
std::optional<std::int64_t> cyclotomic_integer_value(const std::vector<std::int64_t>& counts);

std::uint64_t euler_phi(std::uint64_t n);

}  // namespace epnt
