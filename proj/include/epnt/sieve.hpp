#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace epnt {

// One nonzero entry of the von Mangoldt table: n = p^k, Lambda(n) = log p.
struct PrimePower {
    std::uint32_t n;
    std::uint32_t p;
    std::uint8_t k;
};

class LambdaTable {
public:
    LambdaTable() = default;
    LambdaTable(std::uint64_t limit, std::vector<PrimePower> entries);

    std::uint64_t limit() const { return limit_; }
    const std::vector<PrimePower>& entries() const { return entries_; }

    double lambda(std::uint64_t n) const;
    // index of the first entry with n > x
    std::size_t upper_index(double x) const;
    std::size_t lower_index(double x) const;  // first entry with n >= x
    // sum of Lambda over entries [0, i)
    double prefix(std::size_t i) const { return prefix_[i]; }
    // number of primes (k = 1) among entries [0, i)
    std::uint32_t prime_rank(std::size_t i) const { return prime_rank_[i]; }

private:
    std::uint64_t limit_ = 0;
    std::vector<PrimePower> entries_;
    std::vector<double> prefix_;
    std::vector<std::uint32_t> prime_rank_;
};

constexpr std::uint64_t kMaxSieveLimit = 1000000000ULL;

LambdaTable sieve_lambda(std::uint64_t limit);

double psi(double x, const LambdaTable& table);
double psi_progression(double x, std::uint64_t q, std::int64_t a, const LambdaTable& table);

// pi(x) - pi(x - y)
std::uint64_t prime_count_window(double x, double y, const LambdaTable& table);

// Upper end of the left weighted sum: the lemma stops at n <= x - 1.5, the
// Perron-remainder argument runs to n < x - 1/2.
enum class LeftRange { lemma, perron };

double goldston_sum_left(double x, const LambdaTable& table, LeftRange range = LeftRange::lemma);
double goldston_sum_right(double x, const LambdaTable& table);

// Binary cache: "EPNT1", limit (u64 LE), then (n u64 LE, p u64 LE, k u8).
void write_lambda_cache(const std::string& path, const LambdaTable& table);
LambdaTable read_lambda_cache(const std::string& path);

}  // namespace epnt
