#include "epnt/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "epnt/errors.hpp"
#include "epnt/rigor.hpp"

namespace epnt {

namespace {

constexpr std::size_t kSegment = std::size_t{1} << 20;

std::vector<std::uint32_t> small_primes(std::uint32_t n) {
    std::vector<char> comp(n + 1, 0);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = std::uint64_t{i} * i; j <= n; j += i) comp[j] = 1;
    }
    return out;
}

std::uint64_t floor_arg(double x) {
    if (!(x >= 0.0)) return 0;
    return static_cast<std::uint64_t>(std::floor(x));
}

void check_range(double x, const LambdaTable& t) {
    if (x > static_cast<double>(t.limit()))
        throw RangeError("argument exceeds the sieve limit " + std::to_string(t.limit()));
}

void put_u64(std::ostream& os, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    os.write(reinterpret_cast<const char*>(b), 8);
}

bool get_u64(std::istream& is, std::uint64_t& v) {
    unsigned char b[8];
    if (!is.read(reinterpret_cast<char*>(b), 8)) return false;
    v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t{b[i]} << (8 * i);
    return true;
}

}  // namespace

LambdaTable::LambdaTable(std::uint64_t limit, std::vector<PrimePower> entries)
    : limit_(limit), entries_(std::move(entries)) {
    prefix_.resize(entries_.size() + 1);
    prime_rank_.resize(entries_.size() + 1);
    KahanSum s;
    std::uint32_t primes = 0;
    prefix_[0] = 0.0;
    prime_rank_[0] = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        s.add(std::log(static_cast<double>(entries_[i].p)));
        if (entries_[i].k == 1) ++primes;
        prefix_[i + 1] = s.value();
        prime_rank_[i + 1] = primes;
    }
}

double LambdaTable::lambda(std::uint64_t n) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), n,
                               [](const PrimePower& e, std::uint64_t v) { return e.n < v; });
    if (it == entries_.end() || it->n != n) return 0.0;
    return std::log(static_cast<double>(it->p));
}

std::size_t LambdaTable::upper_index(double x) const {
    std::uint64_t m = floor_arg(x);
    auto it = std::upper_bound(entries_.begin(), entries_.end(), m,
                               [](std::uint64_t v, const PrimePower& e) { return v < e.n; });
    return static_cast<std::size_t>(it - entries_.begin());
}

std::size_t LambdaTable::lower_index(double x) const {
    double c = std::ceil(x);
    if (c <= 0) return 0;
    auto m = static_cast<std::uint64_t>(c);
    auto it = std::lower_bound(entries_.begin(), entries_.end(), m,
                               [](const PrimePower& e, std::uint64_t v) { return e.n < v; });
    return static_cast<std::size_t>(it - entries_.begin());
}

LambdaTable sieve_lambda(std::uint64_t limit) {
    if (limit < 2 || limit > kMaxSieveLimit)
        throw ConfigError("sieve limit must lie in [2, 10^9]");
    auto root = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(limit)));
    while (std::uint64_t{root + 1} * (root + 1) <= limit) ++root;
    while (std::uint64_t{root} * root > limit) --root;
    std::vector<std::uint32_t> base = small_primes(std::max<std::uint32_t>(root, 2));

    // proper powers p^k, k >= 2, only exist for p <= sqrt(limit)
    std::vector<PrimePower> powers;
    for (std::uint32_t p : base) {
        std::uint64_t v = std::uint64_t{p} * p;
        std::uint8_t k = 2;
        while (v <= limit) {
            powers.push_back({static_cast<std::uint32_t>(v), p, k});
            v *= p;
            ++k;
        }
    }
    std::sort(powers.begin(), powers.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.n < b.n; });

    std::vector<PrimePower> out;
    out.reserve(static_cast<std::size_t>(1.1 * limit / std::log(static_cast<double>(limit) + 1.0)) + 16);
    std::vector<char> comp(kSegment);
    std::size_t pw = 0;
    for (std::uint64_t lo = 2; lo <= limit; lo += kSegment) {
        std::uint64_t hi = std::min<std::uint64_t>(lo + kSegment - 1, limit);
        std::fill(comp.begin(), comp.end(), 0);
        for (std::uint32_t p : base) {
            std::uint64_t pp = std::uint64_t{p} * p;
            if (pp > hi) break;
            std::uint64_t start = std::max<std::uint64_t>(pp, (lo + p - 1) / p * p);
            for (std::uint64_t j = start; j <= hi; j += p) comp[j - lo] = 1;
        }
        for (std::uint64_t n = lo; n <= hi; ++n) {
            while (pw < powers.size() && powers[pw].n < n) out.push_back(powers[pw++]);
            if (!comp[n - lo]) out.push_back({static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(n), 1});
        }
    }
    while (pw < powers.size()) out.push_back(powers[pw++]);
    return LambdaTable(limit, std::move(out));
}

double psi(double x, const LambdaTable& table) {
    check_range(x, table);
    return table.prefix(table.upper_index(x));
}

double psi_progression(double x, std::uint64_t q, std::int64_t a, const LambdaTable& table) {
    check_range(x, table);
    if (q == 0) throw DomainError("psi_progression needs q >= 1");
    auto qi = static_cast<std::int64_t>(q);
    auto r = static_cast<std::uint64_t>(((a % qi) + qi) % qi);
    KahanSum s;
    std::size_t end = table.upper_index(x);
    const auto& e = table.entries();
    for (std::size_t i = 0; i < end; ++i)
        if (e[i].n % q == r) s.add(std::log(static_cast<double>(e[i].p)));
    return s.value();
}

std::uint64_t prime_count_window(double x, double y, const LambdaTable& table) {
    check_range(x, table);
    if (!(y > 1.0 && y <= x)) throw DomainError("prime_count_window needs 1 < y <= x");
    return table.prime_rank(table.upper_index(x)) - table.prime_rank(table.upper_index(x - y));
}

double goldston_sum_left(double x, const LambdaTable& table, LeftRange range) {
    if (!(x >= 3.0)) throw DomainError("goldston sums need x >= 3");
    check_range(2.0 * x, table);
    std::size_t begin = table.upper_index(x / 2.0);
    std::size_t end = range == LeftRange::lemma ? table.upper_index(x - 1.5)
                                                : table.lower_index(x - 0.5);
    KahanSum s;
    const auto& e = table.entries();
    for (std::size_t i = begin; i < end; ++i) {
        double n = e[i].n;
        s.add(std::log(static_cast<double>(e[i].p)) / (x / n - 1.0));
    }
    return s.value();
}

double goldston_sum_right(double x, const LambdaTable& table) {
    if (!(x >= 3.0)) throw DomainError("goldston sums need x >= 3");
    check_range(2.0 * x, table);
    std::size_t begin = table.lower_index(x + 1.5);
    std::size_t end = table.lower_index(2.0 * x);
    KahanSum s;
    const auto& e = table.entries();
    for (std::size_t i = begin; i < end; ++i) {
        double n = e[i].n;
        s.add(std::log(static_cast<double>(e[i].p)) / (1.0 - x / n));
    }
    return s.value();
}

void write_lambda_cache(const std::string& path, const LambdaTable& table) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw DataError("cannot open cache file for writing: " + path);
    os.write("EPNT1", 5);
    put_u64(os, table.limit());
    for (const auto& e : table.entries()) {
        put_u64(os, e.n);
        put_u64(os, e.p);
        os.put(static_cast<char>(e.k));
    }
    if (!os) throw DataError("write failed: " + path);
}

LambdaTable read_lambda_cache(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw DataError("cannot open cache file: " + path);
    char magic[5];
    if (!is.read(magic, 5) || std::string(magic, 5) != "EPNT1")
        throw DataError("bad cache magic in " + path);
    std::uint64_t limit = 0;
    if (!get_u64(is, limit) || limit < 2 || limit > kMaxSieveLimit)
        throw DataError("bad cache limit in " + path);
    std::vector<PrimePower> entries;
    std::uint64_t n = 0, p = 0, last = 0;
    while (get_u64(is, n)) {
        int k = 0;
        if (!get_u64(is, p) || (k = is.get()) == EOF) throw DataError("truncated cache record in " + path);
        if (n <= last || n > limit || p < 2 || k < 1) throw DataError("inconsistent cache record in " + path);
        std::uint64_t v = 1;
        for (int i = 0; i < k && v <= n; ++i) v *= p;
        if (v != n) throw DataError("cache record is not p^k = n in " + path);
        entries.push_back({static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(p),
                           static_cast<std::uint8_t>(k)});
        last = n;
    }
    if (is.gcount() != 0) throw DataError("truncated cache record in " + path);
    return LambdaTable(limit, std::move(entries));
}

}  // namespace epnt
