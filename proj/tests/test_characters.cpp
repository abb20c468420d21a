#include <cmath>
#include <numeric>
#include <set>

#include "doctest.h"
#include "epnt/characters.hpp"
#include "epnt/errors.hpp"
#include "support.hpp"

using namespace epnt;

namespace {

std::int64_t angle(const CharTable& t, std::size_t chi, std::uint64_t a) {
    auto r = t.value(chi, a);
    REQUIRE(r.has_value());
    REQUIRE(r->den == t.exponent());
    return r->num;
}

// smallest d | q with chi trivial on units a = 1 mod d
std::uint64_t conductor_brute(const CharTable& t, std::size_t chi) {
    std::uint64_t q = t.modulus();
    for (std::uint64_t d = 1; d <= q; ++d) {
        if (q % d) continue;
        bool ok = true;
        for (std::uint64_t a = 1; a < q && ok; a += d)
            if (std::gcd(a, q) == 1 && angle(t, chi, a) != 0) ok = false;
        if (ok) return d;
    }
    return q;
}

}  // namespace

TEST_CASE("small moduli") {
    CharTable t4 = characters(4);
    CHECK(t4.size() == 2);
    CHECK(t4.is_principal(0));
    CHECK(t4.conductor(0) == 1);
    CHECK(t4.conductor(1) == 4);
    CHECK(t4.is_real(1));
    CHECK(t4.complex_value(1, 3) == std::complex<double>(-1.0, 0.0));
    CHECK_FALSE(t4.value(1, 2).has_value());

    CharTable t5 = characters(5);
    CHECK(t5.size() == 4);
    CHECK(t5.exponent() == 4);
    std::size_t real = 0;
    for (std::size_t c = 0; c < 4; ++c) {
        real += t5.is_real(c);
        CHECK(t5.conductor(c) == (t5.is_principal(c) ? 1u : 5u));
    }
    CHECK(real == 2);

    // (Z/12)^* = {1,5,7,11}: conductors 1, 3, 4, 12
    CharTable t12 = characters(12);
    CHECK(t12.size() == 4);
    std::multiset<std::uint64_t> f;
    for (std::size_t c = 0; c < 4; ++c) {
        f.insert(t12.conductor(c));
        CHECK(t12.is_real(c));
    }
    CHECK(f == std::multiset<std::uint64_t>{1, 3, 4, 12});

    CharTable t1 = characters(1);
    CHECK(t1.size() == 1);
    CHECK(t1.value(0, 0).has_value());
    CHECK(characters(2).size() == 1);
}

TEST_CASE("brute-force structure for q <= 60") {
    for (std::uint64_t q = 1; q <= 60; ++q) {
        CharTable t = characters(q);
        CAPTURE(q);
        REQUIRE(t.size() == euler_phi(q));
        std::int64_t n = t.exponent();
        std::set<std::vector<std::int64_t>> seen;
        for (std::size_t c = 0; c < t.size(); ++c) {
            std::vector<std::int64_t> row;
            for (std::uint64_t a = 0; a < q; ++a) {
                bool unit = std::gcd(a, q) == 1;
                CHECK(t.value(c, a).has_value() == unit);
                CHECK(t.value(c, a + q).has_value() == unit);
                if (!unit) continue;
                row.push_back(angle(t, c, a));
                CHECK(angle(t, c, a + 3 * q) == angle(t, c, a));
                for (std::uint64_t b = 1; b < q; ++b)
                    if (std::gcd(b, q) == 1)
                        CHECK((angle(t, c, a) + angle(t, c, b)) % n == angle(t, c, a * b % q));
            }
            CHECK(seen.insert(row).second);  // characters are distinct
            CHECK(angle(t, c, 1 % q) == 0);
            CHECK(t.conductor(c) == conductor_brute(t, c));
            bool real = true;
            for (auto v : row) real = real && (2 * v) % n == 0;
            CHECK(t.is_real(c) == real);
        }
    }
}

TEST_CASE("orthogonality is exact") {
    for (std::uint64_t q : {1u, 7u, 15u, 16u, 24u, 63u, 100u, 101u}) {
        CharTable t = characters(q);
        auto rep = orthogonality_check(t);
        CHECK(rep.pairs == t.size() * t.size());
        CHECK(rep.failures == 0);
        CHECK(orthogonality_sum(t, 0, 0) == std::optional<std::int64_t>(std::int64_t(euler_phi(q))));
        if (t.size() > 1) CHECK(orthogonality_sum(t, 0, 1) == std::optional<std::int64_t>(0));
    }
}

TEST_CASE("cyclotomic integer values") {
    CHECK(cyclotomic_integer_value({}) == std::optional<std::int64_t>(0));
    CHECK(cyclotomic_integer_value({5}) == std::optional<std::int64_t>(5));
    // 1 + zeta_4 + zeta_4^2 + zeta_4^3 = 0
    CHECK(cyclotomic_integer_value({1, 1, 1, 1}) == std::optional<std::int64_t>(0));
    // zeta_6 + zeta_6^5 = 1
    CHECK(cyclotomic_integer_value({0, 1, 0, 0, 0, 1}) == std::optional<std::int64_t>(1));
    // zeta_3 + zeta_3^2 = -1
    CHECK(cyclotomic_integer_value({0, 1, 1}) == std::optional<std::int64_t>(-1));
    // 3 + zeta_2 = 2
    CHECK(cyclotomic_integer_value({3, 1}) == std::optional<std::int64_t>(2));
    // zeta_4 alone is not rational
    CHECK_FALSE(cyclotomic_integer_value({0, 1, 0, 0}).has_value());
    CHECK_FALSE(cyclotomic_integer_value({0, 2, 0, 1, 0, 0, 0, 0}).has_value());
}

TEST_CASE("psi_chi sums over the principal character") {
    LambdaTable lam = sieve_lambda(2000);
    CharTable t = characters(10);
    double direct = 0.0;
    for (const auto& e : lam.entries())
        if (e.n <= 1500 && std::gcd<std::uint64_t>(e.n, 10) == 1) direct += std::log(double(e.p));
    auto v = psi_chi(1500.0, t, 0, lam);
    CHECK(rel_err(v.real(), direct) < 1e-13);
    CHECK(std::abs(v.imag()) < 1e-12);
    CHECK_THROWS_AS(psi_chi(2500.0, t, 0, lam), RangeError);
}

TEST_CASE("modulus range") {
    CHECK_THROWS_AS(characters(0), DomainError);
    CHECK_THROWS_AS(characters(1000001), DomainError);
    CHECK_THROWS_AS(characters(7).is_real(6), DomainError);
}
