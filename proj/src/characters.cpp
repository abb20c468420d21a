#include "epnt/characters.hpp"

#include <cmath>
#include <map>
#include <numeric>

#include "epnt/errors.hpp"
#include "epnt/rigor.hpp"

namespace epnt {

namespace {

std::vector<std::pair<std::uint64_t, int>> factor(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> f;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    unsigned __int128 r = 1 % m, x = b % m;
    while (e) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t primitive_root_mod_p(std::uint64_t p) {
    if (p == 2) return 1;
    auto fs = factor(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto [r, e] : fs)
            if (powmod(g, (p - 1) / r, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw DomainError("no primitive root found");
}

std::uint64_t ipow(std::uint64_t p, int e) {
    std::uint64_t v = 1;
    while (e-- > 0) v *= p;
    return v;
}

int valuation(std::int64_t m, std::uint64_t p) {
    int v = 0;
    while (m % static_cast<std::int64_t>(p) == 0) m /= static_cast<std::int64_t>(p), ++v;
    return v;
}

using Poly = std::vector<std::int64_t>;

// exact division of a by the monic b
Poly poly_div_exact(const Poly& a, const Poly& b) {
    Poly r = a, q(a.size() - b.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        std::int64_t c = r[i + b.size() - 1];
        q[i] = c;
        if (c)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= c * b[j];
    }
    return q;
}

Poly cyclotomic(std::int64_t n) {
    Poly f(static_cast<std::size_t>(n) + 1, 0);
    f[0] = -1;
    f[static_cast<std::size_t>(n)] = 1;
    for (std::int64_t d = 1; d < n; ++d)
        if (n % d == 0) f = poly_div_exact(f, cyclotomic(d));
    return f;
}

class CyclotomicReducer {
public:
    explicit CyclotomicReducer(std::int64_t n) : phi_(cyclotomic(n)) {}

    std::optional<std::int64_t> integer_value(Poly c) const {
        std::size_t deg = phi_.size() - 1;
        for (std::size_t i = c.size(); i-- > deg;) {
            std::int64_t lead = c[i];
            if (!lead) continue;
            for (std::size_t j = 0; j <= deg; ++j) c[i - deg + j] -= lead * phi_[j];
        }
        for (std::size_t i = 1; i < std::min(deg, c.size()); ++i)
            if (c[i]) return std::nullopt;
        return c.empty() ? 0 : c[0];
    }

private:
    Poly phi_;
};

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (auto [p, e] : factor(n)) r = r / p * (p - 1);
    return r;
}

CharTable::CharTable(std::uint64_t q) : q_(q) {
    if (q < 1 || q > 1000000) throw DomainError("characters need 1 <= q <= 10^6");
    std::vector<std::vector<std::int32_t>> tables;  // per component, indexed by a mod p^e
    std::vector<std::uint64_t> mods;
    for (auto [p, e] : factor(q)) {
        std::uint64_t m = ipow(p, e);
        if (p == 2) {
            if (e == 1) continue;
            std::vector<std::int32_t> sign(m, -1);
            for (std::uint64_t a = 1; a < m; a += 2) sign[a] = (a % 4 == 3) ? 1 : 0;
            comps_.push_back({Kind::two_sign, 2, e, 2});
            tables.push_back(sign);
            mods.push_back(m);
            if (e >= 3) {
                std::int64_t ord = static_cast<std::int64_t>(m / 4);
                std::vector<std::int32_t> five(m, -1), lg(m, -1);
                std::uint64_t v = 1;
                for (std::int64_t j = 0; j < ord; ++j, v = v * 5 % m) lg[v] = static_cast<std::int32_t>(j);
                for (std::uint64_t a = 1; a < m; a += 2) five[a] = lg[a % 4 == 1 ? a : m - a];
                comps_.push_back({Kind::two_five, 2, e, ord});
                tables.push_back(five);
                mods.push_back(m);
            }
            continue;
        }
        std::uint64_t g = primitive_root_mod_p(p);
        if (e >= 2 && powmod(g, p - 1, p * p) == 1) g += p;
        auto ord = static_cast<std::int64_t>(m / p * (p - 1));
        std::vector<std::int32_t> lg(m, -1);
        std::uint64_t v = 1;
        for (std::int64_t j = 0; j < ord; ++j, v = v * g % m) lg[v] = static_cast<std::int32_t>(j);
        comps_.push_back({Kind::odd, p, e, ord});
        tables.push_back(lg);
        mods.push_back(m);
    }
    for (const auto& c : comps_) {
        count_ *= static_cast<std::size_t>(c.order);
        exponent_ = std::lcm(exponent_, c.order);
    }
    std::size_t nc = comps_.size();
    logs_.assign(q * std::max<std::size_t>(nc, 1), -1);
    for (std::uint64_t a = 0; a < q; ++a) {
        bool unit = std::gcd(a, q) == 1;
        for (std::size_t c = 0; c < nc; ++c) logs_[a * nc + c] = unit ? tables[c][a % mods[c]] : -1;
        if (nc == 0) logs_[a] = unit ? 0 : -1;
    }
}

std::vector<std::int64_t> CharTable::exponents_of(std::size_t chi) const {
    if (chi >= count_) throw DomainError("character index out of range");
    std::vector<std::int64_t> k(comps_.size());
    for (std::size_t c = 0; c < comps_.size(); ++c) {
        k[c] = static_cast<std::int64_t>(chi % static_cast<std::size_t>(comps_[c].order));
        chi /= static_cast<std::size_t>(comps_[c].order);
    }
    return k;
}

std::optional<Rotation> CharTable::value(std::size_t chi, std::uint64_t a) const {
    a %= q_;
    std::size_t nc = comps_.size();
    if (nc == 0) {
        if (logs_[a] < 0) return std::nullopt;
        return Rotation{0, 1};
    }
    if (logs_[a * nc] < 0) return std::nullopt;
    auto k = exponents_of(chi);
    __int128 num = 0;
    for (std::size_t c = 0; c < nc; ++c) {
        __int128 scale = exponent_ / comps_[c].order;
        num = (num + static_cast<__int128>(k[c]) * logs_[a * nc + c] % comps_[c].order * scale) % exponent_;
    }
    return Rotation{static_cast<std::int64_t>(num), exponent_};
}

std::complex<double> CharTable::complex_value(std::size_t chi, std::uint64_t a) const {
    auto r = value(chi, a);
    if (!r) return {0.0, 0.0};
    if (r->num == 0) return {1.0, 0.0};
    if (2 * r->num == r->den) return {-1.0, 0.0};
    double t = 2.0 * M_PI * static_cast<double>(r->num) / static_cast<double>(r->den);
    return {std::cos(t), std::sin(t)};
}

std::vector<std::complex<double>> CharTable::value_table(std::size_t chi) const {
    std::vector<std::complex<double>> v(q_);
    for (std::uint64_t a = 0; a < q_; ++a) v[a] = complex_value(chi, a);
    return v;
}

bool CharTable::is_principal(std::size_t chi) const {
    for (auto k : exponents_of(chi))
        if (k) return false;
    return true;
}

bool CharTable::is_real(std::size_t chi) const {
    auto k = exponents_of(chi);
    for (std::size_t c = 0; c < comps_.size(); ++c)
        if ((2 * k[c]) % comps_[c].order) return false;
    return true;
}

std::uint64_t CharTable::conductor(std::size_t chi) const {
    auto k = exponents_of(chi);
    std::uint64_t f = 1;
    std::int64_t sign_k = 0;
    for (std::size_t c = 0; c < comps_.size(); ++c) {
        const auto& comp = comps_[c];
        if (comp.kind == Kind::odd) {
            if (k[c] == 0) continue;
            std::int64_t m = comp.order / std::gcd(k[c], comp.order);
            f *= ipow(comp.p, 1 + valuation(m, comp.p));
        } else if (comp.kind == Kind::two_sign) {
            sign_k = k[c];
            // with e = 2 there is no five component following
            if (comp.e == 2 && sign_k) f *= 4;
        } else {
            std::int64_t m = comp.order / std::gcd(k[c], comp.order);
            if (m == 1)
                f *= sign_k ? 4 : 1;
            else
                f *= ipow(2, 2 + valuation(m, 2));
        }
    }
    return f;
}

std::complex<double> psi_chi(double x, const CharTable& table, std::size_t chi,
                             const LambdaTable& lambda) {
    if (x > static_cast<double>(lambda.limit()))
        throw RangeError("argument exceeds the sieve limit " + std::to_string(lambda.limit()));
    auto vals = table.value_table(chi);
    KahanSum re, im;
    std::size_t end = lambda.upper_index(x);
    const auto& e = lambda.entries();
    std::uint64_t q = table.modulus();
    for (std::size_t i = 0; i < end; ++i) {
        auto v = vals[e[i].n % q];
        if (v == std::complex<double>(0.0, 0.0)) continue;
        double l = std::log(static_cast<double>(e[i].p));
        re.add(v.real() * l);
        im.add(v.imag() * l);
    }
    return {re.value(), im.value()};
}

std::optional<std::int64_t> cyclotomic_integer_value(const std::vector<std::int64_t>& counts) {
    if (counts.empty()) return 0;
    return CyclotomicReducer(static_cast<std::int64_t>(counts.size())).integer_value(counts);
}

std::optional<std::int64_t> orthogonality_sum(const CharTable& table, std::size_t chi1,
                                              std::size_t chi2) {
    std::int64_t n = table.exponent();
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
    for (std::uint64_t a = 0; a < table.modulus(); ++a) {
        auto u = table.value(chi1, a), v = table.value(chi2, a);
        if (!u) continue;
        counts[static_cast<std::size_t>(((u->num - v->num) % n + n) % n)] += 1;
    }
    return cyclotomic_integer_value(counts);
}

OrthogonalityReport orthogonality_check(const CharTable& table) {
    OrthogonalityReport rep;
    std::int64_t n = table.exponent();
    std::size_t h = table.size();
    std::vector<std::uint64_t> units;
    for (std::uint64_t a = 0; a < table.modulus(); ++a)
        if (table.value(0, a)) units.push_back(a);
    std::vector<std::vector<std::int64_t>> ang(h, std::vector<std::int64_t>(units.size()));
    for (std::size_t c = 0; c < h; ++c)
        for (std::size_t i = 0; i < units.size(); ++i) ang[c][i] = table.value(c, units[i])->num;

    CyclotomicReducer red(n);
    std::map<std::vector<std::int64_t>, std::optional<std::int64_t>> memo;
    auto phi = static_cast<std::int64_t>(h);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n));
    for (std::size_t c1 = 0; c1 < h; ++c1) {
        for (std::size_t c2 = 0; c2 < h; ++c2) {
            std::fill(counts.begin(), counts.end(), 0);
            for (std::size_t i = 0; i < units.size(); ++i)
                counts[static_cast<std::size_t>(((ang[c1][i] - ang[c2][i]) % n + n) % n)] += 1;
            auto it = memo.find(counts);
            if (it == memo.end()) it = memo.emplace(counts, red.integer_value(counts)).first;
            std::int64_t want = c1 == c2 ? phi : 0;
            ++rep.pairs;
            if (!it->second || *it->second != want) {
                if (rep.failures++ == 0) rep.first_failure = {c1, c2};
            }
        }
    }
    return rep;
}

}  // namespace epnt
