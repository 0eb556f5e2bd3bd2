#include "ffint/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ffint/errors.hpp"

namespace ffint::numtheory {

std::uint64_t Factorization::prime_power(std::size_t idx) const {
    std::uint64_t pw = 1;
    for (int i = 0; i < factors[idx].second; ++i) pw *= factors[idx].first;
    return pw;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw InvalidArgument("factorize: n must be positive");
    Factorization f;
    f.value = n;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        int e = 0;
        while (n % d == 0) { n /= d; ++e; }
        f.factors.emplace_back(d, e);
    }
    if (n > 1) f.factors.emplace_back(n, 1);
    return f;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    auto f = factorize(n);
    std::vector<std::uint64_t> divs{1};
    for (auto [p, e] : f.factors) {
        std::size_t base = divs.size();
        std::uint64_t pw = 1;
        for (int i = 0; i < e; ++i) {
            pw *= p;
            for (std::size_t k = 0; k < base; ++k) divs.push_back(divs[k] * pw);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % mod);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    if (mod == 1) return 0;
    std::uint64_t r = 1;
    base %= mod;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1;
    }
    return r;
}

namespace {

std::uint64_t normalize(std::int64_t n, std::uint64_t s) {
    std::int64_t r = n % static_cast<std::int64_t>(s);
    if (r < 0) r += static_cast<std::int64_t>(s);
    return static_cast<std::uint64_t>(r);
}

void require_coprime(std::uint64_t n, std::uint64_t s, const char* who) {
    if (std::gcd(n, s) != 1)
        throw InvalidArgument(std::string(who) + ": arguments are not coprime");
}

}  // namespace

std::uint64_t mult_order(std::int64_t n, std::uint64_t s) {
    if (s == 0) throw InvalidArgument("mult_order: modulus must be positive");
    if (s == 1) return 1;
    std::uint64_t a = normalize(n, s);
    require_coprime(a, s, "mult_order");
    std::uint64_t x = a;
    std::uint64_t j = 1;
    while (x != 1) {
        x = mulmod(x, a, s);
        ++j;
    }
    return j;
}

std::optional<std::uint64_t> neg_order(std::int64_t n, std::uint64_t s) {
    if (s == 0) throw InvalidArgument("neg_order: modulus must be positive");
    std::uint64_t a = normalize(n, s);
    if (s == 1) return 1;  // everything is = -1 = 0 (mod 1)
    require_coprime(a, s, "neg_order");
    std::uint64_t x = a;
    std::uint64_t j = 1;
    while (true) {
        if (x == s - 1) return j;
        if (x == 1) return std::nullopt;  // cycled back without hitting -1
        x = mulmod(x, a, s);
        ++j;
    }
}

std::uint64_t mod_inverse(std::int64_t n, std::uint64_t s) {
    if (s < 2) throw InvalidArgument("mod_inverse: modulus must be >= 2");
    std::uint64_t a = normalize(n, s);
    require_coprime(a, s, "mod_inverse");
    // extended Euclid on (a, s)
    std::int64_t t0 = 0, t1 = 1;
    std::int64_t r0 = static_cast<std::int64_t>(s), r1 = static_cast<std::int64_t>(a);
    while (r1 != 0) {
        std::int64_t qt = r0 / r1;
        std::int64_t tmp = t0 - qt * t1;
        t0 = t1; t1 = tmp;
        tmp = r0 - qt * r1;
        r0 = r1; r1 = tmp;
    }
    std::int64_t m = t0 % static_cast<std::int64_t>(s);
    if (m < 0) m += static_cast<std::int64_t>(s);
    return static_cast<std::uint64_t>(m);
}

std::uint64_t euler_phi(std::uint64_t n) {
    auto f = factorize(n);
    std::uint64_t phi = n;
    for (auto [p, e] : f.factors) {
        phi /= p;
        phi *= p - 1;
    }
    return phi;
}

}  // namespace ffint::numtheory
