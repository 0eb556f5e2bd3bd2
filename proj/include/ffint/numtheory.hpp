#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ffint::numtheory {

/// Prime factorization with primes in strictly increasing order.
struct Factorization {
    std::uint64_t value = 1;
    std::vector<std::pair<std::uint64_t, int>> factors;  // (prime, exponent)

    /// Value of prime^exponent for entry idx.
    std::uint64_t prime_power(std::size_t idx) const;
};

/// Trial-division factorization; n = 1 yields an empty factor list.
Factorization factorize(std::uint64_t n);

/// All divisors of n, sorted increasing.
std::vector<std::uint64_t> divisors(std::uint64_t n);

bool is_prime(std::uint64_t n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Least j >= 1 with n^j = 1 (mod s). Requires gcd(n, s) = 1; s = 1 gives 1.
std::uint64_t mult_order(std::int64_t n, std::uint64_t s);

/// Least j >= 1 with n^j = -1 (mod s), or nullopt when -1 is not a power of n.
std::optional<std::uint64_t> neg_order(std::int64_t n, std::uint64_t s);

/// The unique m in [1, s) with n*m = 1 (mod s). Requires s >= 2 and gcd(n, s) = 1.
std::uint64_t mod_inverse(std::int64_t n, std::uint64_t s);

/// Count of 1 <= k <= n coprime to n.
std::uint64_t euler_phi(std::uint64_t n);

}  // namespace ffint::numtheory
