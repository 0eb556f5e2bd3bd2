#include "ffint/families.hpp"

#include <numeric>
#include <string>

#include "ffint/numtheory.hpp"

namespace ffint::families {

bool monomial_is_permutation(const Field& F, std::uint64_t n) {
    if (n < 1) return false;
    return std::gcd(n, F.q() - 1) == 1;
}

std::uint64_t monomial_inverse_exponent(const Field& F, std::uint64_t n) {
    if (!monomial_is_permutation(F, n))
        throw NotAPermutation("x^" + std::to_string(n) + ": gcd(n,q-1) != 1");
    std::uint64_t L = F.q() - 1;
    if (L == 1) return 1;  // F_2: every monomial is x
    return numtheory::mod_inverse(static_cast<std::int64_t>(n % L), L);
}

Permutation monomial_interleaver(const Field& F, std::uint64_t n) {
    if (!monomial_is_permutation(F, n))
        throw NotAPermutation("x^" + std::to_string(n) + ": gcd(n,q-1) != 1");
    std::uint64_t q = F.q(), L = q - 1;
    std::vector<std::uint32_t> image(q);
    image[0] = 0;
    for (std::uint64_t i = 1; i < q; ++i) {
        std::uint64_t v = numtheory::mulmod(n % L, i, L);
        image[i] = static_cast<std::uint32_t>(v == 0 ? L : v);
    }
    return Permutation(std::move(image));
}

FieldElement dickson_a_element(const Field& F, int a) {
    if (a == 0) return F.zero();
    if (a == 1) return F.one();
    if (a == -1) return F.neg(F.one());
    throw InvalidArgument("Dickson parameter a must be in {0, 1, -1}");
}

FieldElement dickson_eval(const Field& F, std::uint64_t n, FieldElement a, FieldElement x) {
    FieldElement two = F.add(F.one(), F.one());
    if (n == 0) return two;
    FieldElement prev = two, cur = x;
    for (std::uint64_t k = 2; k <= n; ++k) {
        FieldElement next = F.sub(F.mul(x, cur), F.mul(a, prev));
        prev = cur;
        cur = next;
    }
    return cur;
}

FieldElement dickson_eval(const Field& F, const DicksonParams& params, FieldElement x) {
    return dickson_eval(F, params.n, dickson_a_element(F, params.a), x);
}

bool dickson_is_permutation(const Field& F, const DicksonParams& params) {
    dickson_a_element(F, params.a);  // validates a
    if (params.n < 1) return false;
    if (params.a == 0) return monomial_is_permutation(F, params.n);
    return std::gcd(params.n, F.q() * F.q() - 1) == 1;
}

std::uint64_t dickson_inverse_degree(const Field& F, const DicksonParams& params) {
    if (!dickson_is_permutation(F, params))
        throw NotAPermutation("D_" + std::to_string(params.n) + ": permutation condition fails");
    if (params.a == 0) return monomial_inverse_exponent(F, params.n);
    std::uint64_t M = F.q() * F.q() - 1;
    return numtheory::mod_inverse(static_cast<std::int64_t>(params.n % M), M);
}

Permutation dickson_interleaver(const Field& F, const DicksonParams& params) {
    if (!dickson_is_permutation(F, params))
        throw NotAPermutation("D_" + std::to_string(params.n) + ": permutation condition fails");
    FieldElement a = dickson_a_element(F, params.a);
    return interleaver_from_field_map(F, [&](FieldElement x) { return dickson_eval(F, params.n, a, x); });
}

MobiusParams::MobiusParams(FieldElement a_, FieldElement b_, FieldElement c_, FieldElement d_)
    : a(a_), b(b_), c(c_), d(d_) {
    const Field& F = a.field();
    if (c.is_zero()) throw InvalidArgument("Moebius transformation requires c != 0");
    if (F.sub(F.mul(a, d), F.mul(b, c)).is_zero())
        throw InvalidArgument("Moebius transformation requires ad - bc != 0");
}

FieldElement mobius_eval(const Field& F, const MobiusParams& params, FieldElement x) {
    FieldElement denom = F.add(F.mul(params.c, x), params.d);
    if (denom.is_zero()) return F.div(params.a, params.c);  // x = -d/c
    return F.div(F.add(F.mul(params.a, x), params.b), denom);
}

MobiusParams mobius_inverse_params(const MobiusParams& params) {
    const Field& F = params.a.field();
    return MobiusParams(params.d, F.neg(params.b), F.neg(params.c), params.a);
}

Permutation mobius_interleaver(const Field& F, const MobiusParams& params) {
    return interleaver_from_field_map(F, [&](FieldElement x) { return mobius_eval(F, params, x); });
}

RedeiParams::RedeiParams(std::uint64_t n_, FieldElement a_) : n(n_), a(a_) {
    const Field& F = a.field();
    if (F.p() == 2) throw InvalidArgument("Redei functions require odd characteristic");
    if (a.is_zero()) throw InvalidArgument("Redei parameter a must be nonzero");
    if (F.is_square(a)) throw InvalidArgument("Redei parameter a must be a non-square");
    if (n < 1) throw InvalidArgument("Redei degree must be >= 1");
}

std::pair<std::vector<FieldElement>, std::vector<FieldElement>>
redei_numerator_denominator(const Field& F, const RedeiParams& params) {
    // iterate (G_{k+1}, H_{k+1}) = (x G_k + a H_k, G_k + x H_k) from (x, 1)
    std::vector<FieldElement> G{F.zero(), F.one()};  // x
    std::vector<FieldElement> H{F.one()};            // 1
    for (std::uint64_t k = 1; k < params.n; ++k) {
        std::vector<FieldElement> G2(G.size() + 1, F.zero());
        std::vector<FieldElement> H2(G.size(), F.zero());
        for (std::size_t i = 0; i < G.size(); ++i) {
            G2[i + 1] = F.add(G2[i + 1], G[i]);               // x * G
            H2[i] = F.add(H2[i], G[i]);                       // G
        }
        for (std::size_t i = 0; i < H.size(); ++i) {
            G2[i] = F.add(G2[i], F.mul(params.a, H[i]));      // a * H
            H2[i + 1] = F.add(H2[i + 1], H[i]);               // x * H
        }
        G = std::move(G2);
        H = std::move(H2);
    }
    return {std::move(G), std::move(H)};
}

namespace {

// (g + h sqrt(a)) pairs multiplied in F_q[sqrt(a)].
struct Pair { FieldElement g, h; };

Pair pair_mul(const Field& F, FieldElement a, Pair u, Pair v) {
    return {F.add(F.mul(u.g, v.g), F.mul(a, F.mul(u.h, v.h))),
            F.add(F.mul(u.g, v.h), F.mul(u.h, v.g))};
}

// (x + sqrt(a))^n by binary exponentiation.
Pair gh_at_point(const Field& F, std::uint64_t n, FieldElement a, FieldElement x) {
    Pair base{x, F.one()};
    Pair acc{F.one(), F.zero()};
    while (n) {
        if (n & 1) acc = pair_mul(F, a, acc, base);
        base = pair_mul(F, a, base, base);
        n >>= 1;
    }
    return acc;
}

}  // namespace

FieldElement redei_eval(const Field& F, const RedeiParams& params, FieldElement x) {
    Pair gh = gh_at_point(F, params.n, params.a, x);
    if (gh.h.is_zero())
        throw PoleEncountered("H_n vanished; R_n is not a permutation for these parameters");
    return F.div(gh.g, gh.h);
}

bool redei_is_permutation(const Field& F, const RedeiParams& params) {
    return std::gcd(params.n, F.q() + 1) == 1;
}

std::uint64_t redei_inverse_degree(const Field& F, const RedeiParams& params) {
    if (!redei_is_permutation(F, params))
        throw NotAPermutation("R_" + std::to_string(params.n) + ": gcd(n,q+1) != 1");
    std::uint64_t M = F.q() + 1;
    return numtheory::mod_inverse(static_cast<std::int64_t>(params.n % M), M);
}

Permutation redei_interleaver(const Field& F, const RedeiParams& params) {
    if (!redei_is_permutation(F, params))
        throw NotAPermutation("R_" + std::to_string(params.n) + ": gcd(n,q+1) != 1");
    return interleaver_from_field_map(F, [&](FieldElement x) { return redei_eval(F, params, x); });
}

}  // namespace ffint::families
