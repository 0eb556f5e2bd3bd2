#include "ffint/cycletheory.hpp"

#include <numeric>
#include <optional>
#include <string>

#include "ffint/numtheory.hpp"

namespace ffint::cycletheory {

using numtheory::mulmod;
using numtheory::powmod;

QuadExt::QuadExt(const Field& base) : base_(&base), t0_(base.zero()), t1_(base.zero()) {
    const Field& F = *base_;
    std::uint64_t q = F.q();
    if (F.p() != 2) {
        // theta^2 = nu for the smallest non-residue nu (by encoding order)
        for (std::uint64_t enc = 1; enc < q; ++enc) {
            FieldElement c = F.from_encoding(enc);
            if (!F.is_square(c)) { t0_ = c; break; }
        }
        if (t0_.is_zero()) throw Error("no non-residue found");  // q = 2 only, excluded
        sqrt_.assign(q, 0);
        for (std::uint64_t code = 0; code < q; ++code) {
            FieldElement x = F.from_code(code);
            sqrt_[F.mul(x, x).code()] = static_cast<std::uint32_t>(code);
        }
    } else {
        // theta^2 = theta + c for the lexicographically smallest c making
        // x^2 + x + c irreducible
        bool found = false;
        for (std::uint64_t enc = 0; enc < q && !found; ++enc) {
            FieldElement c = F.from_encoding(enc);
            bool has_root = false;
            for (std::uint64_t code = 0; code < q; ++code) {
                FieldElement x = F.from_code(code);
                if (F.add(F.add(F.mul(x, x), x), c).is_zero()) { has_root = true; break; }
            }
            if (!has_root) { t0_ = c; t1_ = F.one(); found = true; }
        }
        if (!found) throw Error("no irreducible quadratic found");  // unreachable
        artin_.assign(q, 0);
        for (std::uint64_t code = 0; code < q; ++code) {
            FieldElement x = F.from_code(code);
            artin_[F.add(F.mul(x, x), x).code()] = static_cast<std::uint32_t>(code);
        }
    }
}

QuadExt::Elt QuadExt::mul(const Elt& x, const Elt& y) const {
    const Field& F = *base_;
    // (u1 + v1 t)(u2 + v2 t) = u1u2 + (u1v2 + u2v1) t + v1v2 t^2,
    // t^2 = t1 t + t0
    FieldElement uu = F.mul(x.u, y.u);
    FieldElement vv = F.mul(x.v, y.v);
    FieldElement cross = F.add(F.mul(x.u, y.v), F.mul(x.v, y.u));
    return {F.add(uu, F.mul(vv, t0_)), F.add(cross, F.mul(vv, t1_))};
}

QuadExt::Elt QuadExt::pow(Elt x, std::uint64_t e) const {
    Elt acc = one();
    while (e) {
        if (e & 1) acc = mul(acc, x);
        x = mul(x, x);
        e >>= 1;
    }
    return acc;
}

std::uint64_t QuadExt::order(const Elt& x, std::uint64_t multiple) const {
    if (!is_one(pow(x, multiple)))
        throw InvalidArgument("order: element order does not divide the given multiple");
    std::uint64_t e = multiple;
    for (auto [p, k] : numtheory::factorize(multiple).factors) {
        for (int i = 0; i < k && e % p == 0 && is_one(pow(x, e / p)); ++i) e /= p;
    }
    return e;
}

std::pair<QuadExt::Elt, QuadExt::Elt> QuadExt::quadratic_roots(FieldElement T, FieldElement D) const {
    const Field& F = *base_;
    if (F.p() != 2) {
        FieldElement four = F.from_int(4);
        FieldElement disc = F.sub(F.mul(T, T), F.mul(four, D));
        if (disc.is_zero() || F.is_square(disc))
            throw InvalidArgument("quadratic_roots: polynomial is not irreducible");
        // disc = nu * w^2
        FieldElement w = F.from_code(sqrt_[F.div(disc, t0_).code()]);
        FieldElement half = F.inv(F.from_int(2));
        FieldElement u = F.mul(T, half);
        FieldElement v = F.mul(w, half);
        return {Elt{u, v}, Elt{u, F.neg(v)}};
    }
    if (T.is_zero())
        throw InvalidArgument("quadratic_roots: zero trace is a double root in characteristic 2");
    // x = T z reduces to z^2 + z + e = 0 with e = D / T^2;
    // z = u + theta where u^2 + u = e + t0 (solvable: the trace vanishes)
    FieldElement e = F.div(D, F.mul(T, T));
    FieldElement target = F.add(e, t0_);
    FieldElement u = F.from_code(artin_[target.code()]);
    if (!(F.add(F.mul(u, u), u) == target))
        throw InvalidArgument("quadratic_roots: polynomial is not irreducible");
    Elt z1{F.mul(T, u), T};                     // T*(u + theta)
    Elt z2{F.add(F.mul(T, u), T), T};           // T*(u + 1 + theta)
    return {z1, z2};
}

bool same_length_clause(std::uint64_t n, std::uint64_t j, std::uint64_t prime, int k) {
    std::uint64_t pk = 1;
    for (int i = 0; i < k; ++i) pk *= prime;
    if (n % pk == 1 % pk) return true;
    std::uint64_t ord = numtheory::mult_order(static_cast<std::int64_t>(n % pk), pk);
    if (ord != j) return false;
    if ((prime - 1) % j == 0) return true;
    return k >= 2 && j == prime;
}

bool monomial_same_length_condition(const Field& F, std::uint64_t n, std::uint64_t j) {
    if (!families::monomial_is_permutation(F, n))
        throw NotAPermutation("monomial_same_length_condition: gcd(n,q-1) != 1");
    if (j < 1) throw InvalidArgument("cycle length must be >= 1");
    for (auto [p, k] : numtheory::factorize(F.q() - 1).factors)
        if (!same_length_clause(n, j, p, k)) return false;
    return true;
}

std::vector<std::uint64_t> monomial_involution_exponents(const Field& F) {
    std::uint64_t q = F.q();
    if (q % 2 == 0) return {};
    int k0 = 0;
    for (std::uint64_t t = q - 1; t % 2 == 0; t /= 2) ++k0;
    if (k0 > 2) return {(q - 3) / 2, q - 2};
    if (k0 == 2) return {q - 2};
    return {};
}

bool dickson_involution_condition(const Field& F, std::uint64_t n, int a) {
    if (a != 1 && a != -1) throw InvalidArgument("Dickson involution theorems require a = +-1");
    std::uint64_t q = F.q();
    if (std::gcd(n, q * q - 1) != 1)
        throw NotAPermutation("dickson_involution_condition: gcd(n,q^2-1) != 1");
    auto sq_mod = [n](std::uint64_t N) {
        return mulmod(n % N, n % N, N);
    };
    if (a == 1 || F.p() == 2) {
        std::uint64_t r1 = sq_mod(q - 1), r2 = sq_mod(q + 1);
        bool ok1 = r1 == 1 % (q - 1) || r1 == (q - 2) % (q - 1);
        bool ok2 = r2 == 1 || r2 == q;
        return ok1 && ok2;
    }
    std::uint64_t M = 2 * (q + 1);
    std::uint64_t r1 = sq_mod(q - 1), rM = sq_mod(M);
    return r1 == 1 % (q - 1) && (rM == 1 || rM == q % M);
}

bool dickson_involution_condition_verbatim(const Field& F, std::uint64_t n, int a) {
    if (a != 1 && a != -1) throw InvalidArgument("Dickson involution theorems require a = +-1");
    std::uint64_t q = F.q();
    if (std::gcd(n, q * q - 1) != 1)
        throw NotAPermutation("dickson_involution_condition: gcd(n,q^2-1) != 1");

    auto group1 = [&](std::uint64_t p, std::uint64_t pk) {  // prime powers of q-1
        auto ng = numtheory::neg_order(static_cast<std::int64_t>(n % pk), pk);
        bool clause_b = ng && *ng == 2 && (p - 1) % 4 == 0;
        if (a == 1) return (n % pk == 1 % pk && pk == 2) || clause_b;
        return ((2 * (n + 1)) % pk == 0 && (pk == 2 || pk == 4)) || clause_b;
    };
    auto group2 = [&](std::uint64_t p, std::uint64_t pk, int k) {  // prime powers of q+1
        std::uint64_t ord = numtheory::mult_order(static_cast<std::int64_t>(n % pk), pk);
        if (a == 1) {
            if (n % pk == 1 % pk || n % pk == (pk - 1) % pk) return true;
            return ord == 2 && p == 2 && k >= 2 && n % pk != (pk - 1) % pk;
        }
        if ((2 * (n + 1)) % pk == 0) return true;
        if (n % pk == 1 % pk) return true;
        return ord == 2 && k >= 2 && p == 2;
    };

    for (auto [p, k] : numtheory::factorize(q - 1).factors) {
        std::uint64_t pk = 1;
        for (int i = 0; i < k; ++i) pk *= p;
        if (!group1(p, pk)) return false;
    }
    for (auto [p, k] : numtheory::factorize(q + 1).factors) {
        std::uint64_t pk = 1;
        for (int i = 0; i < k; ++i) pk *= p;
        if (!group2(p, pk, k)) return false;
    }
    return true;
}

namespace {

void add_cycles(std::map<std::uint64_t, std::uint64_t>& census, std::uint64_t len, std::uint64_t count) {
    if (len >= 1 && count >= 1) census[len] += count;
}

MobiusPrediction predict(const Field& F, const QuadExt* ext, const families::MobiusParams& params) {
    std::uint64_t q = F.q();
    FieldElement T = F.add(params.a, params.d);
    FieldElement D = F.sub(F.mul(params.a, params.d), F.mul(params.b, params.c));

    // roots of t(x) = x^2 - T x + D in the base field
    std::vector<FieldElement> roots;
    for (std::uint64_t code = 0; code < q && roots.size() < 2; ++code) {
        FieldElement x = F.from_code(code);
        if (F.add(F.sub(F.mul(x, x), F.mul(T, x)), D).is_zero()) roots.push_back(x);
    }

    MobiusPrediction pred;
    if (roots.size() == 1) {
        // double root (alpha_1 = T - alpha_1); nonzero because D != 0
        pred.case_id = 3;
        std::uint64_t p = F.p();
        std::uint64_t pm1 = q / p;  // p^{m-1}
        add_cycles(pred.census, p, pm1 - 1);
        add_cycles(pred.census, p - 1, 1);
        add_cycles(pred.census, 1, 1);
    } else if (roots.size() == 2) {
        pred.case_id = 2;
        FieldElement r = F.div(roots[0], roots[1]);
        // order of alpha^i in the base field is (q-1)/gcd(i, q-1)
        pred.k = (q - 1) / std::gcd(r.code(), q - 1);
        pred.s = (q - 1) / pred.k;
        add_cycles(pred.census, pred.k, pred.s - 1);
        add_cycles(pred.census, pred.k - 1, 1);
        add_cycles(pred.census, 1, 2);
    } else {
        pred.case_id = 1;
        std::optional<QuadExt> local;
        if (!ext) local.emplace(F);
        const QuadExt& E = ext ? *ext : *local;
        auto [r1, r2] = E.quadratic_roots(T, D);
        // ratio alpha_1/alpha_2 = alpha_1^2 / D
        QuadExt::Elt ratio = E.mul(E.mul(r1, r1), E.make(F.inv(D), F.zero()));
        pred.k = E.order(ratio, q + 1);
        pred.s = (q + 1) / pred.k;
        add_cycles(pred.census, pred.k, pred.s - 1);
        add_cycles(pred.census, pred.k - 1, 1);
    }

    std::uint64_t total = 0;
    for (auto [len, cnt] : pred.census) total += len * cnt;
    if (total != q) throw InconsistentCount("Moebius prediction does not cover F_q");
    return pred;
}

}  // namespace

MobiusPrediction mobius_cycle_prediction(const QuadExt& ext, const families::MobiusParams& params) {
    return predict(ext.base(), &ext, params);
}

MobiusPrediction mobius_cycle_prediction(const Field& F, const families::MobiusParams& params) {
    return predict(F, nullptr, params);
}

bool mobius_trace_zero_self_inverse(const Field& F, const families::MobiusParams& params) {
    return F.add(params.a, params.d).is_zero();
}

bool redei_has_cycle_of_length(const Field& F, const families::RedeiParams& params, std::uint64_t j) {
    if (!families::redei_is_permutation(F, params))
        throw NotAPermutation("redei_has_cycle_of_length: gcd(n,q+1) != 1");
    for (auto s : numtheory::divisors(F.q() + 1))
        if (numtheory::mult_order(static_cast<std::int64_t>(params.n % s), s) == j) return true;
    return false;
}

std::map<std::uint64_t, std::uint64_t>
redei_cycle_counts(const Field& F, const families::RedeiParams& params, std::uint64_t j_max) {
    if (!families::redei_is_permutation(F, params))
        throw NotAPermutation("redei_cycle_counts: gcd(n,q+1) != 1");
    std::uint64_t M = F.q() + 1;
    std::map<std::uint64_t, std::uint64_t> N;
    for (std::uint64_t j = 1; j <= j_max; ++j) {
        std::uint64_t x = powmod(params.n % M, j, M);
        std::uint64_t g = std::gcd((x + M - 1) % M, M);  // gcd(0, M) = M
        std::uint64_t sub = 1;  // the extra fixed point at 0
        for (std::uint64_t i = 1; i < j; ++i)
            if (j % i == 0 && N.count(i)) sub += i * N.at(i);
        if (g < sub) throw InconsistentCount("Redei N_j recurrence went negative");
        std::uint64_t num = g - sub;
        if (num % j) throw InconsistentCount("Redei N_j recurrence is not divisible by j");
        if (num / j) N[j] = num / j;
    }
    return N;
}

bool redei_all_same_length_condition(const Field& F, const families::RedeiParams& params, std::uint64_t j) {
    if (!families::redei_is_permutation(F, params))
        throw NotAPermutation("redei_all_same_length_condition: gcd(n,q+1) != 1");
    for (auto s : numtheory::divisors(F.q() + 1)) {
        if (params.n % s == 1 % s) continue;
        if (numtheory::mult_order(static_cast<std::int64_t>(params.n % s), s) == j) continue;
        return false;
    }
    return true;
}

bool redei_self_inverse_condition(const Field& F, const families::RedeiParams& params) {
    if (!families::redei_is_permutation(F, params))
        throw NotAPermutation("redei_self_inverse_condition: gcd(n,q+1) != 1");
    std::uint64_t M = F.q() + 1;
    return mulmod(params.n % M, params.n % M, M) == 1 % M;
}

bool redei_prime_power_condition(const Field& F, const families::RedeiParams& params, std::uint64_t j) {
    if (!families::redei_is_permutation(F, params))
        throw NotAPermutation("redei_prime_power_condition: gcd(n,q+1) != 1");
    for (auto [p, k] : numtheory::factorize(F.q() + 1).factors)
        if (!same_length_clause(params.n, j, p, k)) return false;
    return true;
}

}  // namespace ffint::cycletheory
