#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ffint/families.hpp"
#include "ffint/gf.hpp"

namespace ffint::cycletheory {

/// Quadratic extension F_{q^2} of a base field, represented as pairs
/// u + v*theta with theta^2 = t1*theta + t0. The modulus is x^2 - nu for the
/// smallest non-residue nu when q is odd, and x^2 + x + c for the
/// lexicographically smallest suitable c when q is even.
class QuadExt {
public:
    explicit QuadExt(const Field& base);

    struct Elt { FieldElement u, v; };

    const Field& base() const { return *base_; }
    FieldElement t0() const { return t0_; }
    FieldElement t1() const { return t1_; }

    Elt make(FieldElement u, FieldElement v) const { return {u, v}; }
    Elt one() const { return {base_->one(), base_->zero()}; }
    bool eq(const Elt& x, const Elt& y) const { return x.u == y.u && x.v == y.v; }
    bool is_one(const Elt& x) const { return eq(x, one()); }

    Elt mul(const Elt& x, const Elt& y) const;
    Elt pow(Elt x, std::uint64_t e) const;
    /// Multiplicative order; ord must divide the supplied multiple.
    std::uint64_t order(const Elt& x, std::uint64_t multiple) const;

    /// Both roots of monic x^2 - T x + D given that it has no base-field root.
    std::pair<Elt, Elt> quadratic_roots(FieldElement T, FieldElement D) const;

private:
    const Field* base_;
    FieldElement t0_, t1_;
    std::vector<std::uint32_t> sqrt_;           // odd q: code(x^2) -> code(x)
    std::vector<std::uint32_t> artin_;          // even q: code(x^2+x) -> code(x)
};

/// One prime-power clause of the same-length theorems: n = 1 (mod p^k), or
/// j = ord_{p^k}(n) with j | p-1, or j = ord_{p^k}(n) with k >= 2 and j = p.
bool same_length_clause(std::uint64_t n, std::uint64_t j, std::uint64_t prime, int k);

/// x^n has only cycles of length j or fixed points (clause above over every
/// prime power of q-1).
bool monomial_same_length_condition(const Field& F, std::uint64_t n, std::uint64_t j);

/// Exponents n for which x^n decomposes into 2-cycles with fixed elements
/// exactly {0, 1, -1}: {q-2, (q-3)/2} when 8 | q-1, {q-2} when 4 || q-1,
/// empty otherwise. Sorted ascending.
std::vector<std::uint64_t> monomial_involution_exponents(const Field& F);

/// Self-inverse condition for D_n(x, a), a in {1, -1}; this is the corrected
/// reading, validated exhaustively against the cycle oracle:
///   a = +1:  n^2 = +-1 (mod q-1)  and  n^2 = +-1 (mod q+1)
///   a = -1 (odd q):  n^2 = 1 (mod q-1)  and  n^2 in {1, q} (mod 2(q+1))
/// (characteristic 2 folds a = -1 into a = +1).
bool dickson_involution_condition(const Field& F, std::uint64_t n, int a);

/// The clause lists exactly as printed in the source theorems, evaluated per
/// prime power of q-1 and q+1. Kept for reconciliation reports; disagrees
/// with the oracle (e.g. q = 11, n = 19, a = 1).
bool dickson_involution_condition_verbatim(const Field& F, std::uint64_t n, int a);

/// Predicted cycle census of a Moebius interleaver from the characteristic
/// polynomial of its coefficient matrix.
struct MobiusPrediction {
    int case_id = 0;       // 1 irreducible, 2 distinct roots in F_q, 3 double root
    std::uint64_t k = 0;   // order of the root ratio (cases 1 and 2)
    std::uint64_t s = 0;
    std::map<std::uint64_t, std::uint64_t> census;
};

MobiusPrediction mobius_cycle_prediction(const QuadExt& ext, const families::MobiusParams& params);
MobiusPrediction mobius_cycle_prediction(const Field& F, const families::MobiusParams& params);

/// tr(A_T) = 0; when true the interleaver is self-inverse.
bool mobius_trace_zero_self_inverse(const Field& F, const families::MobiusParams& params);

/// R_n has a cycle of length j iff q+1 has a divisor s with ord_s(n) = j.
bool redei_has_cycle_of_length(const Field& F, const families::RedeiParams& params, std::uint64_t j);

/// Cycle counts N_j for j = 1..j_max from the recurrence
/// j N_j + sum_{i|j, i<j} i N_i + 1 = gcd(n^j - 1, q+1); zero counts omitted.
std::map<std::uint64_t, std::uint64_t>
redei_cycle_counts(const Field& F, const families::RedeiParams& params, std::uint64_t j_max);

/// All cycles of R_n have length j or 1 iff every divisor s of q+1 has
/// n = 1 (mod s) or ord_s(n) = j.
bool redei_all_same_length_condition(const Field& F, const families::RedeiParams& params, std::uint64_t j);

/// R_n is self-inverse iff n^2 = 1 (mod q+1).
bool redei_self_inverse_condition(const Field& F, const families::RedeiParams& params);

/// Prime-power form of the same-length condition, over the factorization of q+1.
bool redei_prime_power_condition(const Field& F, const families::RedeiParams& params, std::uint64_t j);

}  // namespace ffint::cycletheory
