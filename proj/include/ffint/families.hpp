#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ffint/gf.hpp"
#include "ffint/perm.hpp"

namespace ffint::families {

// ---- monomials M(x) = x^n --------------------------------------------------

/// gcd(n, q-1) = 1.
bool monomial_is_permutation(const Field& F, std::uint64_t n);
/// Exponent m with n*m = 1 (mod q-1); rejects non-permutation n.
std::uint64_t monomial_inverse_exponent(const Field& F, std::uint64_t n);
/// Closed form: 0 -> 0 and i -> n*i reduced into the representative set
/// {1, ..., q-1}; identical to the field-map construction for x^n.
Permutation monomial_interleaver(const Field& F, std::uint64_t n);

// ---- Dickson polynomials of the first kind ----------------------------------

/// a restricted to {0, 1, -1}; the inverse formula and the cycle theorems are
/// stated only there.
struct DicksonParams {
    std::uint64_t n = 1;
    int a = 1;  // -1, 0 or 1
};

/// The parameter a as a field element.
FieldElement dickson_a_element(const Field& F, int a);

/// D_n(x, a) for arbitrary field a by the linear recurrence
/// D_0 = 2, D_1 = x, D_k = x D_{k-1} - a D_{k-2}.
FieldElement dickson_eval(const Field& F, std::uint64_t n, FieldElement a, FieldElement x);
FieldElement dickson_eval(const Field& F, const DicksonParams& params, FieldElement x);

/// gcd(n, q^2-1) = 1 for a = +-1; the monomial condition gcd(n, q-1) = 1 for a = 0.
bool dickson_is_permutation(const Field& F, const DicksonParams& params);
/// Inverse degree: mod q^2-1 for a = +-1, mod q-1 for a = 0 (x^n degenerate case).
std::uint64_t dickson_inverse_degree(const Field& F, const DicksonParams& params);
Permutation dickson_interleaver(const Field& F, const DicksonParams& params);

// ---- Moebius transformations T(x) = (ax+b)/(cx+d) ----------------------------

/// Requires c != 0 and ad - bc != 0 (checked at construction).
class MobiusParams {
public:
    MobiusParams(FieldElement a, FieldElement b, FieldElement c, FieldElement d);

    FieldElement a, b, c, d;
};

/// T(x) with the special point -d/c mapped to a/c.
FieldElement mobius_eval(const Field& F, const MobiusParams& params, FieldElement x);
/// The inverse transformation (d, -b, -c, a).
MobiusParams mobius_inverse_params(const MobiusParams& params);
Permutation mobius_interleaver(const Field& F, const MobiusParams& params);

// ---- Redei functions R_n = G_n / H_n ----------------------------------------

/// Requires odd characteristic and a nonzero non-square a (checked at
/// construction; the square-a case is not supported).
class RedeiParams {
public:
    RedeiParams(std::uint64_t n, FieldElement a);

    std::uint64_t n;
    FieldElement a;
};

/// Coefficient lists (constant term first) of G_n and H_n, defined by
/// (x + sqrt(a))^n = G_n(x, a) + H_n(x, a) sqrt(a).
std::pair<std::vector<FieldElement>, std::vector<FieldElement>>
redei_numerator_denominator(const Field& F, const RedeiParams& params);

/// G_n(x) / H_n(x); throws PoleEncountered if H_n(x) = 0, which cannot happen
/// when redei_is_permutation holds.
FieldElement redei_eval(const Field& F, const RedeiParams& params, FieldElement x);

/// gcd(n, q+1) = 1.
bool redei_is_permutation(const Field& F, const RedeiParams& params);
/// Degree m with n*m = 1 (mod q+1); R_m is the compositional inverse of R_n.
std::uint64_t redei_inverse_degree(const Field& F, const RedeiParams& params);
Permutation redei_interleaver(const Field& F, const RedeiParams& params);

}  // namespace ffint::families
