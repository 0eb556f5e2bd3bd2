#include "ffint/gf.hpp"

#include <sstream>

#include "ffint/numtheory.hpp"

namespace ffint {

namespace {

// Multiplies the polynomial value (digit vector, constant first) by x and
// reduces modulo the monic polynomial `poly` of degree m over F_p.
void mul_by_x(std::vector<std::uint32_t>& v, const std::vector<std::uint32_t>& poly,
              std::uint64_t p, unsigned m) {
    std::uint64_t carry = v[m - 1];
    for (unsigned j = m - 1; j > 0; --j) v[j] = v[j - 1];
    v[0] = 0;
    if (carry) {
        // subtract carry * poly (the x^m digit folds back through the modulus)
        for (unsigned j = 0; j < m; ++j) {
            std::uint64_t s = (v[j] + (p - poly[j] % p) % p * carry) % p;
            v[j] = static_cast<std::uint32_t>(s);
        }
    }
}

std::uint64_t encode(const std::vector<std::uint32_t>& v, std::uint64_t p) {
    std::uint64_t e = 0;
    for (std::size_t j = v.size(); j-- > 0;) e = e * p + v[j];
    return e;
}

// Attempts to build exp/log tables for the given monic polynomial. Returns
// false unless its root has multiplicative order exactly q-1.
bool try_tables(std::uint64_t p, unsigned m, std::uint64_t q,
                const std::vector<std::uint32_t>& poly,
                std::vector<std::uint32_t>& exp, std::vector<std::uint32_t>& log) {
    exp.assign(q, 0);
    log.assign(q, 0);
    std::vector<std::uint32_t> v(m, 0);
    v[0] = 1;  // alpha^0 = 1; the loop fills exponents 1..q-1
    for (std::uint64_t i = 1; i < q; ++i) {
        mul_by_x(v, poly, p, m);
        std::uint64_t e = encode(v, p);
        if (e == 0 || log[e] != 0) return false;  // zero divisor or repeated power
        exp[i] = static_cast<std::uint32_t>(e);
        log[e] = static_cast<std::uint32_t>(i);
    }
    return exp[q - 1] == 1;  // alpha^{q-1} must be the identity
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
    if (p == 2) return 1;
    auto f = numtheory::factorize(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto [pr, e] : f.factors) {
            if (numtheory::powmod(g, (p - 1) / pr, p) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw Error("no primitive root found");  // unreachable for prime p
}

}  // namespace

Field::Field(Tables&& t)
    : p_(t.p), m_(t.m), q_(t.q), poly_(std::move(t.poly)),
      exp_(std::move(t.exp)), log_(std::move(t.log)) {}

Field Field::build(std::uint64_t p, unsigned m,
                   std::optional<std::vector<std::uint32_t>> primitive_poly,
                   std::uint64_t bound) {
    if (!numtheory::is_prime(p)) throw InvalidArgument("field characteristic must be prime");
    if (m < 1) throw InvalidArgument("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (q > bound / p) throw BoundExceeded("field size exceeds configured bound");
        q *= p;
    }
    if (q > bound) throw BoundExceeded("field size exceeds configured bound");

    Tables t;
    t.p = p; t.m = m; t.q = q;

    if (primitive_poly) {
        auto& poly = *primitive_poly;
        if (poly.size() != m + 1 || poly[m] != 1)
            throw InvalidArgument("primitive polynomial must be monic of degree m");
        for (auto c : poly)
            if (c >= p) throw InvalidArgument("polynomial coefficient out of range");
        if (!try_tables(p, m, q, poly, t.exp, t.log))
            throw NonPrimitivePolynomial("polynomial root does not generate the multiplicative group");
        t.poly = poly;
        return Field(std::move(t));
    }

    if (m == 1) {
        std::uint64_t g = smallest_primitive_root(p);
        std::vector<std::uint32_t> poly{static_cast<std::uint32_t>((p - g) % p), 1};  // x - g
        if (!try_tables(p, m, q, poly, t.exp, t.log))
            throw Error("primitive root construction failed");  // unreachable
        t.poly = std::move(poly);
        return Field(std::move(t));
    }

    // Lexicographic search over coefficient vectors (c0, ..., c_{m-1}).
    std::vector<std::uint32_t> poly(m + 1, 0);
    poly[m] = 1;
    std::vector<std::uint32_t> digits(m, 0);  // digits[0] = c0 is the most significant
    while (true) {
        for (unsigned j = 0; j < m; ++j) poly[j] = digits[j];
        if (try_tables(p, m, q, poly, t.exp, t.log)) {
            t.poly = poly;
            return Field(std::move(t));
        }
        // next coefficient vector in lex order: last coordinate varies fastest
        int j = static_cast<int>(m) - 1;
        while (j >= 0 && digits[j] == p - 1) { digits[j] = 0; --j; }
        if (j < 0) throw Error("no primitive polynomial found");  // unreachable
        ++digits[j];
    }
}

FieldElement Field::from_code(std::uint64_t code) const {
    if (code >= q_) throw InvalidArgument("element code out of range");
    return {this, static_cast<std::uint32_t>(code)};
}

FieldElement Field::from_encoding(std::uint64_t enc) const {
    if (enc >= q_) throw InvalidArgument("element encoding out of range");
    return {this, log_[enc]};
}

FieldElement Field::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return from_encoding(static_cast<std::uint64_t>(r));
}

std::uint64_t Field::encoding(FieldElement a) const {
    check(a);
    return a.code() == 0 ? 0 : exp_[a.code()];
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
    check(a); check(b);
    std::uint64_t ea = a.code() ? exp_[a.code()] : 0;
    std::uint64_t eb = b.code() ? exp_[b.code()] : 0;
    std::uint64_t s;
    if (p_ == 2) {
        s = ea ^ eb;
    } else {
        s = 0;
        std::uint64_t mult = 1;
        for (unsigned j = 0; j < m_; ++j) {
            s += (ea % p_ + eb % p_) % p_ * mult;
            ea /= p_; eb /= p_; mult *= p_;
        }
    }
    return {this, log_[s]};
}

FieldElement Field::neg(FieldElement a) const {
    check(a);
    if (p_ == 2 || a.code() == 0) return a;
    // -1 = alpha^{(q-1)/2} for odd q
    std::uint32_t neg_one = static_cast<std::uint32_t>((q_ - 1) / 2);
    return {this, mul_codes(a.code(), neg_one)};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

std::uint32_t Field::mul_codes(std::uint32_t a, std::uint32_t b) const {
    // both nonzero: exponents add modulo q-1, representatives in [1, q-1]
    std::uint64_t L = q_ - 1;
    return static_cast<std::uint32_t>((a + b - 1) % L + 1);
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
    check(a); check(b);
    if (a.code() == 0 || b.code() == 0) return zero();
    return {this, mul_codes(a.code(), b.code())};
}

FieldElement Field::inv(FieldElement a) const {
    check(a);
    if (a.code() == 0) throw DivisionByZero("inverse of the zero element");
    std::uint64_t L = q_ - 1;
    std::uint64_t c = a.code() == L ? L : L - a.code();
    return {this, static_cast<std::uint32_t>(c)};
}

FieldElement Field::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement Field::pow(FieldElement a, std::int64_t n) const {
    check(a);
    if (a.code() == 0) {
        if (n > 0) return zero();
        if (n == 0) return one();
        throw DivisionByZero("negative power of the zero element");
    }
    std::uint64_t L = q_ - 1;
    // exponent i*n - 1 reduced into [0, L), then shifted back into [1, L]
    std::int64_t e = static_cast<std::int64_t>(a.code());
    __int128 x = static_cast<__int128>(e) * n - 1;
    std::int64_t r = static_cast<std::int64_t>(x % static_cast<__int128>(L));
    if (r < 0) r += static_cast<std::int64_t>(L);
    return {this, static_cast<std::uint32_t>(r + 1)};
}

bool Field::is_square(FieldElement a) const {
    check(a);
    if (p_ == 2 || a.code() == 0) return true;
    return pow(a, static_cast<std::int64_t>((q_ - 1) / 2)) == one();
}

std::string Field::header() const {
    std::ostringstream os;
    os << p_ << ' ' << m_ << ' ' << q_;
    for (auto c : poly_) os << ' ' << c;
    return os.str();
}

}  // namespace ffint
