#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffint/errors.hpp"

namespace ffint {

/// Default cap on q = p^m (tables are O(q)).
inline constexpr std::uint64_t kDefaultFieldBound = std::uint64_t{1} << 20;

class Field;

/// An element of F_q in power representation: code 0 is the zero element,
/// code i in [1, q-1] is alpha^i. In particular the identity is code q-1.
class FieldElement {
public:
    FieldElement() = default;

    std::uint64_t code() const { return code_; }
    bool is_zero() const { return code_ == 0; }
    const Field& field() const;

    friend bool operator==(FieldElement a, FieldElement b) {
        return a.field_ == b.field_ && a.code_ == b.code_;
    }

private:
    friend class Field;
    FieldElement(const Field* f, std::uint32_t c) : field_(f), code_(c) {}

    const Field* field_ = nullptr;
    std::uint32_t code_ = 0;
};

/// F_{p^m} built from a primitive polynomial, with exp/log tables indexed by
/// the power representation. Immutable after construction; elements hold a
/// pointer back to their field, so a Field must outlive its elements and is
/// therefore neither copyable nor movable.
class Field {
public:
    /// Builds F_{p^m}. When primitive_poly (monic, degree m, constant term
    /// first) is omitted it is searched deterministically: for m = 1 the
    /// polynomial is x - g for the smallest primitive root g of p, otherwise
    /// monic polynomials are tried in lexicographic coefficient order.
    static Field build(std::uint64_t p, unsigned m,
                       std::optional<std::vector<std::uint32_t>> primitive_poly = std::nullopt,
                       std::uint64_t bound = kDefaultFieldBound);

    std::uint64_t p() const { return p_; }
    unsigned m() const { return m_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint32_t>& primitive_poly() const { return poly_; }

    FieldElement zero() const { return {this, 0}; }
    FieldElement one() const { return {this, static_cast<std::uint32_t>(q_ - 1)}; }
    FieldElement alpha() const { return {this, 1}; }

    /// Element with the given power-representation code (0 = zero element).
    FieldElement from_code(std::uint64_t code) const;
    /// Element from its packed polynomial encoding sum c_i p^i, 0 <= enc < q.
    FieldElement from_encoding(std::uint64_t enc) const;
    /// The constant-polynomial element v mod p.
    FieldElement from_int(std::int64_t v) const;
    /// Packed polynomial encoding of an element.
    std::uint64_t encoding(FieldElement a) const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const;
    /// a^n with pow(0, 0) = 1; negative n inverts (rejects a = 0).
    FieldElement pow(FieldElement a, std::int64_t n) const;

    /// Discrete logarithm: dlog(0) = 0 and dlog(alpha^i) = i in [1, q-1];
    /// note dlog(1) = q-1.
    std::uint64_t dlog(FieldElement a) const { check(a); return a.code(); }

    /// Euler criterion (characteristic 2: every element is a square).
    bool is_square(FieldElement a) const;

    /// Text header "p m q c0 c1 ... cm" used in CLI provenance lines.
    std::string header() const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    struct Tables {
        std::uint64_t p;
        unsigned m;
        std::uint64_t q;
        std::vector<std::uint32_t> poly;
        std::vector<std::uint32_t> exp;  // exponent in [1, q-1] -> encoding
        std::vector<std::uint32_t> log;  // encoding -> exponent; log[0] = 0
    };
    explicit Field(Tables&& t);

    void check(FieldElement a) const {
        if (a.field_ != this) throw MixedFields("element does not belong to this field");
    }
    std::uint32_t mul_codes(std::uint32_t a, std::uint32_t b) const;

    std::uint64_t p_;
    unsigned m_;
    std::uint64_t q_;
    std::vector<std::uint32_t> poly_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

inline const Field& FieldElement::field() const {
    if (!field_) throw MixedFields("default-constructed element has no field");
    return *field_;
}

inline FieldElement operator+(FieldElement a, FieldElement b) { return a.field().add(a, b); }
inline FieldElement operator-(FieldElement a, FieldElement b) { return a.field().sub(a, b); }
inline FieldElement operator-(FieldElement a) { return a.field().neg(a); }
inline FieldElement operator*(FieldElement a, FieldElement b) { return a.field().mul(a, b); }
inline FieldElement operator/(FieldElement a, FieldElement b) { return a.field().div(a, b); }

}  // namespace ffint
