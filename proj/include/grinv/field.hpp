#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "grinv/errors.hpp"

namespace grinv {

// Arbitrary-precision rational, always stored in lowest terms with a
// positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class FieldKind { rational, prime };

// The coefficient field: Q or GF(p) for a prime p.
struct FieldSpec {
    FieldKind kind = FieldKind::rational;
    std::uint64_t p = 0; // modulus, meaningful iff kind == prime

    static FieldSpec rationals() { return FieldSpec{FieldKind::rational, 0}; }
    static FieldSpec gf(std::uint64_t p);

    bool is_prime_field() const { return kind == FieldKind::prime; }
    std::string name() const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.kind == b.kind && a.p == b.p;
    }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }
};

// Parses "rational" or "gf:<p>".
FieldSpec parse_field_spec(const std::string& text);

// Canonical representative of x in the field: reduced residue in [0,p) for
// GF(p), the value itself (already lowest terms) for Q.
Rational field_normalize(const FieldSpec& f, const Rational& x);

// Scalar arithmetic in the field. Inputs must already be canonical.
Rational field_add(const FieldSpec& f, const Rational& a, const Rational& b);
Rational field_sub(const FieldSpec& f, const Rational& a, const Rational& b);
Rational field_mul(const FieldSpec& f, const Rational& a, const Rational& b);
Rational field_neg(const FieldSpec& f, const Rational& a);
Rational field_inv(const FieldSpec& f, const Rational& a); // throws on zero

// Inverse of a modulo p, for 0 < a < p.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

} // namespace grinv
