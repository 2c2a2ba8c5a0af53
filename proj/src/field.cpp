#include "grinv/field.hpp"

#include <sstream>

namespace grinv {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

FieldSpec FieldSpec::gf(std::uint64_t p) {
    if (p < 2 || p > (1ull << 31))
        throw input_error("prime modulus must satisfy 2 <= p <= 2^31, got " + std::to_string(p));
    if (!is_prime(p))
        throw input_error("modulus " + std::to_string(p) + " is not prime");
    return FieldSpec{FieldKind::prime, p};
}

std::string FieldSpec::name() const {
    if (kind == FieldKind::rational) return "rational";
    return "gf:" + std::to_string(p);
}

FieldSpec parse_field_spec(const std::string& text) {
    if (text == "rational") return FieldSpec::rationals();
    if (text.rfind("gf:", 0) == 0) {
        const std::string digits = text.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw input_error("bad field spec '" + text + "'");
        return FieldSpec::gf(std::stoull(digits));
    }
    throw input_error("bad field spec '" + text + "' (expected 'rational' or 'gf:<p>')");
}

Rational field_normalize(const FieldSpec& f, const Rational& x) {
    if (f.kind == FieldKind::rational) return x; // cpp_rational is always canonical
    const BigInt p(f.p);
    BigInt num = numerator(x);
    BigInt den = denominator(x);
    BigInt dmod = den % p;
    if (dmod < 0) dmod += p;
    if (dmod == 0) throw input_error("denominator not invertible mod " + std::to_string(f.p));
    BigInt nmod = num % p;
    if (nmod < 0) nmod += p;
    if (dmod != 1) {
        const std::uint64_t inv =
            mod_inverse(static_cast<std::uint64_t>(dmod), f.p);
        nmod = (nmod * inv) % p;
    }
    return Rational(nmod);
}

Rational field_add(const FieldSpec& f, const Rational& a, const Rational& b) {
    return field_normalize(f, a + b);
}

Rational field_sub(const FieldSpec& f, const Rational& a, const Rational& b) {
    return field_normalize(f, a - b);
}

Rational field_mul(const FieldSpec& f, const Rational& a, const Rational& b) {
    return field_normalize(f, a * b);
}

Rational field_neg(const FieldSpec& f, const Rational& a) {
    return field_normalize(f, -a);
}

Rational field_inv(const FieldSpec& f, const Rational& a) {
    if (a == 0) throw input_error("division by zero");
    if (f.kind == FieldKind::rational) return Rational(1) / a;
    const std::uint64_t r = static_cast<std::uint64_t>(numerator(a));
    return Rational(mod_inverse(r, f.p));
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on signed 64-bit values; p <= 2^31 keeps products safe
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw input_error("element not invertible mod " + std::to_string(p));
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

} // namespace grinv
