#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "polyrep/error.hpp"

namespace polyrep {

enum class FieldKind : std::uint8_t { rational, prime };

// Description of the coefficient field: the rationals, or Z/p for a prime
// p < 2^64. Prime moduli are validated with a deterministic Miller-Rabin test.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::rational, 0); }
    static FieldSpec prime_field(std::uint64_t p);

    FieldKind kind() const { return kind_; }
    std::uint64_t modulus() const { return modulus_; }

    bool operator==(const FieldSpec& o) const { return kind_ == o.kind_ && modulus_ == o.modulus_; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    FieldSpec(FieldKind k, std::uint64_t m) : kind_(k), modulus_(m) {}
    FieldKind kind_;
    std::uint64_t modulus_;
};

bool is_prime_u64(std::uint64_t n);

// Exact element of the coefficient field. Rationals are kept in lowest terms
// with positive denominator (zero is 0/1); prime-field residues lie in [0, p-1].
// Values are immutable in spirit: all operations return fresh elements.
class FieldElement {
public:
    FieldElement() : spec_(FieldSpec::rationals()), q_(0), r_(0) {}
    explicit FieldElement(FieldSpec spec) : spec_(spec), q_(0), r_(0) {}

    static FieldElement from_int(const FieldSpec& spec, long long k);
    static FieldElement from_mpz(const FieldSpec& spec, const mpz_class& k);
    static FieldElement from_rational(const FieldSpec& spec, const mpz_class& num, const mpz_class& den);
    // Parses "p", "-p" or "p/q" (rational) or a decimal residue (prime field).
    static FieldElement parse(const FieldSpec& spec, std::string_view text);

    const FieldSpec& spec() const { return spec_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string to_string() const;

    // Rational payload (lowest terms, positive denominator). Rational kind only.
    const mpq_class& rational() const { return q_; }
    // Residue in [0, p-1]. Prime kind only.
    std::uint64_t residue() const { return r_; }

private:
    void check_same(const FieldElement& o) const {
        if (spec_ != o.spec_) throw FieldMismatch();
    }
    FieldSpec spec_;
    mpq_class q_;
    std::uint64_t r_;
};

// Arithmetic mod p on raw residues; p must fit in 64 bits.
std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

}  // namespace polyrep
