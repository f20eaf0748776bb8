#include "polyrep/field.hpp"

#include <cctype>

namespace polyrep {

namespace {

using u128 = unsigned __int128;

}  // namespace

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    if (s < a || s >= p) s -= p;
    return s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + (p - b);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((u128)a * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw DivisionByZero();
    // extended Euclid over signed 128-bit intermediates
    std::int64_t t = 0, nt = 1;
    std::uint64_t r = p, nr = a;
    while (nr != 0) {
        std::uint64_t q = r / nr;
        std::int64_t tmp = t - static_cast<std::int64_t>(q) * nt;
        t = nt;
        nt = tmp;
        std::uint64_t rtmp = r - q * nr;
        r = nr;
        nr = rtmp;
    }
    // r == gcd(a, p) == 1 since p is prime and a != 0 mod p
    return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(p)) : static_cast<std::uint64_t>(t);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // this base set is deterministic below 2^64
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
    return FieldSpec(FieldKind::prime, p);
}

std::string FieldSpec::to_string() const {
    return kind_ == FieldKind::rational ? "rational" : "prime:" + std::to_string(modulus_);
}

FieldElement FieldElement::from_int(const FieldSpec& spec, long long k) {
    return from_mpz(spec, mpz_class(static_cast<long>(k)));
}

FieldElement FieldElement::from_mpz(const FieldSpec& spec, const mpz_class& k) {
    FieldElement e(spec);
    if (spec.kind() == FieldKind::rational) {
        e.q_ = mpq_class(k);
    } else {
        mpz_class m = k % mpz_class(spec.modulus());
        if (m < 0) m += mpz_class(spec.modulus());
        e.r_ = m.get_ui();
    }
    return e;
}

FieldElement FieldElement::from_rational(const FieldSpec& spec, const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero();
    if (spec.kind() == FieldKind::rational) {
        FieldElement e(spec);
        e.q_ = mpq_class(num, den);
        e.q_.canonicalize();
        return e;
    }
    return from_mpz(spec, num) / from_mpz(spec, den);
}

FieldElement FieldElement::parse(const FieldSpec& spec, std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return from_mpz(spec, mpz_class(s));
        return from_rational(spec, mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw Error("cannot parse field element '" + s + "'");
    }
}

bool FieldElement::is_zero() const {
    return spec_.kind() == FieldKind::rational ? q_ == 0 : r_ == 0;
}

bool FieldElement::is_one() const {
    return spec_.kind() == FieldKind::rational ? q_ == 1 : r_ == 1;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    FieldElement e(spec_);
    if (spec_.kind() == FieldKind::rational)
        e.q_ = q_ + o.q_;
    else
        e.r_ = add_mod(r_, o.r_, spec_.modulus());
    return e;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    FieldElement e(spec_);
    if (spec_.kind() == FieldKind::rational)
        e.q_ = q_ - o.q_;
    else
        e.r_ = sub_mod(r_, o.r_, spec_.modulus());
    return e;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    FieldElement e(spec_);
    if (spec_.kind() == FieldKind::rational)
        e.q_ = q_ * o.q_;
    else
        e.r_ = mul_mod(r_, o.r_, spec_.modulus());
    return e;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same(o);
    if (o.is_zero()) throw DivisionByZero();
    FieldElement e(spec_);
    if (spec_.kind() == FieldKind::rational)
        e.q_ = q_ / o.q_;
    else
        e.r_ = mul_mod(r_, inv_mod(o.r_, spec_.modulus()), spec_.modulus());
    return e;
}

FieldElement FieldElement::operator-() const {
    FieldElement e(spec_);
    if (spec_.kind() == FieldKind::rational)
        e.q_ = -q_;
    else
        e.r_ = r_ == 0 ? 0 : spec_.modulus() - r_;
    return e;
}

FieldElement FieldElement::inv() const {
    if (is_zero()) throw DivisionByZero();
    FieldElement e(spec_);
    if (spec_.kind() == FieldKind::rational)
        e.q_ = 1 / q_;
    else
        e.r_ = inv_mod(r_, spec_.modulus());
    return e;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (spec_ != o.spec_) return false;
    return spec_.kind() == FieldKind::rational ? q_ == o.q_ : r_ == o.r_;
}

std::string FieldElement::to_string() const {
    if (spec_.kind() == FieldKind::prime) return std::to_string(r_);
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace polyrep
