#include "rrlab/field.hpp"

#include <stdexcept>

namespace rrlab {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// Modular inverse in [0, p) by extended Euclid.
std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t old_r = a, r = p, old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r; old_r = r; r = t;
        t = old_s - q * s; old_s = s; s = t;
    }
    if (old_r != 1) throw std::domain_error("inverse of zero divisor mod p");
    return ((old_s % p) + p) % p;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime_u32(p))
        throw std::invalid_argument("field characteristic must be a prime < 2^31");
    return Field(Kind::prime, p);
}

std::string Field::str() const {
    return is_rationals() ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

Coeff Coeff::zero(const Field& k) {
    return k.is_rationals() ? Coeff(mpq_class(0)) : Coeff(k.characteristic(), 0);
}

Coeff Coeff::one(const Field& k) {
    return k.is_rationals() ? Coeff(mpq_class(1))
                            : Coeff(k.characteristic(), k.characteristic() == 1 ? 0 : 1);
}

Coeff Coeff::from_long(const Field& k, long v) {
    if (k.is_rationals()) return Coeff(mpq_class(v));
    std::int64_t p = k.characteristic();
    return Coeff(k.characteristic(), ((v % p) + p) % p);
}

Coeff Coeff::from_mpq(const Field& k, const mpq_class& v) {
    if (k.is_rationals()) {
        mpq_class c = v;
        c.canonicalize();
        return Coeff(c);
    }
    std::int64_t p = k.characteristic();
    mpz_class num = v.get_num() % p, den = v.get_den() % p;
    std::int64_t n = ((num.get_si() % p) + p) % p;
    std::int64_t d = ((den.get_si() % p) + p) % p;
    return Coeff(k.characteristic(), n * inv_mod(d, p) % p);
}

const Field Coeff::field() const {
    return p_ == 0 ? Field::rationals() : Field::prime(p_);
}

bool Coeff::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
bool Coeff::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

void Coeff::check_same(const Coeff& o) const {
    if (p_ != o.p_) throw std::invalid_argument("coefficient field mismatch");
}

Coeff Coeff::operator+(const Coeff& o) const {
    check_same(o);
    if (p_ == 0) return Coeff(mpq_class(q_ + o.q_));
    return Coeff(p_, (r_ + o.r_) % p_);
}

Coeff Coeff::operator-(const Coeff& o) const {
    check_same(o);
    if (p_ == 0) return Coeff(mpq_class(q_ - o.q_));
    return Coeff(p_, (r_ - o.r_ + p_) % p_);
}

Coeff Coeff::operator*(const Coeff& o) const {
    check_same(o);
    if (p_ == 0) return Coeff(mpq_class(q_ * o.q_));
    return Coeff(p_, r_ * o.r_ % p_);
}

Coeff Coeff::operator/(const Coeff& o) const {
    check_same(o);
    if (o.is_zero()) throw std::domain_error("division by zero coefficient");
    if (p_ == 0) return Coeff(mpq_class(q_ / o.q_));
    return Coeff(p_, r_ * inv_mod(o.r_, p_) % p_);
}

Coeff Coeff::operator-() const {
    if (p_ == 0) return Coeff(mpq_class(-q_));
    return Coeff(p_, r_ == 0 ? 0 : p_ - r_);
}

Coeff Coeff::inv() const { return one(field()) / *this; }

bool Coeff::operator==(const Coeff& o) const {
    if (p_ != o.p_) return false;
    return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

bool Coeff::is_negative() const { return p_ == 0 && q_ < 0; }

Coeff Coeff::abs() const {
    if (p_ == 0 && q_ < 0) return Coeff(mpq_class(-q_));
    return *this;
}

const mpq_class& Coeff::rational() const {
    if (p_ != 0) throw std::logic_error("rational() on prime-field element");
    return q_;
}

std::int64_t Coeff::residue() const {
    if (p_ == 0) throw std::logic_error("residue() on rational element");
    return r_;
}

std::string Coeff::str() const {
    return p_ == 0 ? q_.get_str() : std::to_string(r_);
}

}  // namespace rrlab
