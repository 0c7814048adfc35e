#pragma once

#include <cstdint>
#include <string>
#include <gmpxx.h>

namespace rrlab {

// Coefficient field of a session: the rationals, or a prime field Z/p with
// p < 2^31.  A Field value is cheap to copy and compare.
class Field {
public:
    enum class Kind { rationals, prime };

    static Field rationals() { return Field(Kind::rationals, 0); }
    static Field prime(std::uint32_t p);  // throws unless p is prime and < 2^31

    Kind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == Kind::rationals; }
    // 0 for the rationals.
    std::uint32_t characteristic() const { return p_; }

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string str() const;

private:
    Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint32_t p_;
};

// A field element.  Rational values are exact GMP rationals in canonical
// form; prime-field values are residues in [0, p).  Elements remember their
// field, and mixed-field arithmetic throws.
class Coeff {
public:
    Coeff() : p_(0), r_(0) {}  // rational zero

    static Coeff zero(const Field& k);
    static Coeff one(const Field& k);
    static Coeff from_long(const Field& k, long v);
    static Coeff from_mpq(const Field& k, const mpq_class& v);

    const Field field() const;

    bool is_zero() const;
    bool is_one() const;

    Coeff operator+(const Coeff& o) const;
    Coeff operator-(const Coeff& o) const;
    Coeff operator*(const Coeff& o) const;
    Coeff operator/(const Coeff& o) const;  // throws on zero divisor
    Coeff operator-() const;
    Coeff inv() const;

    Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
    Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
    Coeff& operator*=(const Coeff& o) { return *this = *this * o; }

    bool operator==(const Coeff& o) const;
    bool operator!=(const Coeff& o) const { return !(*this == o); }

    // True for negative rationals; residues are never negative.
    bool is_negative() const;

    // Value with the sign stripped (rationals only; identity mod p).
    Coeff abs() const;

    const mpq_class& rational() const;  // requires rational field
    std::int64_t residue() const;       // requires prime field

    std::string str() const;

private:
    Coeff(mpq_class q) : q_(std::move(q)), p_(0), r_(0) {}
    Coeff(std::uint32_t p, std::int64_t r) : p_(p), r_(r) {}
    void check_same(const Coeff& o) const;

    mpq_class q_;        // used when p_ == 0
    std::uint32_t p_;    // 0 means rational
    std::int64_t r_;     // used when p_ != 0, always in [0, p_)
};

}  // namespace rrlab
