#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace rrlab {

// Exponent vector of a monomial in up to kMaxVars variables.  Exponents are
// bounded machine integers; arithmetic that would overflow them throws
// instead of wrapping.
class Monomial {
public:
    static constexpr int kMaxVars = 32;
    static constexpr unsigned kMaxExp = 0xffffu;

    explicit Monomial(int nvars);

    int nvars() const { return n_; }
    unsigned deg() const { return deg_; }
    unsigned exp(int i) const { return e_[i]; }
    void set_exp(int i, unsigned e);

    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;          // this | o
    Monomial quotient_of(const Monomial& o) const;  // o / this, requires divides
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const;

    // Degree counted over a subset of the variables.
    unsigned deg_on(const std::array<bool, kMaxVars>& mask) const;

    bool operator==(const Monomial& o) const;
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    // Embed into a ring with more variables, old variable i becoming map[i].
    Monomial embed(int new_nvars, const int* map) const;

private:
    std::array<std::uint16_t, kMaxVars> e_{};
    std::int32_t n_;
    std::uint32_t deg_ = 0;
};

}  // namespace rrlab
