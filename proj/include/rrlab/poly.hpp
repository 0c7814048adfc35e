#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rrlab/field.hpp"
#include "rrlab/monomial.hpp"
#include "rrlab/order.hpp"
#include "rrlab/ring.hpp"

namespace rrlab {

struct Term {
    Monomial mono;
    Coeff c;
};

// Sparse multivariate polynomial over a shared ring.  Terms are kept in
// canonical form: strictly descending under degrevlex, no zero coefficients,
// no repeated monomials.  Order-sensitive algorithms (Groebner bases) resort
// internally; everything public speaks canonical form.
class Poly {
public:
    explicit Poly(RingPtr ring);  // zero

    static Poly zero(const RingPtr& r) { return Poly(r); }
    static Poly constant(const RingPtr& r, const Coeff& c);
    static Poly constant(const RingPtr& r, long v);
    static Poly var(const RingPtr& r, int i, unsigned e = 1);
    static Poly term(const RingPtr& r, const Monomial& m, const Coeff& c);
    // Sorts, merges equal monomials, drops zeros.
    static Poly from_terms(const RingPtr& r, std::vector<Term> ts);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int nterms() const { return static_cast<int>(t_.size()); }

    // Total degree of the polynomial (-1 for zero).
    int deg() const;
    bool is_homogeneous() const;
    bool is_monomial() const { return t_.size() == 1; }
    bool is_constant() const;

    // Leading term with respect to an arbitrary order.
    const Term& lt(const MonomialOrder& ord) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const Coeff& c) const;
    Poly times_term(const Monomial& m, const Coeff& c) const;
    Poly pow(unsigned n) const;

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Substitute polynomials for selected variables (simultaneously); entries
    // absent from the map stay untouched.  Images live in `target`, which
    // must also host the untouched variables under the same names.
    Poly subst(const RingPtr& target,
               const std::vector<std::optional<Poly>>& images) const;

    // Move to a ring containing (at least) the same variable names.
    Poly embed(const RingPtr& target) const;
    // Inverse of embed for polynomials supported on target's variables.
    Poly restrict_to(const RingPtr& target) const;

    // Multiply each term by hvar^(d - deg(term)) where d = deg(); makes the
    // polynomial homogeneous using an existing variable of its ring.
    Poly homogenized(int hvar) const;
    // Sum of the terms of minimal total degree.
    Poly lowest_forms() const;
    int min_deg() const;  // degree of the lowest form (-1 for zero)

    Poly monic(const MonomialOrder& ord) const;

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Term> t_;
    void normalize();
};

Poly parse_poly(const RingPtr& r, const std::string& text);

}  // namespace rrlab
