#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "rrlab/groebner.hpp"
#include "rrlab/poly.hpp"

namespace rrlab {

// An ideal of a polynomial ring.  Handles share state, so reduced Groebner
// bases (cached per monomial order, thread-safe) are computed once per ideal
// no matter how many copies of the handle float around.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Poly> gens);
    static Ideal zero(const RingPtr& r) { return Ideal(r, {}); }

    const RingPtr& ring() const;
    const std::vector<Poly>& gens() const;
    std::vector<Poly> nonzero_gens() const;
    bool is_zero_ideal() const;
    bool is_monomial_gens() const;  // every generator a single term

    // Reduced Groebner basis (monic, minimal, tails reduced), descending.
    const std::vector<Poly>& gb(const MonomialOrder& ord) const;
    const std::vector<Poly>& gb() const;  // degrevlex
    // Minimal generators of the initial ideal under degrevlex.
    std::vector<Monomial> initial_gens() const;

    Poly nf(const Poly& f, const MonomialOrder& ord) const;
    Poly nf(const Poly& f) const;
    bool contains(const Poly& f) const;
    bool contains(const Ideal& o) const;
    bool equals(const Ideal& o) const;
    bool is_unit_ideal() const;

    // ---- constructions ----
    static Ideal sum(const Ideal& a, const Ideal& b);
    static Ideal sum(const Ideal& a, const std::vector<Poly>& extra);
    static Ideal product(const Ideal& a, const Ideal& b);
    // Generated by all n-fold products of the generators.
    static Ideal power(const Ideal& a, unsigned n);
    static Ideal intersect(const Ideal& a, const Ideal& b);
    static Ideal colon(const Ideal& a, const Poly& f);
    static Ideal colon(const Ideal& a, const Ideal& j);
    // Colon computed by intersecting with the principal ideal and dividing;
    // same answer as colon(), kept callable for cross-checking.
    static Ideal colon_by_intersection(const Ideal& a, const Poly& f);
    static Ideal saturation(const Ideal& a, const Poly& f);
    static Ideal saturation(const Ideal& a, const Ideal& j);

    // Ideal generated by the same elements in a ring with more variables.
    Ideal embedded(const RingPtr& target) const;
    // Eliminate the listed variables; result lives in the ring on the
    // remaining ones (declaration order preserved).
    Ideal eliminate(const std::vector<int>& drop) const;

    // ---- staircase combinatorics (degrevlex initial ideal) ----
    int dim() const;  // Krull dimension of R/I
    bool is_zero_dim() const { return dim() == 0; }
    // dim_k of R/I as a vector space; -1 when infinite.
    long vdim_affine() const;
    std::vector<Monomial> std_monomials() const;  // finite case only
    std::vector<Monomial> std_monomials_of_degree(int d) const;

    // ---- behaviour at the origin ----
    bool has_unit_at_origin() const;  // some generator has a nonzero constant
    // V(I) = {0}: zero-dimensional and every variable nilpotent mod I.
    bool supported_at_origin_only() const;
    // Length of R_m/I_m at the maximal ideal of the origin; throws if infinite.
    long colength_at_origin() const;
    bool locally_contains(const Poly& f) const;
    bool locally_equals(const Ideal& o) const;
    // Minimal generators of I localized at the origin (Nakayama).
    std::vector<Poly> min_gens_local() const;

private:
    struct Impl;
    std::shared_ptr<Impl> p_;
    void require() const;
};

// Radical membership via the Rabinowitsch trick.
bool in_radical(const Ideal& i, const Poly& f);

// All monomials of total degree d in the ring's variables.
std::vector<Monomial> monomials_of_degree(const RingPtr& r, int d);

}  // namespace rrlab
