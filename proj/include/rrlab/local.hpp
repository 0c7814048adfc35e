#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rrlab/ideal.hpp"
#include "rrlab/poly.hpp"
#include "rrlab/ring.hpp"

namespace rrlab {

// A local ring A = (k[x_1..x_s]/q) localized at the maximal ideal of the
// origin.  The defining ideal q is stored as an ideal of the ambient
// polynomial ring; every generator must vanish at the origin, otherwise the
// quotient is not local at the origin and the constructor throws.
class LocalRing {
public:
    LocalRing(RingPtr ambient, Ideal q);

    const RingPtr& ambient() const { return ambient_; }
    const Ideal& q() const { return q_; }

    // The maximal ideal (x_1, .., x_s) of the ambient ring.
    Ideal max_ideal() const;

    // Krull dimension of the local ring A (dimension of the component of
    // V(q) through the origin is what the staircase bound computes; for the
    // rings handled here q is origin-local already).
    int dim() const;

    // depth of A itself, computed as the grade of (x_1..x_s) on k[x]/q via
    // Koszul homology.  Cached.
    int depth(int koszul_cap = 8) const;

private:
    RingPtr ambient_;
    Ideal q_;
    mutable int depth_cache_ = -2;  // -2: unset
};

// An ideal I of a local ring A, given by generators in the ambient
// polynomial ring, certified m-primary (or equal to A) at construction.
class MPrimaryIdeal {
public:
    MPrimaryIdeal(const LocalRing& ring, std::vector<Poly> gens);

    const LocalRing& ring() const { return ring_; }
    // Generators as given (polynomials in the ambient ring).
    const std::vector<Poly>& gens() const { return gens_; }

    // The ambient-ring ideal q + I^n; n = 1 by default.  These are the
    // objects all length computations run through.
    Ideal with_q(int n = 1) const;
    // The ambient-ring ideal I^n + q stored as gens only when n = 1.
    Ideal plain() const;

    // Multiplicity-style data: lambda(A / I^n) at the origin.
    long colength(int n = 1) const;

    // Hilbert function of the associated graded ring:
    //   H(n) = lambda(I^n / I^{n+1}) = colength(n+1) - colength(n).
    long hilbert_function(int n) const;

    // Minimal number of local generators.
    std::vector<Poly> min_gens() const;

private:
    LocalRing ring_;
    std::vector<Poly> gens_;
    // Power cache: with_q(n) is hit repeatedly by the closure chains, and a
    // shared Ideal handle keeps its Groebner cache alive.  Not synchronized;
    // concurrent commands build their own instances.
    mutable std::shared_ptr<std::map<int, Ideal>> powers_;
};

// Minimal local generators of total/q as an ideal of the quotient ring:
// greedy Nakayama elimination of the given generators against (others) + q.
std::vector<Poly> min_gens_mod_q(const Ideal& total, const Ideal& q);

// Tangent cone: the defining ideal q* of gr_m(A) inside the same ambient
// polynomial ring, i.e. the ideal of lowest-degree forms of all elements of
// q.  Computed by homogenizing q, running a Groebner basis in an order that
// within each degree class weights the homogenizing variable heaviest, and
// taking lowest forms of the dehomogenization.
Ideal tangent_cone(const LocalRing& a);

// Validation used by the CLI front end.  Throws std::invalid_argument with
// the exact messages "q has a unit term" / "I not m-primary at origin".
void validate_local_input(const RingPtr& ambient, const std::vector<Poly>& q_gens,
                          const std::vector<Poly>& i_gens);

}  // namespace rrlab
