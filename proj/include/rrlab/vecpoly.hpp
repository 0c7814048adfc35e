#pragma once

#include <vector>

#include "rrlab/poly.hpp"

namespace rrlab {

// One term of a free-module element: coefficient * monomial * e_comp.
struct VTerm {
    int comp;
    Monomial mono;
    Coeff c;
};

// Order on free-module terms: the base order on monomials, ties broken by
// component index with lower components greater ("term over position").
struct ModuleOrder {
    MonomialOrder base;
    Cmp compare(const VTerm& a, const VTerm& b) const {
        Cmp c = base.compare(a.mono, b.mono);
        if (c != Cmp::eq) return c;
        if (a.comp != b.comp) return a.comp < b.comp ? Cmp::gt : Cmp::lt;
        return Cmp::eq;
    }
    bool greater(const VTerm& a, const VTerm& b) const { return compare(a, b) == Cmp::gt; }
};

// Element of a free module R^ncomp.  Terms are strictly descending under the
// ModuleOrder fixed by the computation that owns the element.
struct VecPoly {
    RingPtr ring;
    int ncomp = 0;
    std::vector<VTerm> t;

    VecPoly() = default;
    VecPoly(RingPtr r, int nc) : ring(std::move(r)), ncomp(nc) {}

    static VecPoly unit(const RingPtr& r, int nc, int comp);
    static VecPoly from_terms(const RingPtr& r, int nc, std::vector<VTerm> ts,
                              const ModuleOrder& mo);
    // rows.size() == nc, entry i lands in component i
    static VecPoly from_column(const std::vector<Poly>& rows, const ModuleOrder& mo);
    static VecPoly from_poly(const Poly& p, const ModuleOrder& mo);  // ncomp = 1

    std::vector<Poly> to_column() const;
    Poly component(int i) const;

    bool is_zero() const { return t.empty(); }
    const VTerm& lead() const;

    // Degree of a homogeneous element given row twists (term degree =
    // monomial degree + twist of its component); -1 for zero.  Throws if the
    // element is not homogeneous.
    int hom_degree(const std::vector<int>& twists) const;
    bool is_homogeneous(const std::vector<int>& twists) const;
};

VecPoly vp_add(const VecPoly& a, const VecPoly& b, const ModuleOrder& mo);
VecPoly vp_sub(const VecPoly& a, const VecPoly& b, const ModuleOrder& mo);
VecPoly vp_neg(const VecPoly& a);
VecPoly vp_scale(const VecPoly& a, const Coeff& c);
VecPoly vp_times_term(const VecPoly& a, const Monomial& m, const Coeff& c);
VecPoly vp_times_poly(const VecPoly& a, const Poly& p, const ModuleOrder& mo);
bool vp_equal(const VecPoly& a, const VecPoly& b);

}  // namespace rrlab
