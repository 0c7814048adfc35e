#pragma once

#include <vector>

#include "rrlab/vecpoly.hpp"

namespace rrlab {

// Buchberger engine for submodules of free modules (ideals are the
// one-component case).  Basis elements are kept monic; pair selection is
// deterministic (lowest lcm degree, then lexicographic index), and the
// Gebauer-Moeller criteria prune the pair set.
//
// `frozen` elements are reducers that are already known to form a Groebner
// basis among themselves (typically relation columns g*e_i for a quotient
// module): they take part in reduction and in mixed S-pairs, but pairs
// internal to the frozen set are skipped and frozen cofactors are dropped
// from syzygies.  The returned basis together with the frozen set is a
// Groebner basis of <gens> + <frozen>.
//
// With `want_syz`, `syz` holds module elements s in R^gens.size() with
// sum_i s_i * gens_i lying in <frozen> (zero if no frozen set), and these
// generate the full module of such relations.  For graded inputs, columns
// come out homogeneous.

struct GBOptions {
    bool want_syz = false;
    // Degree offsets per component, used for pair scheduling (homogeneous
    // S-degree) when present.  Optional and correctness-neutral.
    const std::vector<int>* twists = nullptr;
};

struct GBasis {
    std::vector<VecPoly> elems;  // completed active part (monic)
    std::vector<VecPoly> syz;    // syzygies over the original gens, if requested
};

GBasis buchberger(std::vector<VecPoly> gens, const ModuleOrder& mo,
                  const GBOptions& opt = {},
                  const std::vector<VecPoly>* frozen = nullptr);

// Full normal form: no term of the result is divisible by the leading term
// of any reducer.  With `cofactors`, writes v = sum q_i * reducers_i + nf
// (cofactor i as a plain term list).
VecPoly normal_form(VecPoly v, const std::vector<const VecPoly*>& reducers,
                    const ModuleOrder& mo,
                    std::vector<std::vector<Term>>* cofactors = nullptr);

// Convenience overload over one list.
VecPoly normal_form(VecPoly v, const std::vector<VecPoly>& reducers,
                    const ModuleOrder& mo,
                    std::vector<std::vector<Term>>* cofactors = nullptr);

// The unique reduced Groebner basis: minimal leading terms, tails fully
// reduced, monic, sorted descending by leading term.
std::vector<VecPoly> reduced_basis(std::vector<VecPoly> gb, const ModuleOrder& mo);

std::vector<const VecPoly*> pointers_to(const std::vector<VecPoly>& v);

}  // namespace rrlab
