#pragma once

#include <optional>
#include <vector>

#include "rrlab/graded.hpp"

namespace rrlab {

// Dual of stage i of a minimal resolution: Hom(F_i, R) has the negated
// twists, and the dual of the differential F_{i+1} -> F_i is its transpose,
// a map Hom(F_i, R) -> Hom(F_{i+1}, R) with one column per generator of F_i.
std::vector<int> dual_twists(const Resolution& r, int i);
std::vector<VecPoly> dual_columns(const Resolution& r, int i);

// dim_k Ext^i(M, R)_d by rank bookkeeping on the degree-d strands of the
// dualized resolution; 0 outside 0..pd.
int ext_graded_piece(const Resolution& r, int i, int d);

// Ext^i(M, R) presented as a graded module: kernel generators of the dual
// differential, with relations spanning the image of the previous one.  The
// result is minimalized; empty twists certify Ext^i = 0.
GradedModule ext_presentation(const Resolution& r, int i);

// Krull dimension of the support of the presented module: dim R/ann, where
// ann is the intersection over generators e_r of the colon (relations : e_r).
// Zero module -> -1; free module -> dim R.
int module_dimension(const GradedModule& m);

// a-invariants a_i = end(H^i of the irrelevant-ideal local cohomology) for
// i = 0..s, computed by graded duality: a_i = -s - indeg Ext^{s-i}(M, R),
// with indeg read off the minimal presentation of Ext.  nullopt = -infinity
// (the cohomology module vanishes).
struct AInvariants {
    std::vector<std::optional<int>> a;
    std::optional<int> at(int i) const {
        if (i < 0 || i >= static_cast<int>(a.size())) return std::nullopt;
        return a[static_cast<std::size_t>(i)];
    }
};
AInvariants a_invariants(const Resolution& r);

}  // namespace rrlab
