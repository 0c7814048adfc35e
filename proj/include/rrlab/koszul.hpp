#pragma once

#include <cstdint>
#include <vector>

#include "rrlab/ideal.hpp"
#include "rrlab/vecpoly.hpp"

namespace rrlab {

// A finitely presented module M = R^ncomp / <columns of rels>.  Relation
// columns need not form a Groebner basis; twists (degrees of the free
// generators) are optional and only used for pair scheduling.
struct FreePresentation {
    RingPtr ring;
    int ncomp = 1;
    std::vector<VecPoly> rels;
    std::vector<int> twists;  // empty means all zero

    static FreePresentation cyclic(const Ideal& i);  // R/I
};

struct KoszulOptions {
    int cap = 8;  // budget: maximal number of Koszul generators
};

// Is H_j(g_1..g_n; M) nonzero?  Homology of the Koszul complex on the g's
// with coefficients in M, computed by syzygy kernels over the frozen
// relation module.
bool koszul_homology_nonzero(const std::vector<Poly>& gens,
                             const FreePresentation& m, int j);

// grade(<gens>, M) from Koszul homology: n - max{ j : H_j != 0 }.  Scans j
// downward from n, so the number of homology computations is grade + 1.
// Throws std::runtime_error("Koszul budget exceeded") when n exceeds the
// cap, and std::logic_error when M = 0 (every H_j vanishes).
int koszul_grade(const std::vector<Poly>& gens, const FreePresentation& m,
                 const KoszulOptions& opt = {});

// Certified depth of R/q with respect to the ideal of all variables, for use
// when the Koszul budget is out of reach.  Builds a regular sequence of
// random linear forms in the selected variables (coefficients seeded from
// {1..101}); before each extension step the socle test
// (current : <all variables>) != current decides exactly whether the depth
// has been reached.  Randomness only affects whether a witness form is
// found, never the verdict: if no witness shows up inside the retry budget
// even though the socle test says one exists, the result is flagged
// budget_exceeded with the proven lower bound.
struct DepthResult {
    int depth = 0;
    bool certified = false;
    bool budget_exceeded = false;
    std::vector<Poly> sequence;
};

DepthResult depth_by_parameters(const Ideal& q, const std::vector<int>& form_vars,
                                std::uint64_t seed, int tries_per_level = 6);

}  // namespace rrlab
