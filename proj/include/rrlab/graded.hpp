#pragma once

#include <map>
#include <utility>
#include <vector>

#include "rrlab/ideal.hpp"
#include "rrlab/la.hpp"
#include "rrlab/vecpoly.hpp"

namespace rrlab {

// A graded module presented as F/N with F = (+) R(-twists[i]) and N spanned
// by homogeneous relation columns.
struct GradedModule {
    RingPtr ring;
    std::vector<int> twists;
    std::vector<VecPoly> rels;
};

// R/I for a homogeneous ideal (twist 0); throws when I is not homogeneous.
GradedModule cyclic_graded(const Ideal& i);

void require_homogeneous(const GradedModule& m);

// Basis of the degree-d strand of the free module with the given twists:
// pairs (component, monomial), deterministic order.
std::vector<std::pair<int, Monomial>> strand_basis(const RingPtr& r,
                                                   const std::vector<int>& twists, int d);

// Matrix of the map sending source generator j to cols[j], restricted to the
// degree-d strands (source twists = degree of cols[j], supplied explicitly).
Mat strand_matrix(const std::vector<VecPoly>& cols, const std::vector<int>& src_tw,
                  const std::vector<int>& tgt_tw, int d, const RingPtr& r);

// Minimal presentation: splits off unit entries (dropping redundant
// generators) and then removes redundant relation columns by graded
// Nakayama, degree by degree, with dense strand linear algebra.
GradedModule minimalize_presentation(GradedModule m);

// A minimal graded free resolution 0 <- M <- F_0 <- F_1 <- ... <- F_pd <- 0.
// stage_twists[i] lists the generator degrees of F_i; diffs[i] holds the
// columns of F_{i+1} -> F_i.  Differentials never contain unit entries.
struct Resolution {
    RingPtr ring;
    std::vector<std::vector<int>> stage_twists;
    std::vector<std::vector<VecPoly>> diffs;
    int pd() const { return static_cast<int>(stage_twists.size()) - 1; }
};

// Iterated syzygies; throws std::logic_error if the length would exceed the
// number of variables (the global bound for polynomial rings).
Resolution minimal_resolution(const GradedModule& m);

struct BettiTable {
    std::map<std::pair<int, int>, long> b;  // (homological stage, twist) -> count
    int pd = 0;
    long at(int i, int j) const {
        auto it = b.find({i, j});
        return it == b.end() ? 0 : it->second;
    }
};

BettiTable betti_of(const Resolution& r);

// depth = nvars - pd (Auslander-Buchsbaum over the polynomial ring).
int depth_from_betti(const BettiTable& t, int nvars);
// Castelnuovo-Mumford regularity: max twist minus stage over the table.
int regularity_from_betti(const BettiTable& t);

}  // namespace rrlab
