#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rrlab/koszul.hpp"
#include "rrlab/local.hpp"

namespace rrlab {

// Presentation of the blowup algebra of I = (f_1..f_m) in A = k[x]/q: the
// ambient is k[x_1..x_s, y_1..y_m] and rees_ideal is the kernel of
// x_i -> x_i, y_j -> f_j t, computed by eliminating t.  Every generator of
// rees_ideal vanishes under that substitution modulo q (checked on
// construction).
struct BlowupPresentation {
    RingPtr ambient;      // k[x.., y..]
    int s = 0;            // number of x variables
    int m = 0;            // number of y variables
    Ideal rees_ideal;     // in ambient
    std::vector<Poly> f;  // chosen generators, in the x-ring
};

BlowupPresentation rees_presentation(const LocalRing& a, const std::vector<Poly>& gens);

// Defining ideal of the associated graded ring gr_I(A) = R(I)/I R(I) in
// k[x,y]: q + rees_ideal + (f_1..f_m).  When the generators are exactly the
// ambient variables (I = m) and s <= 4, the result is checked against the
// tangent cone presentation; disagreement throws std::logic_error.
Ideal assoc_graded_ideal(const BlowupPresentation& b, const LocalRing& a);

// Defining ideal of the fiber cone F(I) = R(I)/(m)R(I) in a fresh k[y].
Ideal fiber_cone_ideal(const BlowupPresentation& b, const LocalRing& a);

// An exact depth value, or how far the search got when uncertified.
struct DepthOutcome {
    int depth = 0;
    bool certified = false;
};

// depth of G_I(A) = grade of the ideal of all ambient variables on the
// associated graded quotient: Koszul homology when s + m fits the cap,
// otherwise a certified regular sequence of generic y-forms.
DepthOutcome depth_G(const BlowupPresentation& b, const LocalRing& a, int koszul_cap,
                     std::uint64_t seed);

// depth of the fiber cone over k[y] (regular sequences of generic forms).
DepthOutcome depth_F(const BlowupPresentation& b, const LocalRing& a, std::uint64_t seed);

// depth of the Rees ring R(I) itself (forms mix x and y variables).
DepthOutcome depth_R(const BlowupPresentation& b, const LocalRing& a, int koszul_cap,
                     std::uint64_t seed);

struct DepthRow {
    int power = 0;
    int num_gens = 0;
    std::optional<int> depth_G;  // absent when not certified in budget
    std::optional<int> depth_F;
    bool budget_exceeded = false;
};

struct DepthTableOptions {
    int l_max = 4;
    int koszul_cap = 8;
    std::uint64_t seed = 0;
};

// Rows l = 1..l_max: generators of I^l are minimalized before the Rees
// elimination; each row's presentations are built independently.
std::vector<DepthRow> depth_table_powers(const LocalRing& a, const MPrimaryIdeal& i,
                                         const DepthTableOptions& opt);

}  // namespace rrlab
