#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rrlab/koszul.hpp"
#include "rrlab/text.hpp"

using namespace rrlab;

namespace {

RingPtr qxy() { return Ring::make(Field::rationals(), {"x", "y"}); }
RingPtr qxyz() { return Ring::make(Field::rationals(), {"x", "y", "z"}); }

Ideal I(const RingPtr& r, const std::vector<std::string>& gens) {
    std::vector<Poly> ps;
    for (const auto& s : gens) ps.push_back(parse_poly(r, s));
    return Ideal(r, ps);
}

std::vector<Poly> polys(const RingPtr& r, const std::vector<std::string>& ss) {
    std::vector<Poly> ps;
    for (const auto& s : ss) ps.push_back(parse_poly(r, s));
    return ps;
}

}  // namespace

TEST_CASE("regular sequences have top grade") {
    auto r = qxyz();
    FreePresentation free_mod = FreePresentation::cyclic(Ideal::zero(r));
    CHECK(koszul_grade(polys(r, {"x", "y", "z"}), free_mod) == 3);
    CHECK(koszul_grade(polys(r, {"x", "y"}), free_mod) == 2);
    CHECK(koszul_grade(polys(r, {"z"}), free_mod) == 1);
    // H_j vanishes for j >= 1 on a regular sequence
    CHECK(!koszul_homology_nonzero(polys(r, {"x", "y", "z"}), free_mod, 1));
    CHECK(!koszul_homology_nonzero(polys(r, {"x", "y", "z"}), free_mod, 2));
    CHECK(!koszul_homology_nonzero(polys(r, {"x", "y", "z"}), free_mod, 3));
    CHECK(koszul_homology_nonzero(polys(r, {"x", "y", "z"}), free_mod, 0));
}

TEST_CASE("grade on quotient modules") {
    auto r = qxyz();
    // R/(x): x acts as zero, y,z stay regular
    FreePresentation mod_x = FreePresentation::cyclic(I(r, {"x"}));
    CHECK(koszul_grade(polys(r, {"x", "y", "z"}), mod_x) == 2);
    CHECK(koszul_homology_nonzero(polys(r, {"x", "y", "z"}), mod_x, 1));
    CHECK(!koszul_homology_nonzero(polys(r, {"x", "y", "z"}), mod_x, 2));
    // residue field: socle kills everything at the top
    FreePresentation k = FreePresentation::cyclic(I(r, {"x", "y", "z"}));
    CHECK(koszul_grade(polys(r, {"x", "y", "z"}), k) == 0);
    CHECK(koszul_homology_nonzero(polys(r, {"x", "y", "z"}), k, 3));
    // quadric hypersurface: two-dimensional Cohen-Macaulay quotient
    FreePresentation hyp = FreePresentation::cyclic(I(r, {"z^2 - x*y"}));
    CHECK(koszul_grade(polys(r, {"x", "y", "z"}), hyp) == 2);
}

TEST_CASE("zero divisors are detected") {
    auto r = qxy();
    FreePresentation m = FreePresentation::cyclic(I(r, {"x*y"}));
    // x kills the class of y
    CHECK(koszul_grade(polys(r, {"x"}), m) == 0);
    CHECK(koszul_grade(polys(r, {"x + y"}), m) == 1);
}

TEST_CASE("direct sums take the minimum grade") {
    auto r = qxy();
    ModuleOrder mo{MonomialOrder::degrevlex(2)};
    // M = R/(x) + R/(y) as a two-component presentation
    FreePresentation m;
    m.ring = r;
    m.ncomp = 2;
    m.rels.push_back(VecPoly::from_column({parse_poly(r, "x"), Poly::zero(r)}, mo));
    m.rels.push_back(VecPoly::from_column({Poly::zero(r), parse_poly(r, "y")}, mo));
    CHECK(koszul_grade(polys(r, {"x", "y"}), m) == 1);
}

TEST_CASE("budget and degenerate module") {
    auto r = qxy();
    FreePresentation free_mod = FreePresentation::cyclic(Ideal::zero(r));
    std::vector<Poly> many;
    for (int i = 0; i < 9; ++i) many.push_back(parse_poly(r, "x"));
    CHECK_THROWS_AS(koszul_grade(many, free_mod), std::runtime_error);
    KoszulOptions wide;
    wide.cap = 16;
    CHECK(koszul_grade(many, free_mod, wide) == 1);  // all copies of the same element
    FreePresentation zero_mod = FreePresentation::cyclic(I(r, {"1"}));
    CHECK_THROWS_AS(koszul_grade(polys(r, {"x"}), zero_mod), std::logic_error);
}

TEST_CASE("parameter depth certification") {
    auto r = qxy();
    auto r3 = qxyz();
    // free ring: depth = dimension
    DepthResult d0 = depth_by_parameters(Ideal::zero(r), {0, 1}, 7);
    CHECK(d0.depth == 2);
    CHECK(d0.certified);
    CHECK(!d0.budget_exceeded);
    // quadric cone: Cohen-Macaulay of dimension 2
    DepthResult d1 = depth_by_parameters(I(r3, {"z^2 - x*y"}), {0, 1, 2}, 11);
    CHECK(d1.depth == 2);
    CHECK(d1.certified);
    // immediate socle: (x^2, x*y) has x in its socle
    DepthResult d2 = depth_by_parameters(I(r, {"x^2", "x*y"}), {0, 1}, 13);
    CHECK(d2.depth == 0);
    CHECK(d2.certified);
    // numerical semigroup <3,4,5>: one-dimensional Cohen-Macaulay
    Ideal sg = I(r3, {"y^2 - x*z", "x^3 - y*z", "z^2 - x^2*y"});
    DepthResult d3 = depth_by_parameters(sg, {0, 1, 2}, 17);
    CHECK(d3.depth == 1);
    CHECK(d3.certified);
    // agreement with the Koszul route where both apply
    CHECK(koszul_grade(polys(r3, {"x", "y", "z"}), FreePresentation::cyclic(sg)) == 1);
}
