#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rrlab/graded.hpp"
#include "rrlab/text.hpp"

using namespace rrlab;

namespace {

RingPtr qxy() { return Ring::make(Field::rationals(), {"x", "y"}); }
RingPtr qxyz() { return Ring::make(Field::rationals(), {"x", "y", "z"}); }
RingPtr qxyzw() { return Ring::make(Field::rationals(), {"x", "y", "z", "w"}); }

Ideal I(const RingPtr& r, const std::vector<std::string>& gens) {
    std::vector<Poly> ps;
    for (const auto& s : gens) ps.push_back(parse_poly(r, s));
    return Ideal(r, ps);
}

ModuleOrder mo_of(const RingPtr& r) {
    return ModuleOrder{MonomialOrder::degrevlex(r->nvars())};
}

void check_complex(const Resolution& r, const RingPtr& ring) {
    ModuleOrder mo = mo_of(ring);
    for (std::size_t i = 0; i + 1 < r.diffs.size(); ++i) {
        for (const auto& col : r.diffs[i + 1]) {
            VecPoly image(ring, static_cast<int>(r.stage_twists[i].size()));
            for (const auto& t : col.t)
                image = vp_add(image,
                               vp_times_poly(r.diffs[i][static_cast<std::size_t>(t.comp)],
                                             Poly::term(ring, t.mono, t.c), mo),
                               mo);
            CHECK(image.is_zero());
        }
    }
}

}  // namespace

TEST_CASE("strand basis and strand matrix") {
    auto r = qxy();
    // twist 0: degree-2 strand of R is the 3 monomials x^2, xy, y^2
    auto b2 = strand_basis(r, {0}, 2);
    CHECK(b2.size() == 3);
    // mixed twists: R + R(-1) in degree 1 -> x, y from comp 0 and 1 from comp 1
    auto b = strand_basis(r, {0, 1}, 1);
    CHECK(b.size() == 3);
    CHECK(b[0].first == 0);
    CHECK(b[2].first == 1);
    CHECK(b[2].second.is_one());

    // map R(-2) -> R given by y^2, restricted to degree 3
    ModuleOrder mo = mo_of(r);
    std::vector<VecPoly> cols = {VecPoly::from_poly(parse_poly(r, "y^2"), mo)};
    Mat m = strand_matrix(cols, {2}, {0}, 3, r);
    CHECK(m.rows() == 4);  // cubics in two variables
    CHECK(m.cols() == 2);  // x, y times the source generator
    int nonzero = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) ++nonzero;
    CHECK(nonzero == 2);
    CHECK(rank_of(m) == 2);
}

TEST_CASE("cyclic_graded rejects inhomogeneous ideals") {
    auto r = qxy();
    CHECK_THROWS_AS(cyclic_graded(I(r, {"y^2 - x^3"})), std::invalid_argument);
    CHECK_NOTHROW(cyclic_graded(I(r, {"y^2 - x^2"})));
}

TEST_CASE("minimalize splits unit entries") {
    auto r = qxy();
    ModuleOrder mo = mo_of(r);
    // Present R/(y^2) redundantly: generators e0 (deg 0), e1 (deg 1) with
    // relations e1 - x e0 and y^2 e0.
    GradedModule m;
    m.ring = r;
    m.twists = {0, 1};
    VecPoly rel1 = vp_add(VecPoly::unit(r, 2, 1),
                          vp_times_poly(VecPoly::unit(r, 2, 0),
                                        parse_poly(r, "-x"), mo),
                          mo);
    VecPoly rel2 = vp_times_poly(VecPoly::unit(r, 2, 0), parse_poly(r, "y^2"), mo);
    m.rels = {rel1, rel2};

    GradedModule mm = minimalize_presentation(m);
    REQUIRE(mm.twists.size() == 1);
    CHECK(mm.twists[0] == 0);
    REQUIRE(mm.rels.size() == 1);
    CHECK(mm.rels[0].component(0).str() == "y^2");
}

TEST_CASE("minimalize prunes redundant relation columns") {
    auto r = qxy();

    // multiples of an earlier relation disappear
    GradedModule a = cyclic_graded(I(r, {"y^2", "x*y^2", "y^3"}));
    GradedModule ma = minimalize_presentation(a);
    REQUIRE(ma.rels.size() == 1);
    CHECK(ma.rels[0].component(0).str() == "y^2");

    // a linear combination of kept same-degree columns disappears
    GradedModule b = cyclic_graded(I(r, {"y^2", "x^2 + y^2", "x^2"}));
    GradedModule mb = minimalize_presentation(b);
    CHECK(mb.rels.size() == 2);

    // independent columns all survive
    GradedModule c = cyclic_graded(I(r, {"x^2", "y^2"}));
    CHECK(minimalize_presentation(c).rels.size() == 2);
}

TEST_CASE("resolution of a hypersurface") {
    auto r = qxy();
    Resolution res = minimal_resolution(cyclic_graded(I(r, {"y^2"})));
    CHECK(res.pd() == 1);
    BettiTable t = betti_of(res);
    CHECK(t.at(0, 0) == 1);
    CHECK(t.at(1, 2) == 1);
    CHECK(depth_from_betti(t, 2) == 1);
    CHECK(regularity_from_betti(t) == 1);
    check_complex(res, r);
}

TEST_CASE("Koszul resolution of the maximal ideal") {
    auto r = qxyz();
    Resolution res = minimal_resolution(cyclic_graded(I(r, {"x", "y", "z"})));
    CHECK(res.pd() == 3);
    BettiTable t = betti_of(res);
    CHECK(t.at(0, 0) == 1);
    CHECK(t.at(1, 1) == 3);
    CHECK(t.at(2, 2) == 3);
    CHECK(t.at(3, 3) == 1);
    CHECK(depth_from_betti(t, 3) == 0);
    CHECK(regularity_from_betti(t) == 0);
    check_complex(res, r);
}

TEST_CASE("resolution with a non-linear tail") {
    auto r = qxy();
    // (x^2, xy): one quadratic syzygy column (y, -x) in degree 3
    Resolution res = minimal_resolution(cyclic_graded(I(r, {"x^2", "x*y"})));
    CHECK(res.pd() == 2);
    BettiTable t = betti_of(res);
    CHECK(t.at(0, 0) == 1);
    CHECK(t.at(1, 2) == 2);
    CHECK(t.at(2, 3) == 1);
    CHECK(regularity_from_betti(t) == 1);
    check_complex(res, r);
}

TEST_CASE("redundant generators reach the minimal Betti numbers") {
    auto r = qxy();
    Resolution res =
        minimal_resolution(cyclic_graded(I(r, {"y^2", "x^2 + y^2", "x^2"})));
    BettiTable t = betti_of(res);
    CHECK(res.pd() == 2);
    CHECK(t.at(0, 0) == 1);
    CHECK(t.at(1, 2) == 2);
    CHECK(t.at(2, 4) == 1);
    check_complex(res, r);
}

TEST_CASE("zero module degenerates cleanly") {
    auto r = qxy();
    GradedModule m = minimalize_presentation(cyclic_graded(I(r, {"1"})));
    CHECK(m.twists.empty());
    CHECK(m.rels.empty());
    Resolution res = minimal_resolution(cyclic_graded(I(r, {"1"})));
    CHECK(res.pd() == 0);
    CHECK(res.stage_twists[0].empty());
    CHECK(betti_of(res).b.empty());
}

TEST_CASE("resolution of the four-variable tangent cone") {
    auto r = qxyzw();
    Ideal qstar = I(r, {"z^2", "y*z", "x*z", "y^4 - x^3*w"});
    Resolution res = minimal_resolution(cyclic_graded(qstar));
    CHECK(res.pd() == 3);
    BettiTable t = betti_of(res);
    CHECK(depth_from_betti(t, 4) == 1);
    CHECK(t.at(0, 0) == 1);
    CHECK(t.at(1, 2) == 3);
    CHECK(t.at(1, 4) == 1);
    check_complex(res, r);
}
