#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rrlab/local.hpp"
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

std::vector<Poly> polys(const RingPtr& r, const std::vector<std::string>& ss) {
    std::vector<Poly> ps;
    for (const auto& s : ss) ps.push_back(parse_poly(r, s));
    return ps;
}

LocalRing cusp() {
    auto r = qxy();
    return LocalRing(r, I(r, {"y^2 - x^3"}));
}

// The running four-variable example: Q[x,y,z,w]/q with dim 2, depth 2.
LocalRing fourvar() {
    auto r = qxyzw();
    return LocalRing(r, I(r, {"-x^2*w + y*z", "-y^3 + x*z", "x*y^2*w - z^2"}));
}

}  // namespace

TEST_CASE("local ring validation and invariants") {
    auto r = qxy();
    CHECK_THROWS_WITH_AS(LocalRing(r, I(r, {"x + 1"})), "q has a unit term",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(LocalRing(r, I(r, {"x*y - 1"})), "q has a unit term",
                         std::invalid_argument);

    LocalRing reg(r, Ideal::zero(r));
    CHECK(reg.dim() == 2);
    CHECK(reg.depth() == 2);

    LocalRing c = cusp();
    CHECK(c.dim() == 1);
    CHECK(c.depth() == 1);

    auto r3 = qxyz();
    LocalRing quadric(r3, I(r3, {"z^2 - x*y"}));
    CHECK(quadric.dim() == 2);
    CHECK(quadric.depth() == 2);

    LocalRing fv = fourvar();
    CHECK(fv.dim() == 2);
    CHECK(fv.depth() == 2);
}

TEST_CASE("m-primary certification") {
    auto r = qxy();
    LocalRing reg(r, Ideal::zero(r));
    CHECK_THROWS_WITH_AS(MPrimaryIdeal(reg, polys(r, {"x"})),
                         "I not m-primary at origin", std::invalid_argument);
    CHECK_NOTHROW(MPrimaryIdeal(reg, polys(r, {"x", "y"})));
    CHECK_NOTHROW(MPrimaryIdeal(reg, polys(r, {"x^2", "y^3"})));

    // in the cusp the single element x cuts out a finite-length quotient
    LocalRing c = cusp();
    MPrimaryIdeal xi(c, polys(c.ambient(), {"x"}));
    CHECK(xi.colength(1) == 2);  // Q[x,y]/(y^2 - x^3, x) = k[y]/(y^2)

    validate_local_input(r, polys(r, {"y^2 - x^3"}), polys(r, {"x"}));
    CHECK_THROWS_WITH_AS(
        validate_local_input(r, {}, polys(r, {"x"})),
        "I not m-primary at origin", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        validate_local_input(r, polys(r, {"1 + x*y"}), polys(r, {"x", "y"})),
        "q has a unit term", std::invalid_argument);
}

TEST_CASE("colengths and Hilbert functions") {
    auto r = qxy();
    LocalRing reg(r, Ideal::zero(r));
    MPrimaryIdeal m(reg, polys(r, {"x", "y"}));
    CHECK(m.colength(1) == 1);
    CHECK(m.colength(2) == 3);
    CHECK(m.colength(3) == 6);
    CHECK(m.hilbert_function(0) == 1);
    CHECK(m.hilbert_function(3) == 4);

    LocalRing line(r, I(r, {"y^2"}));
    MPrimaryIdeal mline(line, polys(r, {"x", "y"}));
    CHECK(mline.hilbert_function(0) == 1);
    CHECK(mline.hilbert_function(1) == 2);
    CHECK(mline.hilbert_function(5) == 2);

    // parameter ideal in a 2-dimensional regular ring: lambda(R/I^n) grows as
    // lambda(R/I) * binom(n+1, 2)
    MPrimaryIdeal sq(reg, polys(r, {"x^2", "y^3"}));
    CHECK(sq.colength(1) == 6);
    CHECK(sq.colength(2) == 18);
    CHECK(sq.colength(3) == 36);
}

TEST_CASE("minimal generators modulo q") {
    auto r = qxy();
    LocalRing reg(r, Ideal::zero(r));
    MPrimaryIdeal redundant(reg, polys(r, {"x", "y", "x + y"}));
    CHECK(redundant.min_gens().size() == 2);
    MPrimaryIdeal pow2(reg, polys(r, {"x^2", "x*y", "y^2", "x^2 + x*y"}));
    CHECK(pow2.min_gens().size() == 3);

    // y^2 = x^3 in the cusp, so (x^2, y^2) needs only x^2... plus enough to be
    // m-primary: (x^2, y^2) = (x^2) + (x^3) = (x^2) there
    LocalRing c = cusp();
    MPrimaryIdeal two(c, polys(r, {"x^2", "y^2"}));
    CHECK(two.min_gens().size() == 1);

    // the maximal ideal of the four-variable example needs all four variables
    LocalRing fv = fourvar();
    MPrimaryIdeal mfv(fv, polys(fv.ambient(), {"x", "y", "z", "w"}));
    CHECK(mfv.min_gens().size() == 4);
}

TEST_CASE("tangent cone of hypersurfaces") {
    auto r = qxy();
    Ideal cone = tangent_cone(cusp());
    CHECK(cone.equals(I(r, {"y^2"})));

    // already homogeneous: the cone is the ideal itself
    auto r3 = qxyz();
    LocalRing quadric(r3, I(r3, {"z^2 - x*y"}));
    CHECK(tangent_cone(quadric).equals(I(r3, {"z^2 - x*y"})));

    LocalRing reg(r, Ideal::zero(r));
    CHECK(tangent_cone(reg).is_zero_ideal());
}

TEST_CASE("tangent cone needs the full Groebner pass, not just generator forms") {
    auto r = qxy();
    LocalRing a(r, I(r, {"x^2 - y^3", "x*y - y^4"}));
    Ideal cone = tangent_cone(a);
    // lowest forms of the generators alone give (x^2, x*y); the cone also
    // contains y^4, and the colength certifies no generator is missing
    CHECK(cone.equals(I(r, {"x^2", "x*y", "y^4"})));
    CHECK(cone.vdim_affine() == 5);
    CHECK(a.q().colength_at_origin() == 5);
}

TEST_CASE("tangent cone of the four-variable example") {
    LocalRing fv = fourvar();
    auto r = fv.ambient();
    Ideal cone = tangent_cone(fv);
    Ideal expected = I(r, {"z^2", "y*z", "x*z", "y^4 - x^3*w"});
    CHECK(cone.equals(expected));
}

TEST_CASE("Hilbert function agrees with cone degree slices") {
    // lambda(m^n/m^{n+1}) equals the vector-space dimension of the cone's
    // degree-n strand
    auto check_ring = [](const LocalRing& a, int upto) {
        MPrimaryIdeal m(a, [&] {
            std::vector<Poly> vars;
            for (int v = 0; v < a.ambient()->nvars(); ++v)
                vars.push_back(Poly::var(a.ambient(), v));
            return vars;
        }());
        Ideal cone = tangent_cone(a);
        for (int n = 0; n <= upto; ++n) {
            long slice = static_cast<long>(cone.std_monomials_of_degree(n).size());
            CHECK(m.hilbert_function(n) == slice);
        }
    };
    check_ring(cusp(), 5);
    auto r = qxy();
    check_ring(LocalRing(r, I(r, {"x^2 - y^3", "x*y - y^4"})), 4);
    check_ring(fourvar(), 3);
}
