#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rrlab/criteria.hpp"
#include "rrlab/text.hpp"

using namespace rrlab;

namespace {

RingPtr qxy() { return Ring::make(Field::rationals(), {"x", "y"}); }

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

LocalRing plane() {
    auto r = qxy();
    return LocalRing(r, Ideal::zero(r));
}

LocalRing cusp() {
    auto r = qxy();
    return LocalRing(r, I(r, {"y^2 - x^3"}));
}

LocalRing quadric() {
    auto r = Ring::make(Field::rationals(), {"x", "y", "z"});
    return LocalRing(r, I(r, {"z^2 - x*y"}));
}

LocalRing fourvar() {
    auto r = Ring::make(Field::rationals(), {"x", "y", "z", "w"});
    return LocalRing(r, I(r, {"-x^2*w + y*z", "-y^3 + x*z", "x*y^2*w - z^2"}));
}

}  // namespace

TEST_CASE("xi criterion on regular and quadric rings") {
    CriteriaOptions opt;
    CriterionVerdict v = xi_geq2_criterion(plane(), opt);
    CHECK(v.verdict == Verdict::HOLDS);
    CHECK(v.evidence["ext_piece_dim"] == 0);
    // every attached corroboration row shows the full depth 2
    for (const auto& row : v.evidence["depth_rows"]) CHECK(row["depth_G"] == 2);
    CHECK(v.evidence["depth_rows"].size() >= 3);

    CriterionVerdict q = xi_geq2_criterion(quadric(), opt);
    CHECK(q.verdict == Verdict::HOLDS);
    CHECK(q.evidence["ext_piece_dim"] == 0);
}

TEST_CASE("xi criterion rejects shallow rings with the exact message") {
    CriteriaOptions opt;
    CHECK_THROWS_WITH_AS(xi_geq2_criterion(cusp(), opt), "depth A < 2",
                         std::runtime_error);
}

TEST_CASE("xi criterion fails on the four-variable ring") {
    CriteriaOptions opt;
    opt.power_cap = 1;  // keep the corroboration cheap here
    CriterionVerdict v = xi_geq2_criterion(fourvar(), opt);
    CHECK(v.verdict == Verdict::FAILS);
    CHECK(v.evidence["ext_index"] == 3);
    CHECK(v.evidence["ext_degree"] == -3);
    CHECK(v.evidence["ext_piece_dim"].get<int>() > 0);
    REQUIRE(v.evidence["depth_rows"].size() == 1);
    CHECK(v.evidence["depth_rows"][0]["depth_G"] == 1);
}

TEST_CASE("rho bound on regular and four-variable rings") {
    CriteriaOptions opt;
    CriterionVerdict v = rho_bound_check(plane(), opt);
    CHECK(v.verdict == Verdict::HOLDS);
    CHECK(v.evidence["rho"] == 0);
    CHECK(v.evidence["a1"].is_null());  // a_1 = -infinity for the plane
    CHECK(v.evidence["bound"] == 0);

    CriterionVerdict f = rho_bound_check(fourvar(), opt);
    CHECK(f.verdict == Verdict::HOLDS);
    CHECK(f.evidence["rho"] == 0);
}

TEST_CASE("depth positive iff rho zero, both polarities") {
    CriteriaOptions opt;
    LocalRing a = plane();

    MPrimaryIdeal m(a, polys(a.ambient(), {"x", "y"}));
    CriterionVerdict v = depth_positive_iff_rho_zero(a, m, opt);
    CHECK(v.verdict == Verdict::HOLDS);
    CHECK(v.evidence["rho"] == 0);
    CHECK(v.evidence["depth_G"].get<int>() >= 1);

    MPrimaryIdeal i(a, polys(a.ambient(), {"x^4", "x^3*y", "x*y^3", "y^4"}));
    CriterionVerdict w = depth_positive_iff_rho_zero(a, i, opt);
    CHECK(w.verdict == Verdict::HOLDS);
    CHECK(w.evidence["rho"] == 2);
    CHECK(w.evidence["depth_G"] == 0);

    // window too small: honest INCONCLUSIVE, never a guess
    CriteriaOptions tight;
    tight.n_max = 1;
    CriterionVerdict t = depth_positive_iff_rho_zero(a, i, tight);
    CHECK(t.verdict == Verdict::INCONCLUSIVE);
}

TEST_CASE("generalized CM check") {
    CriteriaOptions opt;
    CriterionVerdict v = generalized_cm_check(plane(), opt);
    CHECK(v.verdict == Verdict::HOLDS);
    CHECK(v.evidence["ext1_dim"] == -1);

    CriterionVerdict q = generalized_cm_check(quadric(), opt);
    CHECK(q.verdict == Verdict::HOLDS);
    CHECK(q.evidence["ext2_dim"] == -1);

    CriterionVerdict f = generalized_cm_check(fourvar(), opt);
    CHECK(f.verdict == Verdict::FAILS);
    CHECK(f.evidence["ext3_dim"] == 1);
}

TEST_CASE("Marley inequality") {
    CriteriaOptions opt;
    // depth G = depth A: hypothesis unmet, skipped
    CriterionVerdict p = marley_inequality_check(plane(), opt);
    CHECK(p.verdict == Verdict::INCONCLUSIVE);

    CriterionVerdict f = marley_inequality_check(fourvar(), opt);
    CHECK(f.verdict == Verdict::HOLDS);
    CHECK(f.evidence["s0"] == 1);
    REQUIRE(!f.evidence["a_star_hi"].is_null());
    CHECK((f.evidence["a_star_lo"].is_null() ||
           f.evidence["a_star_lo"].get<int>() < f.evidence["a_star_hi"].get<int>()));
}

TEST_CASE("Huckaba-Marley") {
    CriteriaOptions opt;
    LocalRing a = plane();
    MPrimaryIdeal i(a, polys(a.ambient(), {"x^4", "x^3*y", "x*y^3", "y^4"}));
    CriterionVerdict v = huckaba_marley_check(a, i, opt);
    CHECK(v.verdict == Verdict::HOLDS);
    CHECK(v.evidence["depth_G"] == 0);
    CHECK(v.evidence["depth_R"] == 1);

    // depth G = depth A: hypothesis unmet
    MPrimaryIdeal m(a, polys(a.ambient(), {"x", "y"}));
    CriterionVerdict w = huckaba_marley_check(a, m, opt);
    CHECK(w.verdict == Verdict::INCONCLUSIVE);
}

TEST_CASE("verdict JSON schema") {
    CriteriaOptions opt;
    CriterionVerdict v = rho_bound_check(plane(), opt);
    auto j = v.to_json();
    CHECK(j.contains("criterion"));
    CHECK(j.contains("verdict"));
    CHECK(j.contains("evidence"));
    CHECK(j.contains("window"));
    CHECK(j.contains("paper_ref"));
    CHECK(j["verdict"] == "HOLDS");
    CHECK(j["criterion"] == "rho_bound");
}
