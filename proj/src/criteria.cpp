#include "rrlab/criteria.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "rrlab/duality.hpp"
#include "rrlab/graded.hpp"
#include "rrlab/ratliff_rush.hpp"

namespace rrlab {
namespace {

using nlohmann::json;

std::vector<Poly> maximal_ideal_gens(const LocalRing& a) {
    std::vector<Poly> out;
    for (int v = 0; v < a.ambient()->nvars(); ++v)
        out.push_back(Poly::var(a.ambient(), v));
    return out;
}

json a_inv_json(const AInvariants& ai) {
    json out = json::array();
    for (const auto& v : ai.a)
        out.push_back(v ? json(*v) : json(nullptr));
    return out;
}

// a*_i = max_{j <= i} a_j; nullopt = -infinity
std::optional<int> a_star(const AInvariants& ai, int i) {
    std::optional<int> best;
    for (int j = 0; j <= i && j < static_cast<int>(ai.a.size()); ++j) {
        auto v = ai.a[static_cast<std::size_t>(j)];
        if (v && (!best || *v > *best)) best = *v;
    }
    return best;
}

}  // namespace

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::HOLDS: return "HOLDS";
        case Verdict::FAILS: return "FAILS";
        default: return "INCONCLUSIVE";
    }
}

json CriterionVerdict::to_json() const {
    return json{{"criterion", criterion},
                {"verdict", verdict_name(verdict)},
                {"evidence", evidence},
                {"window", window},
                {"paper_ref", paper_ref}};
}

CriterionVerdict xi_geq2_criterion(const LocalRing& a, const CriteriaOptions& opt) {
    CriterionVerdict v;
    v.criterion = "xi_geq2";
    v.paper_ref =
        "the critical Ext strand of the tangent cone vanishes if and only if "
        "the associated graded rings of all large powers of the maximal ideal "
        "have depth at least 2";

    int depth_a = a.depth(opt.koszul_cap);
    if (depth_a < 2) throw std::runtime_error("depth A < 2");

    int s = a.ambient()->nvars();
    Resolution res = minimal_resolution(cyclic_graded(tangent_cone(a)));
    int piece = ext_graded_piece(res, s - 1, -(s - 1));

    v.verdict = piece == 0 ? Verdict::HOLDS : Verdict::FAILS;
    v.evidence["depth_A"] = depth_a;
    v.evidence["ext_index"] = s - 1;
    v.evidence["ext_degree"] = -(s - 1);
    v.evidence["ext_piece_dim"] = piece;
    v.window["koszul_cap"] = opt.koszul_cap;

    // corroborating depth rows, only for powers whose generator counts keep
    // the Koszul grade affordable
    MPrimaryIdeal m(a, maximal_ideal_gens(a));
    json rows = json::array();
    for (int l = 1; l <= opt.power_cap; ++l) {
        std::vector<Poly> gens = min_gens_mod_q(m.with_q(l), a.q());
        if (s + static_cast<int>(gens.size()) > opt.koszul_cap) break;
        BlowupPresentation b = rees_presentation(a, gens);
        DepthOutcome g = depth_G(b, a, opt.koszul_cap, opt.seed + l);
        if (!g.certified) break;
        rows.push_back(json{{"power", l},
                            {"num_gens", static_cast<int>(gens.size())},
                            {"depth_G", g.depth}});
    }
    v.evidence["depth_rows"] = rows;
    v.window["power_cap"] = opt.power_cap;
    return v;
}

CriterionVerdict rho_bound_check(const LocalRing& a, const CriteriaOptions& opt) {
    CriterionVerdict v;
    v.criterion = "rho_bound";
    v.paper_ref =
        "the Ratliff-Rush stabilization index of the maximal ideal is at most "
        "max(0, a_1 of the tangent cone + 1)";

    MPrimaryIdeal m(a, maximal_ideal_gens(a));
    RRReport rr = rr_report(m, opt.n_max);
    v.window["n_max"] = opt.n_max;

    Resolution res = minimal_resolution(cyclic_graded(tangent_cone(a)));
    AInvariants ai = a_invariants(res);
    std::optional<int> a1 = ai.at(1);
    int bound = std::max(0, a1 ? *a1 + 1 : 0);
    v.evidence["a1"] = a1 ? json(*a1) : json(nullptr);
    v.evidence["bound"] = bound;

    if (!rr.rho) {
        v.verdict = Verdict::INCONCLUSIVE;
        v.evidence["reason"] = "rho did not stabilize inside the window";
        return v;
    }
    v.evidence["rho"] = *rr.rho;
    v.verdict = *rr.rho <= bound ? Verdict::HOLDS : Verdict::FAILS;
    return v;
}

CriterionVerdict depth_positive_iff_rho_zero(const LocalRing& a, const MPrimaryIdeal& i,
                                             const CriteriaOptions& opt) {
    CriterionVerdict v;
    v.criterion = "depth_positive_iff_rho_zero";
    v.paper_ref =
        "the associated graded ring has positive depth if and only if every "
        "power of the ideal is Ratliff-Rush closed";

    RRReport rr = rr_report(i, opt.n_max);
    v.window["n_max"] = opt.n_max;
    if (!rr.rho) {
        v.verdict = Verdict::INCONCLUSIVE;
        v.evidence["reason"] = "rho did not stabilize inside the window";
        return v;
    }

    std::vector<Poly> gens = min_gens_mod_q(i.with_q(1), a.q());
    BlowupPresentation b = rees_presentation(a, gens);
    DepthOutcome g = depth_G(b, a, opt.koszul_cap, opt.seed);
    v.window["koszul_cap"] = opt.koszul_cap;
    if (!g.certified) {
        v.verdict = Verdict::INCONCLUSIVE;
        v.evidence["reason"] = "depth of the associated graded ring not certified";
        return v;
    }

    v.evidence["rho"] = *rr.rho;
    v.evidence["depth_G"] = g.depth;
    v.verdict = ((g.depth >= 1) == (*rr.rho == 0)) ? Verdict::HOLDS : Verdict::FAILS;
    return v;
}

CriterionVerdict generalized_cm_check(const LocalRing& a, const CriteriaOptions& opt) {
    CriterionVerdict v;
    v.criterion = "generalized_cm";
    v.paper_ref =
        "the tangent cone is generalized Cohen-Macaulay if and only if the "
        "Ext duals of its below-top local cohomology are zero-dimensional";

    int d = a.dim();
    if (d < 1) throw std::runtime_error("dim A < 1");
    int s = a.ambient()->nvars();
    v.window["koszul_cap"] = opt.koszul_cap;

    Resolution res = minimal_resolution(cyclic_graded(tangent_cone(a)));
    bool all_small = true;
    for (int i = 1; i <= d - 1; ++i) {
        GradedModule e = ext_presentation(res, s - i);
        int dim_i = module_dimension(e);
        v.evidence["ext" + std::to_string(s - i) + "_dim"] = dim_i;
        if (dim_i > 0) all_small = false;
    }
    v.verdict = all_small ? Verdict::HOLDS : Verdict::FAILS;
    return v;
}

CriterionVerdict marley_inequality_check(const LocalRing& a, const CriteriaOptions& opt) {
    CriterionVerdict v;
    v.criterion = "marley_inequality";
    v.paper_ref =
        "the running maxima of the a-invariants of the tangent cone increase "
        "strictly from index depth(G) to the next index";

    Resolution res = minimal_resolution(cyclic_graded(tangent_cone(a)));
    int s = a.ambient()->nvars();
    int s0 = depth_from_betti(betti_of(res), s);
    int depth_a = a.depth(opt.koszul_cap);
    v.evidence["s0"] = s0;
    v.evidence["depth_A"] = depth_a;
    if (s0 > depth_a - 1) {
        v.verdict = Verdict::INCONCLUSIVE;
        v.evidence["reason"] = "hypothesis depth G <= depth A - 1 not met";
        return v;
    }

    AInvariants ai = a_invariants(res);
    v.evidence["a_invariants"] = a_inv_json(ai);
    std::optional<int> lo = a_star(ai, s0);
    std::optional<int> hi = a_star(ai, s0 + 1);
    v.evidence["a_star_lo"] = lo ? json(*lo) : json(nullptr);
    v.evidence["a_star_hi"] = hi ? json(*hi) : json(nullptr);

    // -infinity < finite; -infinity < -infinity is false
    bool holds = hi && (!lo || *lo < *hi);
    v.verdict = holds ? Verdict::HOLDS : Verdict::FAILS;
    return v;
}

CriterionVerdict huckaba_marley_check(const LocalRing& a, const MPrimaryIdeal& i,
                                      const CriteriaOptions& opt) {
    CriterionVerdict v;
    v.criterion = "huckaba_marley";
    v.paper_ref =
        "when the associated graded ring is shallower than the base ring, the "
        "Rees algebra is exactly one deeper than the associated graded ring";

    int depth_a = a.depth(opt.koszul_cap);
    std::vector<Poly> gens = min_gens_mod_q(i.with_q(1), a.q());
    BlowupPresentation b = rees_presentation(a, gens);
    DepthOutcome g = depth_G(b, a, opt.koszul_cap, opt.seed);
    v.window["koszul_cap"] = opt.koszul_cap;
    v.evidence["depth_A"] = depth_a;
    if (!g.certified) {
        v.verdict = Verdict::INCONCLUSIVE;
        v.evidence["reason"] = "depth of the associated graded ring not certified";
        return v;
    }
    v.evidence["depth_G"] = g.depth;
    if (g.depth >= depth_a) {
        v.verdict = Verdict::INCONCLUSIVE;
        v.evidence["reason"] = "hypothesis depth G < depth A not met";
        return v;
    }

    DepthOutcome r = depth_R(b, a, opt.koszul_cap, opt.seed + 1);
    if (!r.certified) {
        v.verdict = Verdict::INCONCLUSIVE;
        v.evidence["reason"] = "depth of the Rees algebra not certified";
        return v;
    }
    v.evidence["depth_R"] = r.depth;
    v.verdict = r.depth == g.depth + 1 ? Verdict::HOLDS : Verdict::FAILS;
    return v;
}

}  // namespace rrlab
