#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "rrlab/blowup.hpp"
#include "rrlab/local.hpp"

namespace rrlab {

enum class Verdict { HOLDS, FAILS, INCONCLUSIVE };

std::string verdict_name(Verdict v);

// Outcome of one named check.  HOLDS/FAILS are only produced when every
// sub-computation completed; INCONCLUSIVE carries the reason (budget
// exhaustion or an unmet hypothesis) in the evidence.  paper_ref states the
// mathematical fact being checked.
struct CriterionVerdict {
    std::string criterion;
    Verdict verdict = Verdict::INCONCLUSIVE;
    nlohmann::json evidence = nlohmann::json::object();
    nlohmann::json window = nlohmann::json::object();
    std::string paper_ref;

    nlohmann::json to_json() const;
};

struct CriteriaOptions {
    int n_max = 12;       // Ratliff-Rush window
    int koszul_cap = 8;   // max Koszul generators
    int power_cap = 4;    // depth-table rows
    std::uint64_t seed = 0;
};

// Vanishing of dim_k Ext^{s-1}(G, R)_{-(s-1)} for G the tangent cone;
// equivalent to depth G_{m^n} >= 2 for n >> 0.  Requires depth A >= 2
// (throws "depth A < 2").  Evidence attaches depth-table rows for the powers
// whose generator counts fit the Koszul budget.
CriterionVerdict xi_geq2_criterion(const LocalRing& a, const CriteriaOptions& opt);

// rho(m) <= max{0, a_1(G) + 1}.
CriterionVerdict rho_bound_check(const LocalRing& a, const CriteriaOptions& opt);

// depth G_I(A) >= 1 if and only if rho(I) = 0; both sides computed
// independently.
CriterionVerdict depth_positive_iff_rho_zero(const LocalRing& a, const MPrimaryIdeal& i,
                                             const CriteriaOptions& opt);

// G generalized Cohen-Macaulay iff dim Ext^{s-i}(G,R) <= 0 for
// i = 1..dim A - 1; evidence lists each dimension under "ext<j>_dim".
CriterionVerdict generalized_cm_check(const LocalRing& a, const CriteriaOptions& opt);

// a*_{s0}(G) < a*_{s0+1}(G) for s0 = depth G, under s0 <= depth A - 1.
CriterionVerdict marley_inequality_check(const LocalRing& a, const CriteriaOptions& opt);

// depth R(I) = depth G_I(A) + 1 whenever depth G_I(A) < depth A.
CriterionVerdict huckaba_marley_check(const LocalRing& a, const MPrimaryIdeal& i,
                                      const CriteriaOptions& opt);

}  // namespace rrlab
