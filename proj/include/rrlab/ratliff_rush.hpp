#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rrlab/local.hpp"

namespace rrlab {

// Ratliff-Rush closure of I^n, as an ideal of the ambient ring containing q:
// the stable value of the ascending chain (I^{n+j} + q : I^j), with
// stabilization certified by two consecutive steps agreeing locally at the
// origin.  Requires (0 : I) = 0 in the local ring; throws std::runtime_error
// ("grade zero: ...") otherwise, and when the chain does not settle within
// j_cap steps.
Ideal rr_closure(const MPrimaryIdeal& i, int n, int j_cap = 20);

struct RRRow {
    int power = 0;
    long defect = 0;                  // lambda(closure of I^n / I^n)
    std::vector<Poly> closure_gens;   // minimal local generators mod q
};

struct RRReport {
    std::optional<int> rho;   // least n with zero defect from n through n_max
    bool rho_exceeds_bound = false;
    int n_max = 0;
    std::vector<RRRow> table;
};

RRReport rr_report(const MPrimaryIdeal& i, int n_max);

// The stabilization index alone (no generator minimization): least n such
// that I^k is Ratliff-Rush closed for all n <= k <= n_max; nullopt when the
// defect at n_max itself is nonzero (the window shows no stabilization).
std::optional<int> rho_observed(const MPrimaryIdeal& i, int n_max);

// Superficiality test for a fixed x in I: the colon identity
// (I^{n+1} + q : x) = I^n + q locally, for all rho_obs <= n <= n_check.
bool is_superficial(const MPrimaryIdeal& i, const Poly& x, int n_check, int rho_obs);

struct SuperficialPick {
    Poly x;
    std::vector<long> coeffs;  // as drawn, one per generator
    std::uint64_t seed = 0;
    int rho_obs = 0;
};

// Seeded random combinations x = sum c_k g_k with coefficients from {1..101},
// accepted once is_superficial passes.  Throws std::runtime_error when the
// attempt budget runs out or the observed window shows no stabilization.
SuperficialPick find_superficial(const MPrimaryIdeal& i, int n_check,
                                 std::uint64_t seed, int attempts = 25);

// rho through the colon characterization for a superficial x: the least r
// such that (I^{n+1} + q : x) = I^n + q locally for all r <= n <= n_max;
// nullopt when the identity fails at n_max itself.
std::optional<int> rho_via_colon(const MPrimaryIdeal& i, const Poly& x, int n_max);

// Degreewise checks of the multiplication/colon mechanism along a
// superficial element.
struct SupexRow {
    int n = 0;
    bool colon_in_closure = false;  // (I^{n+1}+q : x) inside closure(I^n), locally
    bool multiply_up = false;       // x * closure(I^n) inside closure(I^{n+1}), locally
    bool ok() const { return colon_in_closure && multiply_up; }
};

struct SupexReport {
    bool grade_ok = false;        // depth of the ambient local ring is >= 2
    bool mod_x_grade_ok = false;  // the closure chain makes sense in A/(x)
    bool length_injective = false;  // lambda(closure(I)/I) <= the same mod x
    long defect_here = -1;          // lambda(closure(I)/I) in A
    long defect_mod_x = -1;         // lambda(closure(I)/I) in A/(x)
    std::vector<SupexRow> rows;
    bool all_ok() const;
};

SupexReport check_supexN(const MPrimaryIdeal& i, const Poly& x, int n_max);

}  // namespace rrlab
