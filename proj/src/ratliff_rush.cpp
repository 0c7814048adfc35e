#include "rrlab/ratliff_rush.hpp"

#include <random>
#include <stdexcept>

namespace rrlab {
namespace {

// a inside b, locally at the origin.
bool loc_subset(const Ideal& a, const Ideal& b) {
    for (const auto& g : a.nonzero_gens())
        if (!b.locally_contains(g)) return false;
    return true;
}

void require_positive_grade(const MPrimaryIdeal& i) {
    // (0 : I) = 0 in the local ring: (q : I) must collapse back to q.
    Ideal c = Ideal::colon(i.ring().q(), i.plain());
    if (!loc_subset(c, i.ring().q()))
        throw std::runtime_error(
            "grade zero: Ratliff-Rush chain need not terminate meaningfully");
}

// One step (current : I), staying inside the ambient ring.
Ideal colon_by_i(const Ideal& cur, const MPrimaryIdeal& i) {
    return Ideal::colon(cur, i.plain());
}

}  // namespace

Ideal rr_closure(const MPrimaryIdeal& i, int n, int j_cap) {
    if (n <= 0) return Ideal(i.ring().ambient(), {Poly::constant(i.ring().ambient(), 1)});
    require_positive_grade(i);
    // W_j = (I^{n+j} + q : I^j), an ascending chain whose union is the
    // closure; accept after two consecutive locally-equal steps.
    std::vector<Ideal> w;  // w[t] = W_{t+1}
    int equal_run = 0;
    for (int j = 1; j <= j_cap; ++j) {
        Ideal cur = i.with_q(n + j);
        for (int t = 0; t < j; ++t) cur = colon_by_i(cur, i);
        if (!w.empty() && loc_subset(cur, w.back()))
            ++equal_run;  // ascending, so one inclusion is equality
        else
            equal_run = 0;
        w.push_back(cur);
        if (equal_run >= 2) return w[w.size() - 3];
    }
    throw std::runtime_error("Ratliff-Rush chain did not stabilize within the budget");
}

RRReport rr_report(const MPrimaryIdeal& i, int n_max) {
    RRReport rep;
    rep.n_max = n_max;
    int last_bad = 0;
    for (int n = 1; n <= n_max; ++n) {
        RRRow row;
        row.power = n;
        Ideal cl = rr_closure(i, n);
        long base = i.colength(n);
        long closed = cl.colength_at_origin();
        row.defect = base - closed;
        row.closure_gens = min_gens_mod_q(cl, i.ring().q());
        if (row.defect != 0) last_bad = n;
        rep.table.push_back(std::move(row));
    }
    if (last_bad == n_max && n_max > 0 && rep.table.back().defect != 0) {
        rep.rho_exceeds_bound = true;
    } else {
        rep.rho = last_bad == 0 ? 0 : last_bad + 1;
    }
    return rep;
}

std::optional<int> rho_observed(const MPrimaryIdeal& i, int n_max) {
    int last_bad = 0;
    for (int n = 1; n <= n_max; ++n) {
        Ideal cl = rr_closure(i, n);
        if (i.colength(n) != cl.colength_at_origin()) last_bad = n;
    }
    if (last_bad == n_max && n_max > 0) return std::nullopt;
    return last_bad == 0 ? 0 : last_bad + 1;
}

bool is_superficial(const MPrimaryIdeal& i, const Poly& x, int n_check, int rho_obs) {
    if (x.is_zero()) return false;
    for (int n = std::max(rho_obs, 0); n <= n_check; ++n) {
        // (I^{n+1}+q : x) = I^n + q locally; the right-to-left inclusion is
        // automatic (x lies in I), so only the forward direction is checked.
        Ideal c = Ideal::colon(i.with_q(n + 1), x);
        if (!loc_subset(c, i.with_q(n))) return false;
    }
    return true;
}

SuperficialPick find_superficial(const MPrimaryIdeal& i, int n_check,
                                 std::uint64_t seed, int attempts) {
    std::optional<int> rho = rho_observed(i, n_check);
    if (!rho)
        throw std::runtime_error(
            "superficial search: no stabilization inside the window");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> pick(1, 101);
    const auto& gens = i.gens();
    for (int a = 0; a < attempts; ++a) {
        Poly x(i.ring().ambient());
        std::vector<long> coeffs;
        for (const auto& g : gens) {
            long c = pick(rng);
            coeffs.push_back(c);
            x += g.scaled(Coeff::from_long(i.ring().ambient()->field, c));
        }
        if (is_superficial(i, x, n_check, *rho))
            return SuperficialPick{x, std::move(coeffs), seed, *rho};
    }
    throw std::runtime_error("superficial search: attempt budget exhausted");
}

std::optional<int> rho_via_colon(const MPrimaryIdeal& i, const Poly& x, int n_max) {
    int last_bad = 0;
    for (int n = 1; n <= n_max; ++n) {
        Ideal c = Ideal::colon(i.with_q(n + 1), x);
        if (!loc_subset(c, i.with_q(n))) last_bad = n;
    }
    if (last_bad == n_max && n_max > 0) return std::nullopt;
    return last_bad == 0 ? 0 : last_bad + 1;
}

bool SupexReport::all_ok() const {
    if (!grade_ok || !mod_x_grade_ok || !length_injective) return false;
    for (const auto& r : rows)
        if (!r.ok()) return false;
    return true;
}

SupexReport check_supexN(const MPrimaryIdeal& i, const Poly& x, int n_max) {
    SupexReport rep;
    rep.grade_ok = i.ring().depth() >= 2;

    // Closures in A, shared across the rows.
    std::vector<Ideal> closure;  // closure[n] = closure of I^n (n = 0 is the unit ideal)
    closure.push_back(Ideal(i.ring().ambient(), {Poly::constant(i.ring().ambient(), 1)}));
    for (int n = 1; n <= n_max + 1; ++n) closure.push_back(rr_closure(i, n));

    for (int n = 1; n <= n_max; ++n) {
        SupexRow row;
        row.n = n;
        Ideal c = Ideal::colon(i.with_q(n + 1), x);
        row.colon_in_closure = loc_subset(c, closure[static_cast<std::size_t>(n)]);
        std::vector<Poly> lifted;
        for (const auto& g : closure[static_cast<std::size_t>(n)].nonzero_gens())
            lifted.push_back(g * x);
        row.multiply_up = loc_subset(Ideal(i.ring().ambient(), lifted),
                                     closure[static_cast<std::size_t>(n) + 1]);
        rep.rows.push_back(row);
    }

    // Injectivity at n = 0 by length comparison: lambda(closure(I)/I) in A
    // must not exceed the same length taken in A/(x).
    rep.defect_here = i.colength(1) - closure[1].colength_at_origin();
    try {
        LocalRing mod_x(i.ring().ambient(),
                        Ideal::sum(i.ring().q(), {x}));
        MPrimaryIdeal i2(mod_x, i.gens());
        Ideal cl2 = rr_closure(i2, 1);
        rep.defect_mod_x = i2.colength(1) - cl2.colength_at_origin();
        rep.mod_x_grade_ok = true;
        rep.length_injective = rep.defect_here <= rep.defect_mod_x;
    } catch (const std::runtime_error&) {
        rep.mod_x_grade_ok = false;
        rep.length_injective = false;
    }
    return rep;
}

}  // namespace rrlab
