#include "rrlab/blowup.hpp"

#include <stdexcept>
#include <string>

namespace rrlab {
namespace {

std::vector<Poly> var_polys(const RingPtr& r, int from, int to) {
    std::vector<Poly> out;
    for (int v = from; v < to; ++v) out.push_back(Poly::var(r, v));
    return out;
}

// gens are exactly the ambient variables, in some order; fills perm[j] = the
// variable index of gens[j]
bool gens_are_variables(const RingPtr& amb, const std::vector<Poly>& gens,
                        std::vector<int>* perm) {
    int s = amb->nvars();
    if (static_cast<int>(gens.size()) != s) return false;
    std::vector<bool> seen(static_cast<std::size_t>(s), false);
    perm->clear();
    for (const auto& g : gens) {
        if (g.nterms() != 1) return false;
        const auto& t = g.terms().front();
        if (!t.c.is_one() || t.mono.deg() != 1) return false;
        int v = -1;
        for (int i = 0; i < s; ++i)
            if (t.mono.exp(i) == 1) v = i;
        if (v < 0 || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
        perm->push_back(v);
    }
    return true;
}

}  // namespace

BlowupPresentation rees_presentation(const LocalRing& a, const std::vector<Poly>& gens) {
    const RingPtr& amb = a.ambient();
    int s = amb->nvars();
    int m = static_cast<int>(gens.size());
    if (s + m + 1 > Monomial::kMaxVars)
        throw std::runtime_error("rees presentation: variable budget exceeded");

    std::vector<std::string> extra;
    for (int j = 1; j <= m; ++j) extra.push_back("y" + std::to_string(j));
    extra.push_back("t");
    RingPtr ext = Ring::extend(amb, extra);  // extend dedups clashing names
    int tvar = s + m;

    std::vector<Poly> work;
    for (const auto& g : a.q().nonzero_gens()) work.push_back(g.embed(ext));
    Poly t = Poly::var(ext, tvar);
    for (int j = 0; j < m; ++j)
        work.push_back(Poly::var(ext, s + j) -
                       gens[static_cast<std::size_t>(j)].embed(ext) * t);

    Ideal graph(ext, std::move(work));
    Ideal rees = graph.eliminate({tvar});

    BlowupPresentation b;
    b.ambient = rees.ring();
    b.s = s;
    b.m = m;
    b.rees_ideal = rees;
    b.f = gens;

    // substitution check: y_j -> f_j t sends each relation into (q)k[x,y,t]
    Ideal q_ext = a.q().embedded(ext);
    std::vector<std::optional<Poly>> images(static_cast<std::size_t>(ext->nvars()));
    for (int j = 0; j < m; ++j)
        images[static_cast<std::size_t>(s + j)] =
            gens[static_cast<std::size_t>(j)].embed(ext) * t;
    for (const auto& g : rees.nonzero_gens())
        if (!q_ext.contains(g.embed(ext).subst(ext, images)))
            throw std::logic_error("rees presentation: substitution check failed");
    return b;
}

Ideal assoc_graded_ideal(const BlowupPresentation& b, const LocalRing& a) {
    const RingPtr& amb = b.ambient;
    std::vector<Poly> gens;
    for (const auto& g : a.q().nonzero_gens()) gens.push_back(g.embed(amb));
    for (const auto& g : b.rees_ideal.nonzero_gens()) gens.push_back(g);
    for (const auto& f : b.f) gens.push_back(f.embed(amb));
    Ideal ag(amb, std::move(gens));

    std::vector<int> perm;
    if (b.s <= 4 && gens_are_variables(a.ambient(), b.f, &perm)) {
        // I = m: the y-part of the quotient must present the tangent cone
        std::vector<std::optional<Poly>> images(static_cast<std::size_t>(amb->nvars()));
        for (int i = 0; i < b.s; ++i) images[static_cast<std::size_t>(i)] = Poly(amb);
        for (int j = 0; j < b.m; ++j)
            images[static_cast<std::size_t>(b.s + j)] =
                Poly::var(amb, perm[static_cast<std::size_t>(j)]);
        std::vector<Poly> back;
        for (const auto& g : ag.nonzero_gens()) {
            Poly h = g.subst(amb, images).restrict_to(a.ambient());
            if (!h.is_zero()) back.push_back(std::move(h));
        }
        if (!Ideal(a.ambient(), back).equals(tangent_cone(a)))
            throw std::logic_error(
                "associated graded presentation disagrees with the tangent cone");
    }
    return ag;
}

Ideal fiber_cone_ideal(const BlowupPresentation& b, const LocalRing& a) {
    const RingPtr& amb = b.ambient;
    std::vector<int> keep;
    for (int j = 0; j < b.m; ++j) keep.push_back(b.s + j);
    RingPtr yring = Ring::restrict_to(amb, keep);

    std::vector<std::optional<Poly>> images(static_cast<std::size_t>(amb->nvars()));
    for (int i = 0; i < b.s; ++i) images[static_cast<std::size_t>(i)] = Poly(amb);

    std::vector<Poly> gens;
    for (const auto& g : a.q().nonzero_gens()) {
        Poly h = g.embed(amb).subst(amb, images);
        if (!h.is_zero()) gens.push_back(h.restrict_to(yring));
    }
    for (const auto& g : b.rees_ideal.nonzero_gens()) {
        Poly h = g.subst(amb, images);
        if (!h.is_zero()) gens.push_back(h.restrict_to(yring));
    }
    return Ideal(yring, std::move(gens));
}

DepthOutcome depth_G(const BlowupPresentation& b, const LocalRing& a, int koszul_cap,
                     std::uint64_t seed) {
    Ideal ag = assoc_graded_ideal(b, a);
    DepthOutcome out;
    if (b.s + b.m <= koszul_cap) {
        KoszulOptions opt;
        opt.cap = koszul_cap;
        out.depth = koszul_grade(var_polys(b.ambient, 0, b.s + b.m),
                                 FreePresentation::cyclic(ag), opt);
        out.certified = true;
        return out;
    }
    std::vector<int> yvars;
    for (int j = 0; j < b.m; ++j) yvars.push_back(b.s + j);
    DepthResult r = depth_by_parameters(ag, yvars, seed);
    out.depth = r.depth;
    out.certified = r.certified;
    return out;
}

DepthOutcome depth_F(const BlowupPresentation& b, const LocalRing& a,
                     std::uint64_t seed) {
    Ideal fib = fiber_cone_ideal(b, a);
    std::vector<int> all;
    for (int j = 0; j < b.m; ++j) all.push_back(j);
    DepthResult r = depth_by_parameters(fib, all, seed);
    DepthOutcome out;
    out.depth = r.depth;
    out.certified = r.certified;
    return out;
}

DepthOutcome depth_R(const BlowupPresentation& b, const LocalRing& a, int koszul_cap,
                     std::uint64_t seed) {
    Ideal ri = Ideal::sum(a.q().embedded(b.ambient), b.rees_ideal);
    DepthOutcome out;
    if (b.s + b.m <= koszul_cap) {
        KoszulOptions opt;
        opt.cap = koszul_cap;
        out.depth = koszul_grade(var_polys(b.ambient, 0, b.s + b.m),
                                 FreePresentation::cyclic(ri), opt);
        out.certified = true;
        return out;
    }
    std::vector<int> all;
    for (int v = 0; v < b.s + b.m; ++v) all.push_back(v);
    DepthResult r = depth_by_parameters(ri, all, seed);
    out.depth = r.depth;
    out.certified = r.certified;
    return out;
}

std::vector<DepthRow> depth_table_powers(const LocalRing& a, const MPrimaryIdeal& i,
                                         const DepthTableOptions& opt) {
    std::vector<DepthRow> rows;
    for (int l = 1; l <= opt.l_max; ++l) {
        DepthRow row;
        row.power = l;
        std::vector<Poly> gens = min_gens_mod_q(i.with_q(l), a.q());
        row.num_gens = static_cast<int>(gens.size());
        if (a.ambient()->nvars() + row.num_gens + 1 > Monomial::kMaxVars) {
            row.budget_exceeded = true;
            rows.push_back(std::move(row));
            continue;
        }
        BlowupPresentation b = rees_presentation(a, gens);
        DepthOutcome g = depth_G(b, a, opt.koszul_cap, opt.seed + 2 * l);
        if (g.certified)
            row.depth_G = g.depth;
        else
            row.budget_exceeded = true;
        DepthOutcome f = depth_F(b, a, opt.seed + 2 * l + 1);
        if (f.certified)
            row.depth_F = f.depth;
        else
            row.budget_exceeded = true;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace rrlab
