#include "rrlab/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rrlab {

std::vector<const VecPoly*> pointers_to(const std::vector<VecPoly>& v) {
    std::vector<const VecPoly*> p;
    p.reserve(v.size());
    for (const auto& x : v) p.push_back(&x);
    return p;
}

VecPoly normal_form(VecPoly v, const std::vector<const VecPoly*>& red,
                    const ModuleOrder& mo, std::vector<std::vector<Term>>* cof) {
    if (cof) cof->assign(red.size(), {});
    VecPoly out(v.ring, v.ncomp);
    while (!v.is_zero()) {
        const VTerm lead = v.t.front();
        int who = -1;
        for (std::size_t k = 0; k < red.size(); ++k) {
            if (red[k]->is_zero()) continue;
            const VTerm& glt = red[k]->lead();
            if (glt.comp == lead.comp && glt.mono.divides(lead.mono)) {
                who = static_cast<int>(k);
                break;
            }
        }
        if (who < 0) {
            out.t.push_back(lead);
            v.t.erase(v.t.begin());
        } else {
            const VecPoly& g = *red[who];
            Monomial m = g.lead().mono.quotient_of(lead.mono);
            Coeff c = lead.c / g.lead().c;
            if (cof) (*cof)[who].push_back({m, c});
            v = vp_sub(v, vp_times_term(g, m, c), mo);
        }
    }
    return out;
}

VecPoly normal_form(VecPoly v, const std::vector<VecPoly>& reducers,
                    const ModuleOrder& mo, std::vector<std::vector<Term>>* cofactors) {
    return normal_form(std::move(v), pointers_to(reducers), mo, cofactors);
}

namespace {

struct PairKey {
    long deg;
    int i, j;  // i < j
    bool operator<(const PairKey& o) const {
        if (deg != o.deg) return deg < o.deg;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

// True when every term of v sits in one single component (the ideal-like
// case, where the coprimality criterion is sound).
bool single_component(const VecPoly& v) {
    for (const auto& x : v.t)
        if (x.comp != v.t[0].comp) return false;
    return true;
}

struct Engine {
    ModuleOrder mo;
    GBOptions opt;
    int ngens = 0;
    int nfrozen = 0;
    RingPtr ring;
    std::vector<VecPoly> elems;  // frozen first, then active
    std::vector<VecPoly> rows;   // expression over original gens (R^ngens); frozen rows zero
    std::vector<VecPoly> syz;
    std::set<PairKey> queue;

    long sdeg(const Monomial& lcm, int comp) const {
        long d = lcm.deg();
        if (opt.twists) d += (*opt.twists)[comp];
        return d;
    }

    Monomial pair_lcm(int i, int j) const {
        return Monomial::lcm(elems[i].lead().mono, elems[j].lead().mono);
    }

    void emit_syz(VecPoly s) {
        if (opt.want_syz && !s.is_zero()) syz.push_back(std::move(s));
    }

    // row := row - sum_k cof_k * rows[k]
    VecPoly apply_cofactors(VecPoly row, const std::vector<std::vector<Term>>& cof) const {
        ModuleOrder rmo{mo.base};
        for (std::size_t k = 0; k < cof.size(); ++k)
            for (const auto& tm : cof[k])
                row = vp_sub(row, vp_times_term(rows[k], tm.mono, tm.c), rmo);
        return row;
    }

    void add_pairs(int t) {
        const VTerm& ltt = elems[t].lead();

        // Gebauer-Moeller B: an old pair (i,j) is redundant once lt(t)
        // divides its lcm and neither new lcm equals the old one.
        for (auto it = queue.begin(); it != queue.end();) {
            int i = it->i, j = it->j;
            if (elems[i].lead().comp == ltt.comp) {
                Monomial lij = pair_lcm(i, j);
                if (ltt.mono.divides(lij) && !(pair_lcm(i, t) == lij) &&
                    !(pair_lcm(j, t) == lij)) {
                    it = queue.erase(it);
                    continue;
                }
            }
            ++it;
        }

        std::vector<int> cand;
        for (int i = 0; i < t; ++i)
            if (!elems[i].is_zero() && elems[i].lead().comp == ltt.comp) cand.push_back(i);
        if (cand.empty()) return;

        std::vector<Monomial> lcms;
        lcms.reserve(cand.size());
        for (int i : cand) lcms.push_back(pair_lcm(i, t));

        // M: drop (i,t) when another new pair's lcm properly divides its lcm
        std::vector<bool> dead(cand.size(), false);
        for (std::size_t a = 0; a < cand.size(); ++a)
            for (std::size_t b = 0; b < cand.size() && !dead[a]; ++b)
                if (a != b && !dead[b] && !(lcms[b] == lcms[a]) && lcms[b].divides(lcms[a]))
                    dead[a] = true;

        // F/T: one representative per lcm class; a class containing a
        // coprime pair is dropped wholesale (its S-polynomial reduces to
        // zero; the corresponding trivial syzygy is emitted directly).
        std::vector<bool> done(cand.size(), false);
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (dead[a] || done[a]) continue;
            std::vector<std::size_t> cls;
            for (std::size_t b = a; b < cand.size(); ++b)
                if (!dead[b] && !done[b] && lcms[b] == lcms[a]) {
                    cls.push_back(b);
                    done[b] = true;
                }
            int coprime_with = -1;
            for (std::size_t b : cls) {
                int i = cand[b];
                if (single_component(elems[i]) && single_component(elems[t]) &&
                    elems[i].lead().mono.coprime(ltt.mono)) {
                    coprime_with = i;
                    break;
                }
            }
            if (coprime_with >= 0) {
                if (opt.want_syz) {
                    // Koszul syzygy g*e_i - f*e_t of the coprime pair
                    int i = coprime_with;
                    ModuleOrder rmo{mo.base};
                    Poly fi = elems[i].component(elems[i].lead().comp);
                    Poly ft = elems[t].component(ltt.comp);
                    emit_syz(vp_sub(vp_times_poly(rows[i], ft, rmo),
                                    vp_times_poly(rows[t], fi, rmo), rmo));
                }
                continue;
            }
            int keep = cand[cls[0]];
            for (std::size_t b : cls) keep = std::min(keep, cand[b]);
            queue.insert(PairKey{sdeg(lcms[cls[0]], ltt.comp), keep, t});
        }
    }

    void insert(VecPoly h, VecPoly row) {
        Coeff lc = h.lead().c;
        if (!lc.is_one()) {
            h = vp_scale(h, lc.inv());
            if (opt.want_syz) row = vp_scale(row, lc.inv());
        }
        elems.push_back(std::move(h));
        rows.push_back(std::move(row));
        add_pairs(static_cast<int>(elems.size()) - 1);
    }

    void run(std::vector<VecPoly> gens) {
        ModuleOrder rmo{mo.base};
        for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
            VecPoly row = opt.want_syz ? VecPoly::unit(ring, ngens, g) : VecPoly(ring, ngens);
            std::vector<std::vector<Term>> cof;
            VecPoly h = normal_form(std::move(gens[g]), pointers_to(elems), mo,
                                    opt.want_syz ? &cof : nullptr);
            if (opt.want_syz) row = apply_cofactors(std::move(row), cof);
            if (h.is_zero())
                emit_syz(std::move(row));
            else
                insert(std::move(h), std::move(row));
        }

        while (!queue.empty()) {
            PairKey k = *queue.begin();
            queue.erase(queue.begin());
            int i = k.i, j = k.j;
            Monomial lcm = pair_lcm(i, j);
            Monomial ui = elems[i].lead().mono.quotient_of(lcm);
            Monomial uj = elems[j].lead().mono.quotient_of(lcm);
            Coeff one = Coeff::one(ring->field);
            VecPoly sp = vp_sub(vp_times_term(elems[i], ui, one),
                                vp_times_term(elems[j], uj, one), mo);
            std::vector<std::vector<Term>> cof;
            VecPoly h = normal_form(std::move(sp), pointers_to(elems), mo,
                                    opt.want_syz ? &cof : nullptr);
            VecPoly row(ring, ngens);
            if (opt.want_syz) {
                row = vp_sub(vp_times_term(rows[i], ui, one),
                             vp_times_term(rows[j], uj, one), rmo);
                row = apply_cofactors(std::move(row), cof);
            }
            if (h.is_zero())
                emit_syz(std::move(row));
            else
                insert(std::move(h), std::move(row));
        }
    }
};

}  // namespace

GBasis buchberger(std::vector<VecPoly> gens, const ModuleOrder& mo,
                  const GBOptions& opt, const std::vector<VecPoly>* frozen) {
    if (gens.empty() && (!frozen || frozen->empty())) return {};
    Engine E{mo, opt};
    E.ngens = static_cast<int>(gens.size());
    E.ring = !gens.empty() ? gens[0].ring : (*frozen)[0].ring;
    if (frozen) {
        for (const auto& f : *frozen) {
            if (f.is_zero()) continue;
            VecPoly g = f;
            if (!g.lead().c.is_one()) g = vp_scale(g, g.lead().c.inv());
            E.elems.push_back(std::move(g));
            E.rows.push_back(VecPoly(E.ring, E.ngens));
        }
        E.nfrozen = static_cast<int>(E.elems.size());
    }
    E.run(std::move(gens));

    GBasis out;
    out.elems.assign(E.elems.begin() + E.nfrozen, E.elems.end());
    out.syz = std::move(E.syz);
    return out;
}

std::vector<VecPoly> reduced_basis(std::vector<VecPoly> gb, const ModuleOrder& mo) {
    std::vector<VecPoly> work;
    for (auto& g : gb) {
        if (g.is_zero()) continue;
        Coeff lc = g.lead().c;
        work.push_back(lc.is_one() ? std::move(g) : vp_scale(g, lc.inv()));
    }
    std::stable_sort(work.begin(), work.end(), [&](const VecPoly& a, const VecPoly& b) {
        return mo.compare(a.lead(), b.lead()) == Cmp::lt;
    });

    // minimal set of leading terms
    std::vector<VecPoly> kept;
    for (auto& g : work) {
        bool redundant = false;
        for (const auto& h : kept)
            if (h.lead().comp == g.lead().comp && h.lead().mono.divides(g.lead().mono)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(std::move(g));
    }

    // reduce tails against the other elements until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < kept.size(); ++i) {
            std::vector<const VecPoly*> others;
            for (std::size_t j = 0; j < kept.size(); ++j)
                if (j != i) others.push_back(&kept[j]);
            VecPoly nf = normal_form(kept[i], others, mo);
            if (!vp_equal(nf, kept[i])) {
                kept[i] = std::move(nf);
                changed = true;
            }
        }
    }

    std::sort(kept.begin(), kept.end(), [&](const VecPoly& a, const VecPoly& b) {
        return mo.compare(a.lead(), b.lead()) == Cmp::gt;
    });
    return kept;
}

}  // namespace rrlab
