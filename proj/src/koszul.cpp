#include "rrlab/koszul.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include "rrlab/groebner.hpp"

namespace rrlab {
namespace {

// All size-j subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets_of(int n, int j) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // iterative DFS via recursion on start index
    struct Rec {
        int n, j;
        std::vector<std::vector<int>>& out;
        std::vector<int>& cur;
        void go(int start) {
            if (static_cast<int>(cur.size()) == j) {
                out.push_back(cur);
                return;
            }
            for (int v = start; v < n; ++v) {
                cur.push_back(v);
                go(v + 1);
                cur.pop_back();
            }
        }
    } rec{n, j, out, cur};
    if (j >= 0 && j <= n) rec.go(0);
    return out;
}

// Index lookup for a subset list.
std::map<std::vector<int>, int> index_of(const std::vector<std::vector<int>>& ss) {
    std::map<std::vector<int>, int> m;
    for (int i = 0; i < static_cast<int>(ss.size()); ++i) m[ss[i]] = i;
    return m;
}

// Groebner basis of the relation module, computed once per call site.
std::vector<VecPoly> rel_gb(const FreePresentation& m, const ModuleOrder& mo) {
    if (m.rels.empty()) return {};
    GBOptions opt;
    const std::vector<int>* tw = m.twists.empty() ? nullptr : &m.twists;
    opt.twists = tw;
    return buchberger(m.rels, mo, opt).elems;
}

// Lift a relation GB of R^b into R^(slots*b): one copy per slot, components
// offset by slot*b.  Leading terms of distinct slots live in distinct
// components, so the union is again a Groebner basis.
std::vector<VecPoly> lift_rels(const std::vector<VecPoly>& gb, int slots, int b,
                               const RingPtr& ring) {
    std::vector<VecPoly> out;
    out.reserve(gb.size() * static_cast<std::size_t>(slots));
    for (int s = 0; s < slots; ++s)
        for (const auto& g : gb) {
            VecPoly v(ring, slots * b);
            v.t = g.t;
            for (auto& t : v.t) t.comp += s * b;
            out.push_back(v);
        }
    return out;
}

// Columns of the Koszul differential d_j : K_j -> K_{j-1} tensored with
// R^b.  Basis vector (S, c) maps to sum_t (-1)^t g_{S[t]} e_{S minus S[t]} e_c.
std::vector<VecPoly> koszul_diff(const std::vector<Poly>& gens, int b,
                                 const std::vector<std::vector<int>>& src,
                                 const std::map<std::vector<int>, int>& tgt_idx,
                                 const RingPtr& ring, const ModuleOrder& mo) {
    int n_tgt_subsets = tgt_idx.empty() ? 1 : static_cast<int>(tgt_idx.size());
    int nc_tgt = n_tgt_subsets * b;
    std::vector<VecPoly> cols;
    for (const auto& S : src) {
        for (int c = 0; c < b; ++c) {
            std::vector<VTerm> ts;
            for (int t = 0; t < static_cast<int>(S.size()); ++t) {
                std::vector<int> rest;
                for (int u = 0; u < static_cast<int>(S.size()); ++u)
                    if (u != t) rest.push_back(S[u]);
                int slot = tgt_idx.at(rest);
                const Poly& g = gens[static_cast<std::size_t>(S[t])];
                for (const auto& term : g.terms()) {
                    Coeff c2 = (t % 2 == 0) ? term.c : -term.c;
                    ts.push_back(VTerm{slot * b + c, term.mono, c2});
                }
            }
            cols.push_back(VecPoly::from_terms(ring, nc_tgt, std::move(ts), mo));
        }
    }
    return cols;
}

}  // namespace

FreePresentation FreePresentation::cyclic(const Ideal& i) {
    FreePresentation m;
    m.ring = i.ring();
    m.ncomp = 1;
    ModuleOrder mo{MonomialOrder::degrevlex(m.ring->nvars())};
    for (const auto& g : i.nonzero_gens()) m.rels.push_back(VecPoly::from_poly(g, mo));
    return m;
}

bool koszul_homology_nonzero(const std::vector<Poly>& gens,
                             const FreePresentation& m, int j) {
    int n = static_cast<int>(gens.size());
    int b = m.ncomp;
    const RingPtr& ring = m.ring;
    ModuleOrder mo{MonomialOrder::degrevlex(ring->nvars())};
    if (j < 0 || j > n) return false;

    std::vector<VecPoly> relgb = rel_gb(m, mo);

    auto S_j = subsets_of(n, j);
    auto S_jm1 = subsets_of(n, j - 1);
    auto S_jp1 = subsets_of(n, j + 1);
    auto idx_jm1 = index_of(S_jm1);
    auto idx_j = index_of(S_j);
    int nc_j = static_cast<int>(S_j.size()) * b;

    // Kernel of d_j modulo relations: generators of {v : d_j v in N_(j-1)}.
    std::vector<VecPoly> kernel;
    if (j == 0) {
        // d_0 = 0: the kernel is all of K_0 = R^b.
        for (int c = 0; c < b; ++c) kernel.push_back(VecPoly::unit(ring, b, c));
    } else {
        auto dj_cols = koszul_diff(gens, b, S_j, idx_jm1, ring, mo);
        std::vector<VecPoly> frozen_tgt =
            lift_rels(relgb, static_cast<int>(S_jm1.size()), b, ring);
        GBOptions opt;
        opt.want_syz = true;
        GBasis gbres = buchberger(dj_cols, mo, opt,
                                  frozen_tgt.empty() ? nullptr : &frozen_tgt);
        kernel = std::move(gbres.syz);
    }
    if (kernel.empty()) return false;

    // Image of d_(j+1) plus relations in slot form; membership by normal form.
    std::vector<VecPoly> image_cols;
    if (j + 1 <= n)
        image_cols = koszul_diff(gens, b, S_jp1, idx_j, ring, mo);
    std::vector<VecPoly> frozen_here = lift_rels(relgb, static_cast<int>(S_j.size()), b, ring);
    GBasis im_gb = buchberger(image_cols, mo, {},
                              frozen_here.empty() ? nullptr : &frozen_here);
    std::vector<const VecPoly*> reducers = pointers_to(im_gb.elems);
    for (const auto& f : frozen_here) reducers.push_back(&f);

    for (const auto& k : kernel) {
        VecPoly v = k;
        v.ncomp = nc_j;
        if (!normal_form(std::move(v), reducers, mo).is_zero()) return true;
    }
    return false;
}

int koszul_grade(const std::vector<Poly>& gens, const FreePresentation& m,
                 const KoszulOptions& opt) {
    int n = static_cast<int>(gens.size());
    if (n > opt.cap) throw std::runtime_error("Koszul budget exceeded");
    for (int j = n; j >= 0; --j)
        if (koszul_homology_nonzero(gens, m, j)) return n - j;
    throw std::logic_error("koszul_grade: zero module");
}

DepthResult depth_by_parameters(const Ideal& q, const std::vector<int>& form_vars,
                                std::uint64_t seed, int tries_per_level) {
    const RingPtr& ring = q.ring();
    int n = ring->nvars();
    std::vector<Poly> all_vars;
    for (int v = 0; v < n; ++v) all_vars.push_back(Poly::var(ring, v));
    Ideal j_all(ring, all_vars);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(1, 101);

    DepthResult res;
    Ideal cur = q;
    int dim_bound = q.dim();
    for (;;) {
        if (res.depth >= dim_bound) {
            // depth cannot exceed the dimension, so the sequence is maximal
            res.certified = true;
            return res;
        }
        // Socle test: exact upper certificate, independent of the randomness.
        if (!Ideal::colon(cur, j_all).equals(cur)) {
            res.certified = true;
            return res;
        }
        bool extended = false;
        for (int t = 0; t < tries_per_level && !extended; ++t) {
            Poly z(ring);
            for (int v : form_vars) {
                long c = pick(rng);
                z += Poly::var(ring, v).scaled(Coeff::from_long(ring->field, c));
            }
            if (z.is_zero()) continue;
            if (Ideal::colon(cur, z).equals(cur)) {
                cur = Ideal::sum(cur, {z});
                res.sequence.push_back(z);
                res.depth += 1;
                extended = true;
            }
        }
        if (!extended) {
            // A regular form exists (the socle test said so) but none of the
            // sampled candidates worked.
            res.budget_exceeded = true;
            return res;
        }
    }
}

}  // namespace rrlab
