#include "rrlab/duality.hpp"

#include <algorithm>

#include "rrlab/groebner.hpp"

namespace rrlab {
namespace {

ModuleOrder mo_for(const RingPtr& r) {
    return ModuleOrder{MonomialOrder::degrevlex(r->nvars())};
}

}  // namespace

std::vector<int> dual_twists(const Resolution& r, int i) {
    std::vector<int> out;
    for (int t : r.stage_twists[static_cast<std::size_t>(i)]) out.push_back(-t);
    return out;
}

std::vector<VecPoly> dual_columns(const Resolution& r, int i) {
    const auto& d = r.diffs[static_cast<std::size_t>(i)];  // F_{i+1} -> F_i
    int nsrc = static_cast<int>(r.stage_twists[static_cast<std::size_t>(i)].size());
    int ntgt = static_cast<int>(d.size());
    ModuleOrder mo = mo_for(r.ring);
    std::vector<VecPoly> out;
    out.reserve(static_cast<std::size_t>(nsrc));
    for (int row = 0; row < nsrc; ++row) {
        VecPoly col(r.ring, ntgt);
        for (int j = 0; j < ntgt; ++j) {
            Poly e = d[static_cast<std::size_t>(j)].component(row);
            if (e.is_zero()) continue;
            col = vp_add(col, vp_times_poly(VecPoly::unit(r.ring, ntgt, j), e, mo), mo);
        }
        out.push_back(std::move(col));
    }
    return out;
}

int ext_graded_piece(const Resolution& r, int i, int d) {
    if (i < 0 || i > r.pd()) return 0;
    std::vector<int> di = dual_twists(r, i);
    int total = static_cast<int>(strand_basis(r.ring, di, d).size());
    if (total == 0) return 0;
    int rank_out = 0;
    if (i < r.pd()) {
        Mat m = strand_matrix(dual_columns(r, i), di, dual_twists(r, i + 1), d, r.ring);
        rank_out = rank_of(std::move(m));
    }
    int rank_in = 0;
    if (i > 0) {
        Mat m =
            strand_matrix(dual_columns(r, i - 1), dual_twists(r, i - 1), di, d, r.ring);
        rank_in = rank_of(std::move(m));
    }
    return total - rank_out - rank_in;
}

GradedModule ext_presentation(const Resolution& r, int i) {
    GradedModule e;
    e.ring = r.ring;
    if (i < 0 || i > r.pd()) return e;
    ModuleOrder mo = mo_for(r.ring);
    std::vector<int> di = dual_twists(r, i);
    int nc = static_cast<int>(di.size());

    // generators: the kernel of the outgoing dual differential
    std::vector<VecPoly> kernel;
    if (i == r.pd()) {
        for (int c = 0; c < nc; ++c) kernel.push_back(VecPoly::unit(r.ring, nc, c));
    } else {
        std::vector<int> dnext = dual_twists(r, i + 1);
        GBOptions opt;
        opt.want_syz = true;
        opt.twists = &dnext;
        kernel = buchberger(dual_columns(r, i), mo, opt).syz;
    }
    if (kernel.empty()) return e;

    std::vector<int> ktw;
    for (const auto& k : kernel) ktw.push_back(k.hom_degree(di));

    // relations: combinations of kernel generators lying in the image of the
    // incoming dual differential
    GBOptions opt;
    opt.want_syz = true;
    opt.twists = &di;
    std::vector<VecPoly> rels;
    if (i == 0) {
        rels = buchberger(kernel, mo, opt).syz;
    } else {
        GBasis img = buchberger(dual_columns(r, i - 1), mo);
        rels = buchberger(kernel, mo, opt, &img.elems).syz;
    }

    e.twists = std::move(ktw);
    e.rels = std::move(rels);
    return minimalize_presentation(std::move(e));
}

int module_dimension(const GradedModule& m) {
    if (m.twists.empty()) return -1;
    if (m.rels.empty()) return m.ring->nvars();
    ModuleOrder mo = mo_for(m.ring);
    GBasis rel_gb = buchberger(m.rels, mo);
    std::optional<Ideal> ann;
    int nc = static_cast<int>(m.twists.size());
    for (int c = 0; c < nc; ++c) {
        GBOptions opt;
        opt.want_syz = true;
        std::vector<VecPoly> gen = {VecPoly::unit(m.ring, nc, c)};
        std::vector<Poly> col_gens;
        for (const auto& s : buchberger(gen, mo, opt, &rel_gb.elems).syz) {
            Poly p = s.component(0);
            if (!p.is_zero()) col_gens.push_back(std::move(p));
        }
        Ideal col(m.ring, col_gens);
        ann = ann ? Ideal::intersect(*ann, col) : col;
        if (ann->nonzero_gens().empty()) break;  // annihilator is already zero
    }
    return ann->dim();
}

AInvariants a_invariants(const Resolution& r) {
    int s = r.ring->nvars();
    AInvariants out;
    out.a.assign(static_cast<std::size_t>(s) + 1, std::nullopt);
    for (int i = 0; i <= s; ++i) {
        int j = s - i;
        if (j > r.pd()) continue;
        GradedModule e = ext_presentation(r, j);
        if (e.twists.empty()) continue;
        int indeg = e.twists[0];
        for (int t : e.twists) indeg = std::min(indeg, t);
        out.a[static_cast<std::size_t>(i)] = -s - indeg;
    }
    return out;
}

}  // namespace rrlab
