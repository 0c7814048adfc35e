#include "rrlab/graded.hpp"

#include <algorithm>
#include <stdexcept>

#include "rrlab/groebner.hpp"

namespace rrlab {
namespace {

ModuleOrder mo_for(const RingPtr& r) {
    return ModuleOrder{MonomialOrder::degrevlex(r->nvars())};
}

std::vector<unsigned> basis_key(int comp, const Monomial& m) {
    std::vector<unsigned> k;
    k.push_back(static_cast<unsigned>(comp));
    for (int i = 0; i < m.nvars(); ++i) k.push_back(m.exp(i));
    return k;
}

std::vector<int> column_degrees(const std::vector<VecPoly>& cols,
                                const std::vector<int>& twists) {
    std::vector<int> d;
    d.reserve(cols.size());
    for (const auto& c : cols) d.push_back(c.hom_degree(twists));
    return d;
}

// Greedy graded-Nakayama selection of minimal generators among homogeneous
// columns of a submodule of F = (+) R(-twists[r]).  Columns of each degree d
// are kept exactly when independent modulo (m * submodule)_d plus the
// already-kept columns of the same degree.
std::vector<VecPoly> prune_columns(const RingPtr& ring, const std::vector<int>& twists,
                                   std::vector<VecPoly> cols) {
    std::vector<VecPoly> live;
    for (auto& c : cols)
        if (!c.is_zero()) live.push_back(std::move(c));
    if (live.empty()) return live;

    std::vector<int> degs = column_degrees(live, twists);
    std::vector<std::size_t> order(live.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return degs[a] < degs[b]; });

    const Field& k = ring->field;
    std::vector<VecPoly> kept;
    std::size_t pos = 0;
    while (pos < order.size()) {
        int d = degs[order[pos]];
        auto basis = strand_basis(ring, twists, d);
        std::map<std::vector<unsigned>, int> row_of;
        for (int i = 0; i < static_cast<int>(basis.size()); ++i)
            row_of[basis_key(basis[i].first, basis[i].second)] = i;
        auto strand_vec = [&](const VecPoly& v,
                              const Monomial& mult) -> std::vector<Coeff> {
            std::vector<Coeff> out(basis.size(), Coeff::zero(k));
            for (const auto& t : v.t) {
                auto it = row_of.find(basis_key(t.comp, t.mono * mult));
                if (it == row_of.end())
                    throw std::logic_error("prune_columns: strand lookup failed");
                out[static_cast<std::size_t>(it->second)] += t.c;
            }
            return out;
        };

        // span of (m * N)_d: positive-degree monomial multiples of every column
        std::vector<std::vector<Coeff>> span;
        for (std::size_t j = 0; j < live.size(); ++j) {
            int up = d - degs[j];
            if (up < 1) continue;
            for (const auto& a : monomials_of_degree(ring, up))
                span.push_back(strand_vec(live[j], a));
        }

        auto in_span = [&](const std::vector<Coeff>& v) {
            if (span.empty()) {
                for (const auto& c : v)
                    if (!c.is_zero()) return false;
                return true;
            }
            Mat m(k, static_cast<int>(basis.size()), static_cast<int>(span.size()));
            for (int j = 0; j < static_cast<int>(span.size()); ++j)
                for (int i = 0; i < static_cast<int>(basis.size()); ++i)
                    m.at(i, j) = span[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            return in_col_span(m, v);
        };

        for (; pos < order.size() && degs[order[pos]] == d; ++pos) {
            const VecPoly& cand = live[order[pos]];
            Monomial one(ring->nvars());
            std::vector<Coeff> v = strand_vec(cand, one);
            if (!in_span(v)) {
                kept.push_back(cand);
                span.push_back(std::move(v));
            }
        }
    }
    return kept;
}

bool has_constant_entry(const VecPoly& v, int* row, Coeff* c) {
    for (const auto& t : v.t)
        if (t.mono.is_one()) {
            if (row) *row = t.comp;
            if (c) *c = t.c;
            return true;
        }
    return false;
}

}  // namespace

GradedModule cyclic_graded(const Ideal& i) {
    GradedModule m;
    m.ring = i.ring();
    m.twists = {0};
    ModuleOrder mo = mo_for(m.ring);
    for (const auto& g : i.nonzero_gens()) m.rels.push_back(VecPoly::from_poly(g, mo));
    require_homogeneous(m);
    return m;
}

void require_homogeneous(const GradedModule& m) {
    for (const auto& c : m.rels)
        if (!c.is_homogeneous(m.twists))
            throw std::invalid_argument("graded module: relation is not homogeneous");
}

std::vector<std::pair<int, Monomial>> strand_basis(const RingPtr& r,
                                                   const std::vector<int>& twists, int d) {
    std::vector<std::pair<int, Monomial>> out;
    for (int comp = 0; comp < static_cast<int>(twists.size()); ++comp) {
        int rem = d - twists[static_cast<std::size_t>(comp)];
        if (rem < 0) continue;
        for (const auto& m : monomials_of_degree(r, rem)) out.emplace_back(comp, m);
    }
    return out;
}

Mat strand_matrix(const std::vector<VecPoly>& cols, const std::vector<int>& src_tw,
                  const std::vector<int>& tgt_tw, int d, const RingPtr& r) {
    auto tgt = strand_basis(r, tgt_tw, d);
    std::map<std::vector<unsigned>, int> row_of;
    for (int i = 0; i < static_cast<int>(tgt.size()); ++i)
        row_of[basis_key(tgt[i].first, tgt[i].second)] = i;
    auto src = strand_basis(r, src_tw, d);
    Mat m(r->field, static_cast<int>(tgt.size()), static_cast<int>(src.size()));
    for (int j = 0; j < static_cast<int>(src.size()); ++j) {
        int col_idx = src[static_cast<std::size_t>(j)].first;
        const Monomial& mult = src[static_cast<std::size_t>(j)].second;
        const VecPoly& col = cols[static_cast<std::size_t>(col_idx)];
        for (const auto& t : col.t) {
            auto it = row_of.find(basis_key(t.comp, t.mono * mult));
            if (it == row_of.end())
                throw std::logic_error("strand_matrix: inhomogeneous column");
            m.at(it->second, j) += t.c;
        }
    }
    return m;
}

GradedModule minimalize_presentation(GradedModule m) {
    require_homogeneous(m);
    ModuleOrder mo = mo_for(m.ring);
    std::vector<VecPoly> cols;
    for (auto& c : m.rels)
        if (!c.is_zero()) cols.push_back(std::move(c));

    // Split off unit entries: a constant entry at (row r, column c) says
    // generator r is a combination of the others; substitute and drop both.
    for (;;) {
        int hit_col = -1, row = -1;
        Coeff u = Coeff::zero(m.ring->field);
        for (int c = 0; c < static_cast<int>(cols.size()) && hit_col < 0; ++c)
            if (has_constant_entry(cols[static_cast<std::size_t>(c)], &row, &u)) hit_col = c;
        if (hit_col < 0) break;
        const VecPoly pivot = cols[static_cast<std::size_t>(hit_col)];
        for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
            if (c == hit_col) continue;
            Poly e = cols[static_cast<std::size_t>(c)].component(row);
            if (e.is_zero()) continue;
            cols[static_cast<std::size_t>(c)] = vp_sub(
                cols[static_cast<std::size_t>(c)],
                vp_times_poly(pivot, e.scaled(u.inv()), mo), mo);
        }
        cols.erase(cols.begin() + hit_col);
        // drop component `row` everywhere
        std::vector<int> tw;
        for (int i = 0; i < static_cast<int>(m.twists.size()); ++i)
            if (i != row) tw.push_back(m.twists[static_cast<std::size_t>(i)]);
        m.twists = std::move(tw);
        for (auto& c : cols) {
            c.ncomp -= 1;
            std::vector<VTerm> ts;
            for (auto& t : c.t) {
                if (t.comp == row) continue;  // eliminated above; defensive
                if (t.comp > row) t.comp -= 1;
                ts.push_back(t);
            }
            c.t = std::move(ts);
        }
    }

    m.rels = prune_columns(m.ring, m.twists, std::move(cols));
    return m;
}

Resolution minimal_resolution(const GradedModule& m) {
    GradedModule mm = minimalize_presentation(m);
    const RingPtr& ring = mm.ring;
    ModuleOrder mo = mo_for(ring);

    Resolution res;
    res.ring = ring;
    res.stage_twists.push_back(mm.twists);
    std::vector<VecPoly> cur = mm.rels;
    while (!cur.empty()) {
        if (static_cast<int>(res.diffs.size()) >= ring->nvars())
            throw std::logic_error("resolution exceeds the global length bound");
        std::vector<int> cur_tw = column_degrees(cur, res.stage_twists.back());
        res.diffs.push_back(cur);
        res.stage_twists.push_back(cur_tw);

        GBOptions opt;
        opt.want_syz = true;
        opt.twists = &res.stage_twists[res.stage_twists.size() - 2];
        GBasis g = buchberger(cur, mo, opt);
        for (const auto& s : g.syz)
            if (has_constant_entry(s, nullptr, nullptr))
                throw std::logic_error("syzygy of a minimal stage has a unit entry");
        cur = prune_columns(ring, cur_tw, std::move(g.syz));
    }
    return res;
}

BettiTable betti_of(const Resolution& r) {
    BettiTable t;
    t.pd = r.pd();
    for (int i = 0; i < static_cast<int>(r.stage_twists.size()); ++i)
        for (int tw : r.stage_twists[static_cast<std::size_t>(i)])
            t.b[{i, tw}] += 1;
    return t;
}

int depth_from_betti(const BettiTable& t, int nvars) { return nvars - t.pd; }

int regularity_from_betti(const BettiTable& t) {
    int reg = 0;
    bool any = false;
    for (const auto& [key, count] : t.b) {
        if (count <= 0) continue;
        int v = key.second - key.first;
        if (!any || v > reg) reg = v;
        any = true;
    }
    return any ? reg : 0;
}

}  // namespace rrlab
