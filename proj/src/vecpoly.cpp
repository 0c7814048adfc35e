#include "rrlab/vecpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace rrlab {

VecPoly VecPoly::unit(const RingPtr& r, int nc, int comp) {
    VecPoly v(r, nc);
    v.t.push_back({comp, Monomial(r->nvars()), Coeff::one(r->field)});
    return v;
}

VecPoly VecPoly::from_terms(const RingPtr& r, int nc, std::vector<VTerm> ts,
                            const ModuleOrder& mo) {
    VecPoly v(r, nc);
    std::sort(ts.begin(), ts.end(),
              [&](const VTerm& a, const VTerm& b) { return mo.greater(a, b); });
    for (auto& x : ts) {
        if (x.comp < 0 || x.comp >= nc) throw std::out_of_range("VecPoly component");
        if (!v.t.empty() && v.t.back().comp == x.comp && v.t.back().mono == x.mono)
            v.t.back().c += x.c;
        else
            v.t.push_back(std::move(x));
        if (!v.t.empty() && v.t.back().c.is_zero()) v.t.pop_back();
    }
    return v;
}

VecPoly VecPoly::from_column(const std::vector<Poly>& rows, const ModuleOrder& mo) {
    if (rows.empty()) throw std::invalid_argument("empty column");
    std::vector<VTerm> ts;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
        for (const auto& tm : rows[i].terms()) ts.push_back({i, tm.mono, tm.c});
    return from_terms(rows[0].ring(), static_cast<int>(rows.size()), std::move(ts), mo);
}

VecPoly VecPoly::from_poly(const Poly& p, const ModuleOrder& mo) {
    return from_column({p}, mo);
}

std::vector<Poly> VecPoly::to_column() const {
    std::vector<std::vector<Term>> rows(ncomp);
    for (const auto& x : t) rows[x.comp].push_back({x.mono, x.c});
    std::vector<Poly> out;
    out.reserve(ncomp);
    for (auto& r : rows) out.push_back(Poly::from_terms(ring, std::move(r)));
    return out;
}

Poly VecPoly::component(int i) const {
    std::vector<Term> ts;
    for (const auto& x : t)
        if (x.comp == i) ts.push_back({x.mono, x.c});
    return Poly::from_terms(ring, std::move(ts));
}

const VTerm& VecPoly::lead() const {
    if (t.empty()) throw std::domain_error("lead of zero module element");
    return t.front();
}

int VecPoly::hom_degree(const std::vector<int>& twists) const {
    if (t.empty()) return -1;
    int d = static_cast<int>(t[0].mono.deg()) + twists.at(t[0].comp);
    for (const auto& x : t)
        if (static_cast<int>(x.mono.deg()) + twists.at(x.comp) != d)
            throw std::domain_error("module element is not homogeneous");
    return d;
}

bool VecPoly::is_homogeneous(const std::vector<int>& twists) const {
    if (t.empty()) return true;
    int d = static_cast<int>(t[0].mono.deg()) + twists.at(t[0].comp);
    for (const auto& x : t)
        if (static_cast<int>(x.mono.deg()) + twists.at(x.comp) != d) return false;
    return true;
}

VecPoly vp_add(const VecPoly& a, const VecPoly& b, const ModuleOrder& mo) {
    VecPoly r(a.ring, a.ncomp);
    r.t.reserve(a.t.size() + b.t.size());
    std::size_t i = 0, j = 0;
    while (i < a.t.size() || j < b.t.size()) {
        if (j == b.t.size() || (i < a.t.size() && mo.greater(a.t[i], b.t[j]))) {
            r.t.push_back(a.t[i++]);
        } else if (i == a.t.size() || mo.greater(b.t[j], a.t[i])) {
            r.t.push_back(b.t[j++]);
        } else {
            Coeff c = a.t[i].c + b.t[j].c;
            if (!c.is_zero()) r.t.push_back({a.t[i].comp, a.t[i].mono, c});
            ++i, ++j;
        }
    }
    return r;
}

VecPoly vp_neg(const VecPoly& a) {
    VecPoly r(a.ring, a.ncomp);
    r.t.reserve(a.t.size());
    for (const auto& x : a.t) r.t.push_back({x.comp, x.mono, -x.c});
    return r;
}

VecPoly vp_sub(const VecPoly& a, const VecPoly& b, const ModuleOrder& mo) {
    return vp_add(a, vp_neg(b), mo);
}

VecPoly vp_scale(const VecPoly& a, const Coeff& c) {
    VecPoly r(a.ring, a.ncomp);
    if (c.is_zero()) return r;
    r.t.reserve(a.t.size());
    for (const auto& x : a.t) r.t.push_back({x.comp, x.mono, x.c * c});
    return r;
}

VecPoly vp_times_term(const VecPoly& a, const Monomial& m, const Coeff& c) {
    VecPoly r(a.ring, a.ncomp);
    if (c.is_zero()) return r;
    r.t.reserve(a.t.size());
    // multiplying every monomial by m preserves strict descent
    for (const auto& x : a.t) r.t.push_back({x.comp, x.mono * m, x.c * c});
    return r;
}

VecPoly vp_times_poly(const VecPoly& a, const Poly& p, const ModuleOrder& mo) {
    VecPoly r(a.ring, a.ncomp);
    for (const auto& tm : p.terms())
        r = vp_add(r, vp_times_term(a, tm.mono, tm.c), mo);
    return r;
}

bool vp_equal(const VecPoly& a, const VecPoly& b) {
    if (a.ncomp != b.ncomp || a.t.size() != b.t.size()) return false;
    for (std::size_t i = 0; i < a.t.size(); ++i)
        if (a.t[i].comp != b.t[i].comp || a.t[i].mono != b.t[i].mono ||
            a.t[i].c != b.t[i].c)
            return false;
    return true;
}

}  // namespace rrlab
