#include "rrlab/ideal.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace rrlab {

namespace {

ModuleOrder mo_of(const MonomialOrder& ord) { return ModuleOrder{ord}; }

std::vector<VecPoly> to_vecs(const std::vector<Poly>& ps, const ModuleOrder& mo) {
    std::vector<VecPoly> out;
    out.reserve(ps.size());
    for (const auto& p : ps)
        if (!p.is_zero()) out.push_back(VecPoly::from_poly(p, mo));
    return out;
}

std::vector<Poly> to_polys(const std::vector<VecPoly>& vs) {
    std::vector<Poly> out;
    out.reserve(vs.size());
    for (const auto& v : vs) out.push_back(v.component(0));
    return out;
}

Poly exact_div(const Poly& g, const Poly& f) {
    ModuleOrder mo = mo_of(MonomialOrder::degrevlex(g.ring()->nvars()));
    std::vector<VecPoly> reds{VecPoly::from_poly(f, mo)};
    std::vector<std::vector<Term>> cofs;
    VecPoly r = normal_form(VecPoly::from_poly(g, mo), reds, mo, &cofs);
    if (!r.is_zero()) throw std::logic_error("exact_div: dividend not divisible");
    return Poly::from_terms(g.ring(), cofs[0]);
}

// ---- monomial-ideal combinatorics -----------------------------------------

bool all_monomial(const std::vector<Poly>& gens) {
    for (const auto& g : gens)
        if (!g.is_zero() && !g.is_monomial()) return false;
    return true;
}

// Divisibility-minimal, deduplicated, sorted by ascending degree.
std::vector<Monomial> mono_minimal(std::vector<Monomial> ms) {
    std::stable_sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        for (int i = 0; i < a.nvars(); ++i)
            if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i);
        return false;
    });
    std::vector<Monomial> kept;
    for (const auto& m : ms) {
        bool redundant = false;
        for (const auto& k : kept)
            if (k.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(m);
    }
    return kept;
}

std::vector<Monomial> mono_gens_of(const std::vector<Poly>& gens) {
    std::vector<Monomial> ms;
    for (const auto& g : gens)
        if (!g.is_zero()) ms.push_back(g.terms()[0].mono);
    return mono_minimal(std::move(ms));
}

Ideal from_monos(const RingPtr& r, const std::vector<Monomial>& ms) {
    std::vector<Poly> gens;
    gens.reserve(ms.size());
    for (const auto& m : ms) gens.push_back(Poly::term(r, m, Coeff::one(r->field)));
    return Ideal(r, std::move(gens));
}

// ---- staircase enumeration ------------------------------------------------

bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& gens) {
    for (const auto& g : gens)
        if (g.divides(m)) return true;
    return false;
}

// Walk the complement of the staircase of `gens` inside the box given by
// `bounds` (exclusive).  Partial monomials already divisible by a generator
// are pruned; raising an exponent keeps divisibility, so the loop breaks.
void staircase_dfs(const std::vector<Monomial>& gens, const std::vector<long>& bounds,
                   Monomial& cur, int var, long& count, std::vector<Monomial>* collect) {
    int n = cur.nvars();
    if (var == n) {
        ++count;
        if (collect) collect->push_back(cur);
        return;
    }
    for (long e = 0; e < bounds[var]; ++e) {
        cur.set_exp(var, static_cast<unsigned>(e));
        if (divisible_by_any(cur, gens)) break;
        staircase_dfs(gens, bounds, cur, var + 1, count, collect);
    }
    cur.set_exp(var, 0);
}

void degree_slice_dfs(const std::vector<Monomial>& gens, Monomial& cur, int var,
                      int remaining, std::vector<Monomial>& out) {
    int n = cur.nvars();
    if (var == n - 1) {
        cur.set_exp(var, static_cast<unsigned>(remaining));
        if (!divisible_by_any(cur, gens)) out.push_back(cur);
        cur.set_exp(var, 0);
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        cur.set_exp(var, static_cast<unsigned>(e));
        if (divisible_by_any(cur, gens)) break;
        degree_slice_dfs(gens, cur, var + 1, remaining - e, out);
    }
    cur.set_exp(var, 0);
}

// Largest subset S of `allowed` such that no generator support is contained
// in S; |S| is the Krull dimension of the quotient by the monomial ideal.
int max_indep(const std::vector<std::uint32_t>& supports, std::uint32_t allowed,
              std::map<std::uint32_t, int>& memo) {
    auto it = memo.find(allowed);
    if (it != memo.end()) return it->second;
    std::uint32_t offender = 0;
    for (std::uint32_t s : supports)
        if ((s & ~allowed) == 0) {
            offender = s;
            break;
        }
    int best;
    if (offender == 0) {
        best = __builtin_popcount(allowed);
    } else {
        best = 0;
        for (std::uint32_t bit = 1; bit; bit <<= 1)
            if (offender & bit)
                best = std::max(best, max_indep(supports, allowed & ~bit, memo));
    }
    memo[allowed] = best;
    return best;
}

std::uint32_t support_mask(const Monomial& m) {
    std::uint32_t s = 0;
    for (int i = 0; i < m.nvars(); ++i)
        if (m.exp(i) > 0) s |= (1u << i);
    return s;
}

}  // namespace

struct Ideal::Impl {
    RingPtr ring;
    std::vector<Poly> gens;
    mutable std::mutex mu;
    mutable std::map<std::string, std::vector<Poly>> gb_cache;
    mutable std::optional<int> dim_cache;
    mutable std::optional<long> vdim_cache;
};

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens) : p_(std::make_shared<Impl>()) {
    if (!ring) throw std::logic_error("Ideal: null ring");
    for (const auto& g : gens) require_same_ring(ring, g.ring());
    p_->ring = std::move(ring);
    p_->gens = std::move(gens);
}

void Ideal::require() const {
    if (!p_) throw std::logic_error("Ideal: empty handle");
}

const RingPtr& Ideal::ring() const {
    require();
    return p_->ring;
}

const std::vector<Poly>& Ideal::gens() const {
    require();
    return p_->gens;
}

std::vector<Poly> Ideal::nonzero_gens() const {
    require();
    std::vector<Poly> out;
    for (const auto& g : p_->gens)
        if (!g.is_zero()) out.push_back(g);
    return out;
}

bool Ideal::is_zero_ideal() const { return nonzero_gens().empty(); }

bool Ideal::is_monomial_gens() const {
    require();
    return all_monomial(p_->gens);
}

const std::vector<Poly>& Ideal::gb(const MonomialOrder& ord) const {
    require();
    std::lock_guard<std::mutex> lock(p_->mu);
    std::string key = ord.str();
    auto it = p_->gb_cache.find(key);
    if (it != p_->gb_cache.end()) return it->second;
    ModuleOrder mo = mo_of(ord);
    GBasis b = buchberger(to_vecs(p_->gens, mo), mo);
    std::vector<Poly> polys = to_polys(reduced_basis(std::move(b.elems), mo));
    return p_->gb_cache.emplace(std::move(key), std::move(polys)).first->second;
}

const std::vector<Poly>& Ideal::gb() const {
    return gb(MonomialOrder::degrevlex(ring()->nvars()));
}

std::vector<Monomial> Ideal::initial_gens() const {
    MonomialOrder ord = MonomialOrder::degrevlex(ring()->nvars());
    std::vector<Monomial> out;
    for (const auto& g : gb(ord)) out.push_back(g.lt(ord).mono);
    return out;
}

Poly Ideal::nf(const Poly& f, const MonomialOrder& ord) const {
    require_same_ring(ring(), f.ring());
    if (f.is_zero()) return f;
    ModuleOrder mo = mo_of(ord);
    return normal_form(VecPoly::from_poly(f, mo), to_vecs(gb(ord), mo), mo).component(0);
}

Poly Ideal::nf(const Poly& f) const {
    return nf(f, MonomialOrder::degrevlex(ring()->nvars()));
}

bool Ideal::contains(const Poly& f) const { return nf(f).is_zero(); }

bool Ideal::contains(const Ideal& o) const {
    require_same_ring(ring(), o.ring());
    for (const auto& g : o.nonzero_gens())
        if (!contains(g)) return false;
    return true;
}

bool Ideal::equals(const Ideal& o) const {
    require_same_ring(ring(), o.ring());
    return gb() == o.gb();
}

bool Ideal::is_unit_ideal() const {
    const auto& g = gb();
    return !g.empty() && g.front().is_constant();
}

// ---- constructions --------------------------------------------------------

Ideal Ideal::sum(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<Poly> gens = a.nonzero_gens();
    for (const auto& g : b.nonzero_gens()) gens.push_back(g);
    return Ideal(a.ring(), std::move(gens));
}

Ideal Ideal::sum(const Ideal& a, const std::vector<Poly>& extra) {
    return sum(a, Ideal(a.ring(), extra));
}

Ideal Ideal::product(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<Poly> ga = a.nonzero_gens(), gob = b.nonzero_gens();
    if (ga.empty() || gob.empty()) return Ideal::zero(a.ring());
    if (all_monomial(ga) && all_monomial(gob)) {
        std::vector<Monomial> ms;
        for (const auto& x : ga)
            for (const auto& y : gob) ms.push_back(x.terms()[0].mono * y.terms()[0].mono);
        return from_monos(a.ring(), mono_minimal(std::move(ms)));
    }
    std::vector<Poly> gens;
    gens.reserve(ga.size() * gob.size());
    for (const auto& x : ga)
        for (const auto& y : gob) gens.push_back(x * y);
    return Ideal(a.ring(), std::move(gens));
}

Ideal Ideal::power(const Ideal& a, unsigned n) {
    if (n == 0) return Ideal(a.ring(), {Poly::constant(a.ring(), 1)});
    if (n == 1) return a;
    std::vector<Poly> ga = a.nonzero_gens();
    if (ga.empty()) return Ideal::zero(a.ring());
    if (all_monomial(ga)) {
        std::vector<Monomial> base, ms;
        for (const auto& g : ga) base.push_back(g.terms()[0].mono);
        // nondecreasing index tuples
        std::vector<int> idx(n, 0);
        while (true) {
            Monomial prod = base[idx[0]];
            for (unsigned k = 1; k < n; ++k) prod = prod * base[idx[k]];
            ms.push_back(prod);
            int pos = static_cast<int>(n) - 1;
            while (pos >= 0 && idx[pos] == static_cast<int>(base.size()) - 1) --pos;
            if (pos < 0) break;
            int v = idx[pos] + 1;
            for (int k = pos; k < static_cast<int>(n); ++k) idx[k] = v;
        }
        return from_monos(a.ring(), mono_minimal(std::move(ms)));
    }
    std::vector<Poly> gens;
    std::vector<int> idx(n, 0);
    while (true) {
        Poly prod = ga[idx[0]];
        for (unsigned k = 1; k < n; ++k) prod *= ga[idx[k]];
        gens.push_back(std::move(prod));
        int pos = static_cast<int>(n) - 1;
        while (pos >= 0 && idx[pos] == static_cast<int>(ga.size()) - 1) --pos;
        if (pos < 0) break;
        int v = idx[pos] + 1;
        for (int k = pos; k < static_cast<int>(n); ++k) idx[k] = v;
    }
    return Ideal(a.ring(), std::move(gens));
}

Ideal Ideal::intersect(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal::zero(a.ring());
    if (a.is_monomial_gens() && b.is_monomial_gens()) {
        std::vector<Monomial> ga = mono_gens_of(a.gens()), gbm = mono_gens_of(b.gens()), ms;
        for (const auto& x : ga)
            for (const auto& y : gbm) ms.push_back(Monomial::lcm(x, y));
        return from_monos(a.ring(), mono_minimal(std::move(ms)));
    }
    RingPtr rt = Ring::extend(a.ring(), {"t_"});
    int ti = rt->nvars() - 1;
    Poly t = Poly::var(rt, ti), omt = Poly::constant(rt, 1) - t;
    std::vector<Poly> gens;
    for (const auto& g : a.nonzero_gens()) gens.push_back(t * g.embed(rt));
    for (const auto& g : b.nonzero_gens()) gens.push_back(omt * g.embed(rt));
    return Ideal(rt, std::move(gens)).eliminate({ti}).embedded(a.ring());
}

Ideal Ideal::colon(const Ideal& a, const Poly& f) {
    require_same_ring(a.ring(), f.ring());
    if (f.is_zero()) return Ideal(a.ring(), {Poly::constant(a.ring(), 1)});
    if (a.is_monomial_gens() && f.is_monomial()) {
        const Monomial& fm = f.terms()[0].mono;
        std::vector<Monomial> ms;
        for (const auto& g : mono_gens_of(a.gens()))
            ms.push_back(Monomial::gcd(g, fm).quotient_of(g));
        return from_monos(a.ring(), mono_minimal(std::move(ms)));
    }
    // Colon as a syzygy computation: relations s with s*f in the ideal are
    // exactly the kernel of multiplication by f into R/a.
    ModuleOrder mo = mo_of(MonomialOrder::degrevlex(a.ring()->nvars()));
    std::vector<VecPoly> frozen = to_vecs(a.gb(), mo);
    GBOptions opt;
    opt.want_syz = true;
    GBasis r = buchberger({VecPoly::from_poly(f, mo)}, mo, opt, &frozen);
    std::vector<Poly> gens;
    for (const auto& s : r.syz) {
        Poly c = s.component(0);
        if (!c.is_zero()) gens.push_back(std::move(c));
    }
    return Ideal(a.ring(), std::move(gens));
}

Ideal Ideal::colon_by_intersection(const Ideal& a, const Poly& f) {
    require_same_ring(a.ring(), f.ring());
    if (f.is_zero()) return Ideal(a.ring(), {Poly::constant(a.ring(), 1)});
    Ideal inter = intersect(a, Ideal(a.ring(), {f}));
    std::vector<Poly> gens;
    for (const auto& g : inter.gb()) gens.push_back(exact_div(g, f));
    return Ideal(a.ring(), std::move(gens));
}

Ideal Ideal::colon(const Ideal& a, const Ideal& j) {
    require_same_ring(a.ring(), j.ring());
    std::vector<Poly> gj = j.nonzero_gens();
    if (gj.empty()) return Ideal(a.ring(), {Poly::constant(a.ring(), 1)});
    if (gj.size() == 1) return colon(a, gj[0]);
    if (a.is_monomial_gens() && all_monomial(gj)) {
        Ideal acc = colon(a, gj[0]);
        for (size_t i = 1; i < gj.size(); ++i) acc = intersect(acc, colon(a, gj[i]));
        return acc;
    }
    // One syzygy computation instead of k colons and k-1 intersections:
    // f * (g_1,..,g_k)^T lies in the frozen module a*R^k iff f*g_i is in a
    // for every i, so the colon is the component of the syzygies of the
    // stacked column.
    int k = static_cast<int>(gj.size());
    ModuleOrder mo = mo_of(MonomialOrder::degrevlex(a.ring()->nvars()));
    VecPoly col = VecPoly::from_column(gj, mo);
    std::vector<VecPoly> frozen;
    for (int s = 0; s < k; ++s)
        for (const auto& g : a.gb()) {
            VecPoly v(a.ring(), k);
            for (const auto& t : g.terms()) v.t.push_back(VTerm{s, t.mono, t.c});
            frozen.push_back(std::move(v));
        }
    GBOptions opt;
    opt.want_syz = true;
    GBasis r = buchberger({col}, mo, opt, &frozen);
    std::vector<Poly> gens;
    for (const auto& s : r.syz) {
        Poly c = s.component(0);
        if (!c.is_zero()) gens.push_back(std::move(c));
    }
    return Ideal(a.ring(), std::move(gens));
}

Ideal Ideal::saturation(const Ideal& a, const Poly& f) {
    if (a.is_monomial_gens() && f.is_monomial()) {
        const Monomial& fm = f.terms()[0].mono;
        std::vector<Monomial> ms;
        for (const auto& g : mono_gens_of(a.gens())) {
            Monomial stripped(g.nvars());
            for (int i = 0; i < g.nvars(); ++i)
                stripped.set_exp(i, fm.exp(i) > 0 ? 0 : g.exp(i));
            ms.push_back(stripped);
        }
        return from_monos(a.ring(), mono_minimal(std::move(ms)));
    }
    Ideal prev = a;
    for (int round = 0; round < 256; ++round) {
        Ideal next = colon(prev, f);
        if (next.equals(prev)) return prev;
        prev = next;
    }
    throw std::logic_error("saturation: colon chain failed to stabilize");
}

Ideal Ideal::saturation(const Ideal& a, const Ideal& j) {
    Ideal prev = a;
    for (int round = 0; round < 256; ++round) {
        Ideal next = colon(prev, j);
        if (next.equals(prev)) return prev;
        prev = next;
    }
    throw std::logic_error("saturation: colon chain failed to stabilize");
}

Ideal Ideal::embedded(const RingPtr& target) const {
    std::vector<Poly> gens;
    for (const auto& g : nonzero_gens()) gens.push_back(g.embed(target));
    return Ideal(target, std::move(gens));
}

Ideal Ideal::eliminate(const std::vector<int>& drop) const {
    int n = ring()->nvars();
    std::array<bool, Monomial::kMaxVars> block{};
    std::vector<bool> dropped(n, false);
    for (int d : drop) {
        if (d < 0 || d >= n) throw std::logic_error("eliminate: bad variable index");
        block[d] = true;
        dropped[d] = true;
    }
    const auto& g = gb(MonomialOrder::elim(n, block));
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if (!dropped[i]) keep.push_back(i);
    RingPtr sub = Ring::restrict_to(ring(), keep);
    std::vector<Poly> gens;
    for (const auto& e : g) {
        bool pure = true;
        for (const auto& t : e.terms())
            if (t.mono.deg_on(block) > 0) {
                pure = false;
                break;
            }
        if (pure) gens.push_back(e.restrict_to(sub));
    }
    return Ideal(sub, std::move(gens));
}

// ---- staircase combinatorics ----------------------------------------------

int Ideal::dim() const {
    require();
    {
        std::lock_guard<std::mutex> lock(p_->mu);
        if (p_->dim_cache) return *p_->dim_cache;
    }
    int n = ring()->nvars();
    std::vector<Monomial> in = initial_gens();
    int d;
    if (in.empty()) {
        d = n;
    } else if (in.size() == 1 && in[0].is_one()) {
        d = -1;  // quotient is the zero ring
    } else {
        std::vector<std::uint32_t> supports;
        for (const auto& m : in) supports.push_back(support_mask(m));
        std::map<std::uint32_t, int> memo;
        std::uint32_t allowed = n == 32 ? ~0u : ((1u << n) - 1);
        d = max_indep(supports, allowed, memo);
    }
    std::lock_guard<std::mutex> lock(p_->mu);
    p_->dim_cache = d;
    return d;
}

long Ideal::vdim_affine() const {
    require();
    {
        std::lock_guard<std::mutex> lock(p_->mu);
        if (p_->vdim_cache) return *p_->vdim_cache;
    }
    int n = ring()->nvars();
    std::vector<Monomial> in = initial_gens();
    long count = 0;
    bool infinite = false;
    if (!in.empty() && in[0].is_one()) {
        count = 0;
    } else {
        std::vector<long> bounds(n, -1);
        for (const auto& m : in) {
            std::uint32_t s = support_mask(m);
            if (s && !(s & (s - 1))) {  // pure power of one variable
                int v = __builtin_ctz(s);
                long e = m.exp(v);
                if (bounds[v] < 0 || e < bounds[v]) bounds[v] = e;
            }
        }
        for (int i = 0; i < n; ++i)
            if (bounds[i] < 0) infinite = true;
        if (!infinite) {
            Monomial cur(n);
            staircase_dfs(in, bounds, cur, 0, count, nullptr);
        }
    }
    long result = infinite ? -1 : count;
    std::lock_guard<std::mutex> lock(p_->mu);
    p_->vdim_cache = result;
    return result;
}

std::vector<Monomial> Ideal::std_monomials() const {
    long v = vdim_affine();
    if (v < 0) throw std::logic_error("std_monomials: infinite staircase");
    int n = ring()->nvars();
    std::vector<Monomial> in = initial_gens();
    if (!in.empty() && in[0].is_one()) return {};
    std::vector<long> bounds(n, -1);
    for (const auto& m : in) {
        std::uint32_t s = support_mask(m);
        if (s && !(s & (s - 1))) {
            int var = __builtin_ctz(s);
            long e = m.exp(var);
            if (bounds[var] < 0 || e < bounds[var]) bounds[var] = e;
        }
    }
    Monomial cur(n);
    long count = 0;
    std::vector<Monomial> out;
    staircase_dfs(in, bounds, cur, 0, count, &out);
    return out;
}

std::vector<Monomial> Ideal::std_monomials_of_degree(int d) const {
    int n = ring()->nvars();
    std::vector<Monomial> in = initial_gens();
    if (!in.empty() && in[0].is_one()) return {};
    if (n == 0) {
        std::vector<Monomial> out;
        if (d == 0) out.push_back(Monomial(0));
        return out;
    }
    Monomial cur(n);
    std::vector<Monomial> out;
    degree_slice_dfs(in, cur, 0, d, out);
    return out;
}

// ---- behaviour at the origin ----------------------------------------------

bool Ideal::has_unit_at_origin() const {
    // An element of the ideal has a nonzero constant term iff some generator
    // does: constants of combinations are combinations of constants.
    for (const auto& g : gens())
        for (const auto& t : g.terms())
            if (t.mono.is_one() && !t.c.is_zero()) return true;
    return false;
}

bool Ideal::supported_at_origin_only() const {
    if (!is_zero_dim()) return false;
    long v = vdim_affine();  // finite in the zero-dimensional case
    for (int i = 0; i < ring()->nvars(); ++i) {
        Poly t = nf(Poly::var(ring(), i));
        long e = 1;
        while (e < v && !t.is_zero()) {
            t = nf(t * t);
            e *= 2;
        }
        if (!t.is_zero()) return false;
    }
    return true;
}

long Ideal::colength_at_origin() const {
    if (has_unit_at_origin()) return 0;
    if (supported_at_origin_only()) return vdim_affine();
    // General case: lengths of R/(I + m^N) stabilize exactly at the local
    // colength (Nakayama certifies the first repeat), or grow without bound.
    int n = ring()->nvars();
    long prev = -2;
    for (int N = 1; N <= 64; ++N) {
        Ideal big = sum(*this, from_monos(ring(), monomials_of_degree(ring(), N)));
        long v = big.vdim_affine();
        if (v == prev) return v;
        prev = v;
    }
    throw std::runtime_error("colength_at_origin: not finite at the origin");
}

bool Ideal::locally_contains(const Poly& f) const {
    if (f.is_zero()) return true;
    if (contains(f)) return true;
    return colon(*this, f).has_unit_at_origin();
}

bool Ideal::locally_equals(const Ideal& o) const {
    require_same_ring(ring(), o.ring());
    if (equals(o)) return true;
    for (const auto& g : o.nonzero_gens())
        if (!locally_contains(g)) return false;
    for (const auto& g : nonzero_gens())
        if (!o.locally_contains(g)) return false;
    return true;
}

std::vector<Poly> Ideal::min_gens_local() const {
    std::vector<Poly> cand = nonzero_gens();
    if (all_monomial(cand)) {
        std::vector<Poly> out;
        for (const auto& m : mono_gens_of(cand))
            out.push_back(Poly::term(ring(), m, Coeff::one(ring()->field)));
        return out;
    }
    std::stable_sort(cand.begin(), cand.end(), [](const Poly& a, const Poly& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        return a.str() < b.str();
    });
    // Nakayama: g is redundant iff g lies in (the others) + m*(ideal), and
    // m*(ideal) may be replaced by m*g once the others are kept verbatim.
    size_t i = 0;
    while (i < cand.size()) {
        std::vector<Poly> test;
        for (size_t j = 0; j < cand.size(); ++j)
            if (j != i) test.push_back(cand[j]);
        for (int v = 0; v < ring()->nvars(); ++v)
            test.push_back(Poly::var(ring(), v) * cand[i]);
        if (Ideal(ring(), test).locally_contains(cand[i]))
            cand.erase(cand.begin() + static_cast<long>(i));
        else
            ++i;
    }
    return cand;
}

bool in_radical(const Ideal& i, const Poly& f) {
    require_same_ring(i.ring(), f.ring());
    if (f.is_zero()) return true;
    RingPtr rr = Ring::extend(i.ring(), {"rab_"});
    std::vector<Poly> gens;
    for (const auto& g : i.nonzero_gens()) gens.push_back(g.embed(rr));
    gens.push_back(Poly::constant(rr, 1) -
                   Poly::var(rr, rr->nvars() - 1) * f.embed(rr));
    return Ideal(rr, std::move(gens)).is_unit_ideal();
}

std::vector<Monomial> monomials_of_degree(const RingPtr& r, int d) {
    int n = r->nvars();
    std::vector<Monomial> out;
    if (n == 0) {
        if (d == 0) out.push_back(Monomial(0));
        return out;
    }
    Monomial cur(n);
    std::vector<Monomial> none;
    degree_slice_dfs(none, cur, 0, d, out);
    return out;
}

}  // namespace rrlab
