#include "rrlab/local.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>

#include "rrlab/koszul.hpp"

namespace rrlab {
namespace {

bool has_constant_term(const Poly& g) {
    for (const auto& t : g.terms())
        if (t.mono.is_one() && !t.c.is_zero()) return true;
    return false;
}

}  // namespace

LocalRing::LocalRing(RingPtr ambient, Ideal q) : ambient_(std::move(ambient)), q_(std::move(q)) {
    require_same_ring(ambient_, q_.ring());
    for (const auto& g : q_.gens())
        if (has_constant_term(g)) throw std::invalid_argument("q has a unit term");
}

Ideal LocalRing::max_ideal() const {
    std::vector<Poly> vars;
    for (int v = 0; v < ambient_->nvars(); ++v) vars.push_back(Poly::var(ambient_, v));
    return Ideal(ambient_, std::move(vars));
}

int LocalRing::dim() const { return q_.dim(); }

int LocalRing::depth(int koszul_cap) const {
    if (depth_cache_ != -2) return depth_cache_;
    std::vector<Poly> vars;
    for (int v = 0; v < ambient_->nvars(); ++v) vars.push_back(Poly::var(ambient_, v));
    KoszulOptions opt;
    opt.cap = koszul_cap;
    depth_cache_ = koszul_grade(vars, FreePresentation::cyclic(q_), opt);
    return depth_cache_;
}

MPrimaryIdeal::MPrimaryIdeal(const LocalRing& ring, std::vector<Poly> gens)
    : ring_(ring), powers_(std::make_shared<std::map<int, Ideal>>()) {
    for (auto& g : gens)
        if (!g.is_zero()) gens_.push_back(std::move(g));
    Ideal tot = Ideal::sum(ring_.q(), gens_);
    if (!tot.supported_at_origin_only())
        throw std::invalid_argument("I not m-primary at origin");
}

Ideal MPrimaryIdeal::plain() const { return Ideal(ring_.ambient(), gens_); }

Ideal MPrimaryIdeal::with_q(int n) const {
    if (n <= 0) return Ideal(ring_.ambient(), {Poly::constant(ring_.ambient(), 1)});
    auto it = powers_->find(n);
    if (it != powers_->end()) return it->second;
    Ideal v = Ideal::sum(ring_.q(),
                         Ideal::power(plain(), static_cast<unsigned>(n)).gens());
    powers_->emplace(n, v);
    return v;
}

long MPrimaryIdeal::colength(int n) const {
    if (n <= 0) return 0;
    return with_q(n).colength_at_origin();
}

long MPrimaryIdeal::hilbert_function(int n) const {
    if (n < 0) return 0;
    return colength(n + 1) - colength(n);
}

std::vector<Poly> MPrimaryIdeal::min_gens() const {
    return min_gens_mod_q(plain(), ring_.q());
}

std::vector<Poly> min_gens_mod_q(const Ideal& total, const Ideal& q) {
    const RingPtr& r = total.ring();
    std::vector<Poly> cand = total.nonzero_gens();
    if (q.is_zero_ideal() || q.nonzero_gens().empty()) return total.min_gens_local();
    // Generators of q contribute nothing to total/q; drop them up front.
    std::vector<Poly> kept;
    for (auto& g : cand)
        if (!q.locally_contains(g)) kept.push_back(std::move(g));
    cand = std::move(kept);
    std::stable_sort(cand.begin(), cand.end(), [](const Poly& a, const Poly& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        return a.str() < b.str();
    });
    // g is a redundant generator of total/q exactly when g lies in
    // (the others) + q locally at the origin.
    std::size_t i = 0;
    while (i < cand.size()) {
        std::vector<Poly> test;
        for (std::size_t j = 0; j < cand.size(); ++j)
            if (j != i) test.push_back(cand[j]);
        for (const auto& g : q.nonzero_gens()) test.push_back(g);
        if (Ideal(r, test).locally_contains(cand[i]))
            cand.erase(cand.begin() + static_cast<long>(i));
        else
            ++i;
    }
    return cand;
}

Ideal tangent_cone(const LocalRing& a) {
    const RingPtr& amb = a.ambient();
    std::vector<Poly> qg = a.q().nonzero_gens();
    if (qg.empty()) return Ideal::zero(amb);

    RingPtr ext = Ring::extend(amb, {"h"});
    int hv = ext->nvars() - 1;
    std::vector<Poly> hom;
    for (const auto& g : qg) hom.push_back(g.embed(ext).homogenized(hv));

    MonomialOrder ord = MonomialOrder::deghom(ext->nvars());
    Ideal hom_ideal(ext, std::move(hom));
    const std::vector<Poly>& basis = hom_ideal.gb(ord);

    std::vector<std::optional<Poly>> images(static_cast<std::size_t>(ext->nvars()));
    images[static_cast<std::size_t>(hv)] = Poly::constant(amb, 1);
    std::vector<Poly> forms;
    for (const auto& e : basis) {
        Poly low = e.subst(amb, images).lowest_forms();
        if (!low.is_zero()) forms.push_back(low);
    }
    return Ideal(amb, std::move(forms));
}

void validate_local_input(const RingPtr& ambient, const std::vector<Poly>& q_gens,
                          const std::vector<Poly>& i_gens) {
    LocalRing a(ambient, Ideal(ambient, q_gens));  // throws "q has a unit term"
    if (!i_gens.empty()) MPrimaryIdeal(a, i_gens);  // throws "I not m-primary at origin"
}

}  // namespace rrlab
