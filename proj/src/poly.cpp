#include "rrlab/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace rrlab {

namespace {
MonomialOrder canon(const RingPtr& r) { return MonomialOrder::degrevlex(r->nvars()); }
}

Poly::Poly(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw std::invalid_argument("null ring");
}

Poly Poly::constant(const RingPtr& r, const Coeff& c) {
    Poly p(r);
    if (!c.is_zero()) p.t_.push_back({Monomial(r->nvars()), c});
    return p;
}

Poly Poly::constant(const RingPtr& r, long v) {
    return constant(r, Coeff::from_long(r->field, v));
}

Poly Poly::var(const RingPtr& r, int i, unsigned e) {
    Monomial m(r->nvars());
    m.set_exp(i, e);
    return term(r, m, Coeff::one(r->field));
}

Poly Poly::term(const RingPtr& r, const Monomial& m, const Coeff& c) {
    if (m.nvars() != r->nvars()) throw std::invalid_argument("monomial/ring mismatch");
    Poly p(r);
    if (!c.is_zero()) p.t_.push_back({m, c});
    return p;
}

Poly Poly::from_terms(const RingPtr& r, std::vector<Term> ts) {
    Poly p(r);
    p.t_ = std::move(ts);
    p.normalize();
    return p;
}

void Poly::normalize() {
    MonomialOrder ord = canon(ring_);
    std::sort(t_.begin(), t_.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
    std::vector<Term> out;
    out.reserve(t_.size());
    for (auto& t : t_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().c.is_zero()) out.pop_back();
    }
    t_ = std::move(out);
}

int Poly::deg() const {
    int d = -1;
    for (const auto& t : t_) d = std::max(d, static_cast<int>(t.mono.deg()));
    return d;
}

int Poly::min_deg() const {
    if (t_.empty()) return -1;
    unsigned d = t_[0].mono.deg();
    for (const auto& t : t_) d = std::min(d, t.mono.deg());
    return static_cast<int>(d);
}

bool Poly::is_homogeneous() const {
    for (const auto& t : t_)
        if (t.mono.deg() != t_[0].mono.deg()) return false;
    return true;
}

bool Poly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_[0].mono.is_one());
}

const Term& Poly::lt(const MonomialOrder& ord) const {
    if (t_.empty()) throw std::domain_error("leading term of zero polynomial");
    const Term* best = &t_[0];
    for (const auto& t : t_)
        if (ord.greater(t.mono, best->mono)) best = &t;
    return *best;
}

Poly Poly::operator+(const Poly& o) const {
    require_same_ring(ring_, o.ring_);
    MonomialOrder ord = canon(ring_);
    Poly r(ring_);
    r.t_.reserve(t_.size() + o.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
        if (j == o.t_.size() || (i < t_.size() && ord.greater(t_[i].mono, o.t_[j].mono))) {
            r.t_.push_back(t_[i++]);
        } else if (i == t_.size() || ord.greater(o.t_[j].mono, t_[i].mono)) {
            r.t_.push_back(o.t_[j++]);
        } else {
            Coeff c = t_[i].c + o.t_[j].c;
            if (!c.is_zero()) r.t_.push_back({t_[i].mono, c});
            ++i, ++j;
        }
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r(ring_);
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.push_back({t.mono, -t.c});
    return r;
}

Poly Poly::scaled(const Coeff& c) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.push_back({t.mono, t.c * c});
    return r;
}

Poly Poly::times_term(const Monomial& m, const Coeff& c) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.push_back({t.mono * m, t.c * c});
    return r;  // multiplying by a monomial preserves the term order
}

Poly Poly::operator*(const Poly& o) const {
    require_same_ring(ring_, o.ring_);
    std::vector<Term> prod;
    prod.reserve(t_.size() * o.t_.size());
    for (const auto& a : t_)
        for (const auto& b : o.t_) prod.push_back({a.mono * b.mono, a.c * b.c});
    return from_terms(ring_, std::move(prod));
}

Poly Poly::pow(unsigned n) const {
    Poly r = constant(ring_, 1);
    Poly base = *this;
    while (n) {
        if (n & 1) r *= base;
        base = n > 1 ? base * base : base;
        n >>= 1;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (!same_ring(ring_, o.ring_) || t_.size() != o.t_.size()) return false;
    for (std::size_t i = 0; i < t_.size(); ++i)
        if (t_[i].mono != o.t_[i].mono || t_[i].c != o.t_[i].c) return false;
    return true;
}

Poly Poly::subst(const RingPtr& target,
                 const std::vector<std::optional<Poly>>& images) const {
    Poly out(target);
    for (const auto& t : t_) {
        Poly factor = Poly::constant(target, t.c);
        for (int i = 0; i < ring_->nvars(); ++i) {
            unsigned e = t.mono.exp(i);
            if (!e) continue;
            if (i < static_cast<int>(images.size()) && images[i]) {
                factor *= images[i]->pow(e);
            } else {
                int j = target->var_index(ring_->vars[i]);
                if (j < 0)
                    throw std::invalid_argument("subst: variable " + ring_->vars[i] +
                                                " missing from target ring");
                factor *= Poly::var(target, j, e);
            }
        }
        out += factor;
    }
    return out;
}

Poly Poly::embed(const RingPtr& target) const {
    int map[Monomial::kMaxVars];
    for (int i = 0; i < ring_->nvars(); ++i) {
        map[i] = target->var_index(ring_->vars[i]);
        if (map[i] < 0)
            throw std::invalid_argument("embed: variable " + ring_->vars[i] +
                                        " missing from target ring");
    }
    std::vector<Term> ts;
    ts.reserve(t_.size());
    for (const auto& t : t_) ts.push_back({t.mono.embed(target->nvars(), map), t.c});
    return from_terms(target, std::move(ts));
}

Poly Poly::restrict_to(const RingPtr& target) const {
    int map[Monomial::kMaxVars];
    for (int i = 0; i < ring_->nvars(); ++i) map[i] = target->var_index(ring_->vars[i]);
    for (const auto& t : t_)
        for (int i = 0; i < ring_->nvars(); ++i)
            if (t.mono.exp(i) && map[i] < 0)
                throw std::domain_error("restrict_to: polynomial involves " + ring_->vars[i]);
    // unused variables may be absent from the target; park them anywhere
    for (int i = 0; i < ring_->nvars(); ++i)
        if (map[i] < 0) map[i] = 0;
    std::vector<Term> ts;
    ts.reserve(t_.size());
    for (const auto& t : t_) ts.push_back({t.mono.embed(target->nvars(), map), t.c});
    return from_terms(target, std::move(ts));
}

Poly Poly::homogenized(int hvar) const {
    unsigned d = static_cast<unsigned>(std::max(deg(), 0));
    std::vector<Term> ts;
    ts.reserve(t_.size());
    for (const auto& t : t_) {
        Monomial m = t.mono;
        m.set_exp(hvar, m.exp(hvar) + (d - m.deg()));
        ts.push_back({m, t.c});
    }
    return from_terms(ring_, std::move(ts));
}

Poly Poly::lowest_forms() const {
    int d = min_deg();
    std::vector<Term> ts;
    for (const auto& t : t_)
        if (static_cast<int>(t.mono.deg()) == d) ts.push_back(t);
    return from_terms(ring_, std::move(ts));
}

Poly Poly::monic(const MonomialOrder& ord) const {
    if (is_zero()) return *this;
    return scaled(lt(ord).c.inv());
}

}  // namespace rrlab
