#include "rrlab/order.hpp"

#include <stdexcept>

namespace rrlab {

namespace {

// Reverse-lexicographic tie break on a variable range [lo, hi): scanning from
// the back, the monomial with the smaller exponent at the first difference is
// the greater one.  Assumes equal degree on the range.
Cmp revlex_tail(const Monomial& a, const Monomial& b, int lo, int hi) {
    for (int i = hi - 1; i >= lo; --i) {
        if (a.exp(i) != b.exp(i))
            return a.exp(i) < b.exp(i) ? Cmp::gt : Cmp::lt;
    }
    return Cmp::eq;
}

Cmp cmp_unsigned(unsigned x, unsigned y) {
    if (x != y) return x < y ? Cmp::lt : Cmp::gt;
    return Cmp::eq;
}

// degrevlex restricted to the variables selected by `mask`.
Cmp degrevlex_masked(const Monomial& a, const Monomial& b,
                     const std::array<bool, Monomial::kMaxVars>& mask, int n) {
    Cmp d = cmp_unsigned(a.deg_on(mask), b.deg_on(mask));
    if (d != Cmp::eq) return d;
    for (int i = n - 1; i >= 0; --i) {
        if (!mask[i]) continue;
        if (a.exp(i) != b.exp(i))
            return a.exp(i) < b.exp(i) ? Cmp::gt : Cmp::lt;
    }
    return Cmp::eq;
}

}  // namespace

MonomialOrder MonomialOrder::lex(int n) { return MonomialOrder(Kind::lex_k, n); }
MonomialOrder MonomialOrder::degrevlex(int n) { return MonomialOrder(Kind::degrevlex_k, n); }

MonomialOrder MonomialOrder::elim(int n, const std::array<bool, Monomial::kMaxVars>& block) {
    MonomialOrder o(Kind::elim_k, n);
    o.block_ = block;
    return o;
}

MonomialOrder MonomialOrder::elim_front(int n, int front) {
    if (front < 0 || front > n) throw std::invalid_argument("bad elimination block");
    std::array<bool, Monomial::kMaxVars> m{};
    for (int i = 0; i < front; ++i) m[i] = true;
    return elim(n, m);
}

MonomialOrder MonomialOrder::deghom(int n) { return MonomialOrder(Kind::deghom_k, n); }

Cmp MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
    case Kind::lex_k:
        for (int i = 0; i < nvars_; ++i)
            if (a.exp(i) != b.exp(i))
                return a.exp(i) > b.exp(i) ? Cmp::gt : Cmp::lt;
        return Cmp::eq;

    case Kind::degrevlex_k: {
        Cmp d = cmp_unsigned(a.deg(), b.deg());
        if (d != Cmp::eq) return d;
        return revlex_tail(a, b, 0, nvars_);
    }

    case Kind::elim_k: {
        Cmp c = degrevlex_masked(a, b, block_, nvars_);
        if (c != Cmp::eq) return c;
        std::array<bool, Monomial::kMaxVars> rest{};
        for (int i = 0; i < nvars_; ++i) rest[i] = !block_[i];
        return degrevlex_masked(a, b, rest, nvars_);
    }

    case Kind::deghom_k: {
        Cmp d = cmp_unsigned(a.deg(), b.deg());
        if (d != Cmp::eq) return d;
        // heavier in the homogenizing (last) variable wins the tie
        unsigned la = a.exp(nvars_ - 1), lb = b.exp(nvars_ - 1);
        if (la != lb) return la > lb ? Cmp::gt : Cmp::lt;
        return revlex_tail(a, b, 0, nvars_ - 1);
    }
    }
    return Cmp::eq;
}

bool MonomialOrder::operator==(const MonomialOrder& o) const {
    if (kind_ != o.kind_ || nvars_ != o.nvars_) return false;
    if (kind_ == Kind::elim_k) {
        for (int i = 0; i < nvars_; ++i)
            if (block_[i] != o.block_[i]) return false;
    }
    return true;
}

std::string MonomialOrder::str() const {
    switch (kind_) {
    case Kind::lex_k: return "lex";
    case Kind::degrevlex_k: return "degrevlex";
    case Kind::elim_k: {
        std::string s = "elim[";
        for (int i = 0; i < nvars_; ++i) s += block_[i] ? '1' : '0';
        return s + "]";
    }
    case Kind::deghom_k: return "deghom";
    }
    return "?";
}

}  // namespace rrlab
