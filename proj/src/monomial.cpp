#include "rrlab/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace rrlab {

Monomial::Monomial(int nvars) : n_(nvars) {
    if (nvars < 1 || nvars > kMaxVars)
        throw std::invalid_argument("monomial variable count out of range");
}

void Monomial::set_exp(int i, unsigned e) {
    if (i < 0 || i >= n_) throw std::out_of_range("monomial variable index");
    if (e > kMaxExp) throw std::overflow_error("monomial exponent overflow");
    deg_ += e - e_[i];
    e_[i] = static_cast<std::uint16_t>(e);
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r(n_);
    for (int i = 0; i < n_; ++i) {
        unsigned s = e_[i] + static_cast<unsigned>(o.e_[i]);
        if (s > kMaxExp) throw std::overflow_error("monomial exponent overflow");
        r.e_[i] = static_cast<std::uint16_t>(s);
    }
    r.deg_ = deg_ + o.deg_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (int i = 0; i < n_; ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
    Monomial r(n_);
    for (int i = 0; i < n_; ++i) {
        if (e_[i] > o.e_[i]) throw std::domain_error("monomial does not divide");
        r.e_[i] = static_cast<std::uint16_t>(o.e_[i] - e_[i]);
    }
    r.deg_ = o.deg_ - deg_;
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    unsigned d = 0;
    for (int i = 0; i < a.n_; ++i) {
        r.e_[i] = std::max(a.e_[i], b.e_[i]);
        d += r.e_[i];
    }
    r.deg_ = d;
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    unsigned d = 0;
    for (int i = 0; i < a.n_; ++i) {
        r.e_[i] = std::min(a.e_[i], b.e_[i]);
        d += r.e_[i];
    }
    r.deg_ = d;
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    for (int i = 0; i < n_; ++i)
        if (e_[i] && o.e_[i]) return false;
    return true;
}

unsigned Monomial::deg_on(const std::array<bool, kMaxVars>& mask) const {
    unsigned d = 0;
    for (int i = 0; i < n_; ++i)
        if (mask[i]) d += e_[i];
    return d;
}

bool Monomial::operator==(const Monomial& o) const {
    if (n_ != o.n_ || deg_ != o.deg_) return false;
    return std::equal(e_.begin(), e_.begin() + n_, o.e_.begin());
}

Monomial Monomial::embed(int new_nvars, const int* map) const {
    Monomial r(new_nvars);
    for (int i = 0; i < n_; ++i)
        if (e_[i]) r.set_exp(map[i], e_[i]);
    return r;
}

}  // namespace rrlab
