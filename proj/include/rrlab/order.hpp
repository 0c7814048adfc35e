#pragma once

#include <array>
#include <string>

#include "rrlab/monomial.hpp"

namespace rrlab {

enum class Cmp { lt = -1, eq = 0, gt = 1 };

// A global monomial order on a fixed number of variables.  Supported kinds:
//
//   lex         plain lexicographic
//   degrevlex   total degree, ties by reverse lexicographic
//   elim(S)     block order eliminating the variables in S: degrevlex on the
//               S-block first, then degrevlex on the rest
//   deghom      total degree, ties by descending exponent of the last
//               variable, then reverse lexicographic on the others.  Within a
//               degree class the last variable weighs as much as possible;
//               with a homogenizing variable in last position this makes
//               leading terms track lowest-degree forms of dehomogenizations,
//               which is what the tangent cone extraction needs.  (Breaking
//               the tie the other way — last variable least — provably drops
//               cone generators: for (x^2-y^3, x*y-y^4) it loses y^4.)
class MonomialOrder {
public:
    static MonomialOrder lex(int nvars);
    static MonomialOrder degrevlex(int nvars);
    static MonomialOrder elim(int nvars, const std::array<bool, Monomial::kMaxVars>& block);
    // Convenience: eliminate the first `front` variables.
    static MonomialOrder elim_front(int nvars, int front);
    static MonomialOrder deghom(int nvars);

    Cmp compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::lt; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::gt; }

    int nvars() const { return nvars_; }
    // Degree-compatible orders refine divisibility degreewise; lex does not.
    bool degree_compatible() const { return kind_ != Kind::lex_k; }

    bool operator==(const MonomialOrder& o) const;
    std::string str() const;

private:
    enum class Kind { lex_k, degrevlex_k, elim_k, deghom_k };
    MonomialOrder(Kind k, int n) : kind_(k), nvars_(n) {}

    Kind kind_;
    int nvars_;
    std::array<bool, Monomial::kMaxVars> block_{};  // elim only
};

}  // namespace rrlab
