#include "rrlab/ring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rrlab/monomial.hpp"

namespace rrlab {

int Ring::var_index(const std::string& name) const {
    auto it = std::find(vars.begin(), vars.end(), name);
    return it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
}

RingPtr Ring::make(const Field& k, std::vector<std::string> names) {
    if (names.empty()) throw std::invalid_argument("ring needs at least one variable");
    if (static_cast<int>(names.size()) > Monomial::kMaxVars)
        throw std::invalid_argument("too many ring variables (max " +
                                    std::to_string(Monomial::kMaxVars) + ")");
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw std::invalid_argument("empty variable name");
        if (!seen.insert(n).second)
            throw std::invalid_argument("duplicate variable name: " + n);
    }
    return std::make_shared<const Ring>(Ring{k, std::move(names)});
}

RingPtr Ring::extend(const RingPtr& r, const std::vector<std::string>& extra) {
    std::vector<std::string> names = r->vars;
    for (auto n : extra) {
        while (std::find(names.begin(), names.end(), n) != names.end()) n += "_";
        names.push_back(n);
    }
    return make(r->field, std::move(names));
}

RingPtr Ring::restrict_to(const RingPtr& r, const std::vector<int>& keep) {
    std::vector<std::string> names;
    for (int i : keep) names.push_back(r->vars.at(i));
    return make(r->field, std::move(names));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->field == b->field && a->vars == b->vars;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b)) throw std::invalid_argument("polynomial ring mismatch");
}

}  // namespace rrlab
