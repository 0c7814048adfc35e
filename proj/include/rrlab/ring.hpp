#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rrlab/field.hpp"

namespace rrlab {

struct Ring;
using RingPtr = std::shared_ptr<const Ring>;

// A polynomial ring k[x_1..x_n], known by its coefficient field and variable
// names.  Rings are immutable and shared; two rings are interchangeable when
// same_ring() holds (field and variables agree).
struct Ring {
    Field field;
    std::vector<std::string> vars;

    int nvars() const { return static_cast<int>(vars.size()); }
    int var_index(const std::string& name) const;  // -1 if absent

    static RingPtr make(const Field& k, std::vector<std::string> names);

    // New ring with extra variables appended.  Names that collide with
    // existing ones get underscores until fresh.
    static RingPtr extend(const RingPtr& r, const std::vector<std::string>& extra);

    // New ring keeping only the selected variables (in the given order).
    static RingPtr restrict_to(const RingPtr& r, const std::vector<int>& keep);
};

bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace rrlab
