#pragma once

#include <memory>
#include <string>
#include <vector>

#include "extor/monomial.hpp"
#include "extor/scalar.hpp"

namespace extor {

// Polynomial ring k[x_1..x_n] with a default monomial order.  Shared immutably
// by every value built over it.
struct PolyRing {
    FieldDesc field;
    std::vector<std::string> vars;
    MonomialOrder order;

    std::size_t nvars() const { return vars.size(); }
    int var_index(const std::string& name) const;
    bool operator==(const PolyRing& o) const {
        return field == o.field && vars == o.vars && order == o.order;
    }
};

using RingPtr = std::shared_ptr<const PolyRing>;

// Validates: unique nonempty variable names, prime modulus.
RingPtr make_ring(FieldDesc field, std::vector<std::string> vars,
                  MonomialOrder order = MonomialOrder::grevlex());

// Same field and variables, different default order.
RingPtr with_order(const RingPtr& ring, MonomialOrder order);

inline void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return;
    if (!a || !b || !(*a == *b)) throw ArgumentError("ring mismatch");
}

}  // namespace extor
