#include "extor/ring.hpp"

#include <set>

namespace extor {

int PolyRing::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr make_ring(FieldDesc field, std::vector<std::string> vars, MonomialOrder order) {
    if (!field.is_rational()) field = field_Fp(field.p);  // validates primality
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw ArgumentError("empty variable name");
        if (!seen.insert(v).second) throw ArgumentError("duplicate variable name '" + v + "'");
    }
    auto r = std::make_shared<PolyRing>();
    r->field = field;
    r->vars = std::move(vars);
    r->order = order;
    return r;
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
    auto r = std::make_shared<PolyRing>(*ring);
    r->order = order;
    return r;
}

}  // namespace extor
