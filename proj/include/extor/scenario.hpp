#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "extor/intersect.hpp"

namespace extor {

struct CheckRequest {
    std::string command;
    std::vector<std::string> targets;
    std::optional<int> degree_bound;
    std::optional<int> q;
};

struct InstanceDecl {
    std::vector<std::string> ideal_names;
    std::optional<std::vector<std::string>> w_gens;  // polynomial strings
};

// One scenario file: a ring, named ideals, named instances, requested checks.
struct Scenario {
    FieldDesc field;
    std::vector<std::string> vars;
    std::string order_name = "grevlex";
    std::vector<std::pair<std::string, std::vector<std::string>>> ideals;
    std::vector<std::pair<std::string, InstanceDecl>> instances;
    std::vector<CheckRequest> checks;
    std::string raw;       // exact file bytes, hashed into reports
    std::string filename;  // basename
};

Scenario parse_scenario_text(const std::string& content);
Scenario parse_scenario_json(const std::string& content);
// Dispatches on extension: .json -> JSON form, anything else -> text form.
Scenario load_scenario(const std::string& path);

std::string fnv1a_hex(const std::string& data);

// Resolved scenario: ring built, polynomials parsed, names checked.
// Certification of varieties/instances happens on demand per target.
class Workspace {
public:
    Workspace(Scenario scenario, std::optional<MonomialOrder> order_override);

    const Scenario& scenario() const { return scenario_; }
    const RingPtr& ring() const { return ring_; }
    const MonomialOrder& order() const { return ring_->order; }

    bool has_ideal(const std::string& name) const { return ideals_.count(name) > 0; }
    bool has_instance(const std::string& name) const { return instances_.count(name) > 0; }
    const Ideal& ideal(const std::string& name) const;
    CIVariety variety(const std::string& ideal_name) const;
    IntersectionInstance instance(const std::string& name) const;

private:
    Scenario scenario_;
    RingPtr ring_;
    std::map<std::string, Ideal> ideals_;
    std::map<std::string, InstanceDecl> instances_;
};

}  // namespace extor
