#include "extor/scenario.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace extor {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> split_list(const std::string& inner) {
    // comma-separated entries; commas never occur inside the polynomial grammar
    std::vector<std::string> out;
    std::string cur;
    for (char c : inner) {
        if (c == ',') {
            std::string t = trim(cur);
            if (!t.empty()) out.push_back(t);
            cur.clear();
        } else {
            cur += c;
        }
    }
    std::string t = trim(cur);
    if (!t.empty()) out.push_back(t);
    return out;
}

// the bracketed [ ... ] payload after `name = `
std::string bracket_payload(const std::string& line, char open, char close, std::size_t lineno) {
    std::size_t a = line.find(open);
    std::size_t b = line.rfind(close);
    if (a == std::string::npos || b == std::string::npos || b < a)
        throw ParseError("scenario line " + std::to_string(lineno) + ": expected " + open +
                             "..." + close,
                         lineno);
    return line.substr(a + 1, b - a - 1);
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

FieldDesc parse_field(const std::string& tok) {
    if (tok == "Q") return field_Q();
    try {
        unsigned long p = std::stoul(tok);
        return field_Fp(p);
    } catch (const std::invalid_argument&) {
        throw ArgumentError("field must be Q or a prime, got '" + tok + "'");
    }
}

CheckRequest parse_check_tokens(const std::vector<std::string>& toks, std::size_t lineno) {
    if (toks.empty()) throw ParseError("empty check", lineno);
    CheckRequest cr;
    cr.command = toks[0];
    for (std::size_t i = 1; i < toks.size(); ++i) {
        const std::string& t = toks[i];
        auto eq = t.find('=');
        if (eq != std::string::npos) {
            std::string key = t.substr(0, eq), val = t.substr(eq + 1);
            if (key == "degree-bound")
                cr.degree_bound = std::stoi(val);
            else if (key == "q")
                cr.q = std::stoi(val);
            else
                throw ParseError("unknown check parameter '" + key + "'", lineno);
        } else {
            cr.targets.push_back(t);
        }
    }
    return cr;
}

}  // namespace

Scenario parse_scenario_text(const std::string& content) {
    Scenario sc;
    sc.raw = content;
    std::istringstream is(content);
    std::string line;
    std::size_t lineno = 0;
    bool field_seen = false, vars_seen = false;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        std::istringstream ls(line);
        std::string key;
        ls >> key;
        std::string rest = trim(line.substr(key.size()));

        if (key == "field") {
            sc.field = parse_field(rest);
            field_seen = true;
        } else if (key == "vars") {
            sc.vars = split_ws(rest);
            vars_seen = true;
        } else if (key == "order") {
            sc.order_name = rest;
        } else if (key == "ideal") {
            auto eq = rest.find('=');
            if (eq == std::string::npos) throw ParseError("ideal needs '= [...]'", lineno);
            std::string name = trim(rest.substr(0, eq));
            if (!valid_name(name)) throw ParseError("bad ideal name '" + name + "'", lineno);
            sc.ideals.push_back({name, split_list(bracket_payload(rest, '[', ']', lineno))});
        } else if (key == "instance") {
            auto eq = rest.find('=');
            if (eq == std::string::npos) throw ParseError("instance needs '= {...}'", lineno);
            std::string name = trim(rest.substr(0, eq));
            if (!valid_name(name)) throw ParseError("bad instance name '" + name + "'", lineno);
            std::string body = bracket_payload(rest, '{', '}', lineno);
            InstanceDecl decl;
            for (const std::string& part : [&] {
                     std::vector<std::string> ps;
                     std::string cur;
                     for (char c : body) {
                         if (c == ';') {
                             ps.push_back(cur);
                             cur.clear();
                         } else
                             cur += c;
                     }
                     ps.push_back(cur);
                     return ps;
                 }()) {
                std::string p = trim(part);
                if (p.empty()) continue;
                auto colon = p.find(':');
                if (colon == std::string::npos)
                    throw ParseError("instance clause needs 'ideals:' or 'w:'", lineno);
                std::string ckey = trim(p.substr(0, colon));
                std::string cval = trim(p.substr(colon + 1));
                if (ckey == "ideals")
                    decl.ideal_names = split_ws(cval);
                else if (ckey == "w")
                    decl.w_gens = split_list(bracket_payload(cval, '[', ']', lineno));
                else
                    throw ParseError("unknown instance clause '" + ckey + "'", lineno);
            }
            if (decl.ideal_names.empty())
                throw ParseError("instance '" + name + "' lists no ideals", lineno);
            sc.instances.push_back({name, std::move(decl)});
        } else if (key == "check") {
            sc.checks.push_back(parse_check_tokens(split_ws(rest), lineno));
        } else {
            throw ParseError("unknown scenario key '" + key + "'", lineno);
        }
    }
    if (!field_seen) throw ParseError("scenario missing 'field'", 0);
    if (!vars_seen) throw ParseError("scenario missing 'vars'", 0);
    return sc;
}

Scenario parse_scenario_json(const std::string& content) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("scenario JSON: ") + e.what(), 0);
    }
    Scenario sc;
    sc.raw = content;
    if (!j.contains("field") || !j.contains("vars"))
        throw ParseError("scenario JSON missing 'field' or 'vars'", 0);
    if (j["field"].is_string())
        sc.field = parse_field(j["field"].get<std::string>());
    else
        sc.field = field_Fp(j["field"].get<unsigned long>());
    sc.vars = j["vars"].get<std::vector<std::string>>();
    if (j.contains("order")) sc.order_name = j["order"].get<std::string>();
    if (j.contains("ideals"))
        for (auto& [name, gens] : j["ideals"].items())
            sc.ideals.push_back({name, gens.get<std::vector<std::string>>()});
    if (j.contains("instances"))
        for (auto& [name, decl] : j["instances"].items()) {
            InstanceDecl d;
            d.ideal_names = decl.at("ideals").get<std::vector<std::string>>();
            if (decl.contains("w")) d.w_gens = decl["w"].get<std::vector<std::string>>();
            sc.instances.push_back({name, std::move(d)});
        }
    if (j.contains("checks"))
        for (auto& c : j["checks"]) {
            CheckRequest cr;
            cr.command = c.at("command").get<std::string>();
            if (c.contains("targets")) cr.targets = c["targets"].get<std::vector<std::string>>();
            if (c.contains("degree_bound")) cr.degree_bound = c["degree_bound"].get<int>();
            if (c.contains("q")) cr.q = c["q"].get<int>();
            sc.checks.push_back(std::move(cr));
        }
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ArgumentError("cannot open scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string content = buf.str();
    auto slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    Scenario sc;
    if (base.size() > 5 && base.substr(base.size() - 5) == ".json")
        sc = parse_scenario_json(content);
    else
        sc = parse_scenario_text(content);
    sc.filename = base;
    return sc;
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// ---------------------------------------------------------------------------

Workspace::Workspace(Scenario scenario, std::optional<MonomialOrder> order_override)
    : scenario_(std::move(scenario)) {
    MonomialOrder ord =
        order_override ? *order_override : order_from_name(scenario_.order_name);
    ring_ = make_ring(scenario_.field, scenario_.vars, ord);
    for (const auto& [name, gens] : scenario_.ideals) {
        if (ideals_.count(name)) throw ArgumentError("duplicate ideal name '" + name + "'");
        std::vector<Polynomial> polys;
        for (const auto& g : gens) {
            try {
                polys.push_back(parse_polynomial(g, ring_));
            } catch (const ParseError& e) {
                throw ParseError("ideal '" + name + "', polynomial '" + g + "': " + e.what(),
                                 e.position);
            }
        }
        ideals_.emplace(name, Ideal(ring_, std::move(polys)));
    }
    for (const auto& [name, decl] : scenario_.instances) {
        if (instances_.count(name) || ideals_.count(name))
            throw ArgumentError("duplicate name '" + name + "'");
        for (const auto& in : decl.ideal_names)
            if (!ideals_.count(in))
                throw ArgumentError("instance '" + name + "' references unknown ideal '" + in +
                                    "'");
        instances_.emplace(name, decl);
    }
}

const Ideal& Workspace::ideal(const std::string& name) const {
    auto it = ideals_.find(name);
    if (it == ideals_.end()) throw ArgumentError("unknown ideal '" + name + "'");
    return it->second;
}

CIVariety Workspace::variety(const std::string& ideal_name) const {
    const Ideal& i = ideal(ideal_name);
    return CIVariety::certify(ideal_name, ring_, i.generators());
}

IntersectionInstance Workspace::instance(const std::string& name) const {
    auto it = instances_.find(name);
    if (it == instances_.end()) throw ArgumentError("unknown instance '" + name + "'");
    const InstanceDecl& decl = it->second;
    std::vector<CIVariety> ys;
    for (const auto& in : decl.ideal_names) ys.push_back(variety(in));
    std::optional<std::vector<Polynomial>> w;
    if (decl.w_gens) {
        std::vector<Polynomial> polys;
        for (const auto& g : *decl.w_gens) polys.push_back(parse_polynomial(g, ring_));
        w = std::move(polys);
    }
    return IntersectionInstance::certify(name, std::move(ys), std::move(w));
}

}  // namespace extor
