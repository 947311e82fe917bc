#include "extor/report.hpp"

#include <sstream>

namespace extor {

nlohmann::json hf_to_json(const HilbertFunction& hf) {
    nlohmann::json a = nlohmann::json::array();
    for (long d : hf.dims) a.push_back(d);
    return a;
}

nlohmann::json verdict_to_json(const Verdict& v, const std::string& check,
                               const std::string& target) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : v.rows) {
        nlohmann::json r;
        r["q"] = row.q;
        r["lhs"] = hf_to_json(row.lhs);
        r["rhs"] = hf_to_json(row.rhs);
        r["equal"] = row.equal;
        r["shift"] = row.shift ? nlohmann::json(*row.shift) : nlohmann::json(nullptr);
        if (!row.note.empty()) r["note"] = row.note;
        rows.push_back(std::move(r));
    }
    nlohmann::json j;
    j["kind"] = "verdict";
    j["check"] = check;
    j["target"] = target;
    j["claim"] = v.claim;
    j["degree_bound"] = v.degree_bound;
    j["pass"] = v.pass;
    j["vacuous"] = v.vacuous;
    j["shift_flagged"] = v.shift_flagged;
    j["rows"] = std::move(rows);
    j["diagnostics"] = v.diagnostics;
    return j;
}

nlohmann::json report_skeleton(const std::string& command, const Scenario& sc,
                               const std::string& order_name, int degree_bound,
                               const std::vector<std::string>& targets) {
    nlohmann::json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["report_schema"] = kReportSchemaVersion;
    j["command"] = command;
    j["scenario_file"] = sc.filename;
    j["scenario_hash"] = fnv1a_hex(sc.raw);
    j["field"] = sc.field.str();
    j["order"] = order_name;
    j["degree_bound"] = degree_bound;
    j["targets"] = targets;
    j["warnings"] = nlohmann::json::array();
    j["results"] = nlohmann::json::array();
    j["ok"] = true;
    return j;
}

namespace {

std::string hf_str(const nlohmann::json& a) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ",";
        os << a[i].get<long>();
    }
    os << "]";
    return os.str();
}

void render_result(std::ostringstream& os, const nlohmann::json& r) {
    const std::string kind = r.value("kind", "?");
    if (kind == "gb") {
        os << "gb(" << r["ideal"].get<std::string>() << "), order " +
                  r["order"].get<std::string>()
           << ":\n";
        for (const auto& g : r["basis"]) os << "  " << g.get<std::string>() << "\n";
    } else if (kind == "dim") {
        os << "dim(" << r["ideal"].get<std::string>()
           << "): dimension = " << r["dimension"].get<int>() << ", height = "
           << (r["height"].is_null() ? std::string("undefined (unit ideal)")
                                     : std::to_string(r["height"].get<int>()))
           << "\n";
    } else if (kind == "regular") {
        os << "regular(" << r["ideal"].get<std::string>() << "): "
           << (r["regular"].get<bool>() ? "true" : "false")
           << "  [koszul-vanishing: " << (r["koszul_vanishing"].get<bool>() ? "yes" : "no");
        if (!r["height_criterion"].is_null())
            os << "; height criterion: " << (r["height_criterion"].get<bool>() ? "yes" : "no");
        os << "]\n";
    } else if (kind == "koszul") {
        os << "koszul(" << r["ideal"].get<std::string>() << "): ranks ";
        for (std::size_t i = 0; i < r["ranks"].size(); ++i)
            os << (i ? "," : "") << r["ranks"][i].get<long>();
        os << "\n";
        if (r.contains("homology"))
            for (const auto& h : r["homology"]) {
                os << "  H_" << h["q"].get<int>() << ": ";
                if (h.contains("hf"))
                    os << "HF " << hf_str(h["hf"]);
                else
                    os << (h["zero"].get<bool>() ? "0" : "nonzero");
                os << "\n";
            }
    } else if (kind == "tor") {
        os << "tor(" << r["instance"].get<std::string>() << "):\n";
        for (const auto& h : r["rows"]) {
            os << "  Tor_" << h["q"].get<int>() << ": ";
            if (h.contains("hf")) os << "HF " << hf_str(h["hf"]) << "  ";
            os << (h["zero"].get<bool>() ? "(zero)" : "(nonzero)") << "\n";
        }
    } else if (kind == "independent") {
        os << "independent(" << r["a"].get<std::string>() << ", " << r["b"].get<std::string>()
           << "): " << (r["independent"].get<bool>() ? "true" : "false") << "\n";
        for (const auto& h : r["rows"])
            os << "  Tor_" << h["q"].get<int>() << " = "
               << (h["zero"].get<bool>() ? "0" : "nonzero") << "\n";
    } else if (kind == "verdict") {
        os << r["check"].get<std::string>() << "(" << r["target"].get<std::string>()
           << "): " << (r["pass"].get<bool>() ? "PASS" : "FAIL")
           << (r["vacuous"].get<bool>() ? " (vacuous)" : "") << "\n";
        os << "  claim: " << r["claim"].get<std::string>() << "\n";
        for (const auto& row : r["rows"]) {
            os << "  q=" << row["q"].get<int>() << ": lhs " << hf_str(row["lhs"]) << " rhs "
               << hf_str(row["rhs"]) << " -> "
               << (row["equal"].get<bool>() ? "equal" : "UNEQUAL");
            if (!row["shift"].is_null()) os << " (uniform shift " << row["shift"].get<int>() << ")";
            if (row.contains("note")) os << "  [" << row["note"].get<std::string>() << "]";
            os << "\n";
        }
        for (const auto& d : r["diagnostics"]) os << "  note: " << d.get<std::string>() << "\n";
    } else {
        os << r.dump() << "\n";
    }
}

}  // namespace

std::string render_report_text(const nlohmann::json& report) {
    std::ostringstream os;
    os << report["tool"].get<std::string>() << " " << report["version"].get<std::string>() << " — "
       << report["command"].get<std::string>() << " on " << report["scenario_file"].get<std::string>()
       << " (hash " << report["scenario_hash"].get<std::string>() << ")\n";
    os << "field " << report["field"].get<std::string>() << ", order "
       << report["order"].get<std::string>() << ", degree bound "
       << report["degree_bound"].get<int>() << "\n";
    for (const auto& w : report["warnings"]) os << "warning: " << w.get<std::string>() << "\n";
    for (const auto& r : report["results"]) render_result(os, r);
    if (report.contains("timing_ms"))
        os << "timing: " << report["timing_ms"].get<double>() << " ms\n";
    os << (report["ok"].get<bool>() ? "OK" : "NOT OK") << "\n";
    return os.str();
}

}  // namespace extor
