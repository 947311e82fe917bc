// extor — exact intersection-homology toolbox over affine charts.
//
// Commands take a scenario file (text or JSON) declaring a ring, named ideals
// and instances, and report Groebner bases, dimensions, regularity, Koszul
// homology, multitors, Tor-independence and the intersection verdicts.
// Exit codes: 0 = pass, 1 = a verdict failed, 2 = input/certification error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "extor/corpus.hpp"
#include "extor/report.hpp"

using namespace extor;
using nlohmann::json;

namespace {

struct Options {
    std::string scenario_path;
    std::vector<std::string> targets;
    int degree_bound = 12;
    bool degree_bound_set = false;
    std::string order_override;
    bool as_json = false;
    bool quiet = false;
    bool timings = false;
    bool koszul_homology = false;
    std::optional<int> tor_q;
};

int resolve_degree_bound(const Options& opt) {
    if (opt.degree_bound_set) return opt.degree_bound;
    if (const char* env = std::getenv("EXTOR_DEGREE_BOUND")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw ArgumentError("EXTOR_DEGREE_BOUND is not an integer");
        }
    }
    return opt.degree_bound;
}

json tor_rows(const IntersectionInstance& inst, std::optional<int> only_q, int degree_bound) {
    json rows = json::array();
    int top = inst.total_codim();
    bool graded = inst.is_homogeneous();
    for (int q = 0; q <= top; ++q) {
        if (only_q && q != *only_q) continue;
        FPModule t = multitor(inst.varieties(), q);
        json row;
        row["q"] = q;
        row["zero"] = is_zero_module(t);
        if (graded) row["hf"] = hf_to_json(hilbert_function(t, degree_bound));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Executes one command against the workspace, appending to report["results"].
// Returns false when a verdict failed.
bool execute(const std::string& command, const Workspace& ws, const std::vector<std::string>& targets,
             int degree_bound, std::optional<int> tor_q, bool koszul_homology, json& report) {
    auto need = [&](std::size_t n) {
        if (targets.size() != n)
            throw ArgumentError("command '" + command + "' expects " + std::to_string(n) +
                                " target(s)");
    };
    bool ok = true;
    if (command == "gb") {
        need(1);
        const Ideal& ideal = ws.ideal(targets[0]);
        const GroebnerBasis& gb = ideal.groebner(ws.order());
        json basis = json::array();
        for (const auto& g : gb.generators()) basis.push_back(g.coord(0).str());
        report["results"].push_back(
            {{"kind", "gb"}, {"ideal", targets[0]}, {"order", ws.order().name()}, {"basis", basis}});
    } else if (command == "dim") {
        need(1);
        const Ideal& ideal = ws.ideal(targets[0]);
        int dim = ideal.krull_dimension();
        json h = dim < 0 ? json(nullptr) : json(static_cast<int>(ws.ring()->nvars()) - dim);
        report["results"].push_back(
            {{"kind", "dim"}, {"ideal", targets[0]}, {"dimension", dim}, {"height", h}});
    } else if (command == "regular") {
        need(1);
        const Ideal& ideal = ws.ideal(targets[0]);
        RegularityReport rep = is_regular_sequence(ideal.generators());
        report["results"].push_back(
            {{"kind", "regular"},
             {"ideal", targets[0]},
             {"regular", rep.regular()},
             {"koszul_vanishing", rep.koszul_vanishing},
             {"first_nonvanishing_q",
              rep.first_nonvanishing_q ? json(*rep.first_nonvanishing_q) : json(nullptr)},
             {"height", rep.height ? json(*rep.height) : json(nullptr)},
             {"height_criterion", rep.height_match ? json(*rep.height_match) : json(nullptr)}});
    } else if (command == "koszul") {
        need(1);
        const Ideal& ideal = ws.ideal(targets[0]);
        ChainComplex k = koszul_complex(ideal.generators());
        json ranks = json::array();
        for (int q = k.lo(); q <= k.hi(); ++q) ranks.push_back(k.rank(q));
        json entry{{"kind", "koszul"}, {"ideal", targets[0]}, {"ranks", ranks}};
        if (koszul_homology) {
            json hom = json::array();
            for (int q = k.lo(); q <= k.hi(); ++q) {
                FPModule h = homology(k, q);
                json row{{"q", q}, {"zero", is_zero_module(h)}};
                if (ideal.is_homogeneous()) row["hf"] = hf_to_json(hilbert_function(h, degree_bound));
                hom.push_back(std::move(row));
            }
            entry["homology"] = std::move(hom);
        }
        report["results"].push_back(std::move(entry));
    } else if (command == "tor") {
        need(1);
        IntersectionInstance inst = ws.instance(targets[0]);
        report["results"].push_back({{"kind", "tor"},
                                     {"instance", targets[0]},
                                     {"rows", tor_rows(inst, tor_q, degree_bound)}});
    } else if (command == "independent") {
        need(2);
        CIVariety a = ws.variety(targets[0]);
        CIVariety b = ws.variety(targets[1]);
        TorIndependenceReport rep = is_tor_independent(a, b);
        json rows = json::array();
        for (auto [q, zero] : rep.vanishing) rows.push_back({{"q", q}, {"zero", zero}});
        report["results"].push_back({{"kind", "independent"},
                                     {"a", targets[0]},
                                     {"b", targets[1]},
                                     {"independent", rep.independent},
                                     {"rows", rows}});
    } else if (command == "self-check") {
        need(1);
        CIVariety y = ws.variety(targets[0]);
        Verdict v = verify_self_intersection(y, degree_bound);
        ok = v.pass;
        report["results"].push_back(verdict_to_json(v, command, targets[0]));
    } else if (command == "excess-check") {
        need(1);
        IntersectionInstance inst = ws.instance(targets[0]);
        Verdict v = verify_excess_formula(inst, degree_bound);
        ok = v.pass;
        report["results"].push_back(verdict_to_json(v, command, targets[0]));
    } else if (command == "les-check") {
        need(1);
        IntersectionInstance inst = ws.instance(targets[0]);
        Verdict v = les_verify(inst, degree_bound);
        ok = v.pass;
        report["results"].push_back(verdict_to_json(v, command, targets[0]));
    } else {
        throw ArgumentError("unknown command '" + command + "'");
    }
    return ok;
}

int run_command(const std::string& command, const Options& opt) {
    const auto started = std::chrono::steady_clock::now();
    Scenario sc = load_scenario(opt.scenario_path);
    std::optional<MonomialOrder> order_override;
    if (!opt.order_override.empty()) order_override = order_from_name(opt.order_override);
    Workspace ws(sc, order_override);
    int degree_bound = resolve_degree_bound(opt);

    json report = report_skeleton(command, sc, ws.order().name(), degree_bound, opt.targets);
    if (!ws.ring()->field.is_rational())
        report["warnings"].push_back(
            "field " + ws.ring()->field.str() +
            " is outside the char-0 hypotheses of the verified theorems");

    bool ok = true;
    if (command == "run") {
        if (sc.checks.empty())
            report["warnings"].push_back("scenario requests no checks");
        for (const auto& cr : sc.checks) {
            int db = cr.degree_bound.value_or(degree_bound);
            ok = execute(cr.command, ws, cr.targets, db, cr.q, opt.koszul_homology, report) && ok;
        }
    } else {
        ok = execute(command, ws, opt.targets, degree_bound, opt.tor_q, opt.koszul_homology,
                     report);
    }
    report["ok"] = ok;
    if (opt.timings) {
        const auto elapsed = std::chrono::steady_clock::now() - started;
        report["timing_ms"] =
            std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(elapsed).count();
    }
    if (!opt.quiet) {
        if (opt.as_json)
            std::cout << report.dump(2) << "\n";
        else
            std::cout << render_report_text(report);
    }
    return ok ? 0 : 1;
}

int run_gen_corpus(std::uint64_t seed, int count, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    auto corpus = random_regular_sequences(seed, count, 3, 4);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& inst = corpus[i];
        std::ostringstream os;
        os << "# generated corpus instance " << i << " (seed " << seed << ")\n";
        os << "field Q\n";
        os << "vars";
        for (const auto& v : inst.ring->vars) os << " " << v;
        os << "\norder grevlex\n";
        os << "ideal Y = [";
        for (std::size_t k = 0; k < inst.polys.size(); ++k)
            os << (k ? ", " : "") << inst.polys[k].str();
        os << "]\n";
        os << "check self-check Y\n";
        std::string name = out_dir + "/corpus_" + std::to_string(seed) + "_" +
                           std::to_string(i) + ".scn";
        std::ofstream f(name);
        f << os.str();
    }
    std::cout << "wrote " << corpus.size() << " scenario files under " << out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multitor / excess-intersection toolbox"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);

    Options opt;
    std::uint64_t seed = 20240501;
    int corpus_count = 20;
    std::string corpus_out = "corpus";

    auto add_common = [&](CLI::App* cmd, int n_targets) {
        cmd->add_option("-s,--scenario", opt.scenario_path, "scenario file")->required();
        if (n_targets > 0)
            cmd->add_option("targets", opt.targets, "target name(s)")->expected(n_targets);
        cmd->add_option("--degree-bound", opt.degree_bound, "Hilbert comparison bound")
            ->check(CLI::NonNegativeNumber)
            ->each([&](const std::string&) { opt.degree_bound_set = true; });
        cmd->add_option("--order", opt.order_override, "monomial order (grevlex|lex)");
        cmd->add_flag("--json", opt.as_json, "machine-readable report");
        cmd->add_flag("--quiet", opt.quiet, "suppress output, use the exit code");
        cmd->add_flag("--timings", opt.timings, "include timing in the report");
    };

    std::vector<std::pair<std::string, int>> simple_cmds = {
        {"gb", 1},       {"dim", 1},          {"regular", 1},      {"tor", 1},
        {"independent", 2}, {"self-check", 1}, {"excess-check", 1}, {"les-check", 1},
        {"run", 0}};
    std::map<std::string, CLI::App*> subs;
    for (auto& [name, n] : simple_cmds) {
        CLI::App* c = app.add_subcommand(name);
        add_common(c, n);
        subs[name] = c;
    }
    subs["tor"]->add_option("--q", opt.tor_q, "single homological degree");
    CLI::App* koszul = app.add_subcommand("koszul");
    add_common(koszul, 1);
    koszul->add_flag("--homology", opt.koszul_homology, "report homology per degree");
    subs["koszul"] = koszul;

    CLI::App* gen = app.add_subcommand("gen-corpus", "write seeded random scenarios");
    gen->add_option("--seed", seed, "corpus seed");
    gen->add_option("--count", corpus_count, "number of instances");
    gen->add_option("--out", corpus_out, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return run_gen_corpus(seed, corpus_count, corpus_out);
        for (auto& [name, cmd] : subs)
            if (cmd->parsed()) return run_command(name, opt);
        std::cerr << "no command given\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
