#include "zetamap/cli.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetamap/dyck_maps.hpp"
#include "zetamap/enumerate.hpp"
#include "zetamap/render.hpp"
#include "zetamap/tree_maps.hpp"
#include "zetamap/verify.hpp"

namespace zetamap::cli {

namespace {

/// Parsed command line; flags are validated by CLI11 before any
/// computation starts.
struct CliRequest {
    std::string subcommand;
    std::string kind;              // enumerate
    int n = 0;                     // enumerate
    std::string from, to, via;     // convert
    std::string input;             // convert / zeta / render
    std::string format = "text";   // enumerate
    int n_max = 0;                 // verify
    std::string law;               // verify
    int jobs = 0;                  // verify
    std::string mutant;            // verify (testing aid)
};

int default_jobs() {
    if (const char* env = std::getenv("ZETAMAP_JOBS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 0) return static_cast<int>(v);
    }
    return 0;
}

int run_enumerate(const CliRequest& req, std::ostream& out) {
    bool json = req.format == "json";
    nlohmann::json arr = nlohmann::json::array();
    auto emit = [&](auto&& encoded) {
        if (json)
            arr.push_back(encoded);
        else
            out << encoded << '\n';
    };
    if (req.kind == "dyck") {
        DyckEnumerator en(req.n);
        while (auto d = en.next()) emit(d->str());
    } else if (req.kind == "tree") {
        TreeEnumerator en(req.n);
        while (auto t = en.next()) emit(t->str());
    } else {
        PosetEnumerator en(req.n);
        while (auto p = en.next()) {
            if (json)
                arr.push_back(p->to_json());
            else
                out << p->encode() << '\n';
        }
    }
    if (json) out << arr.dump() << '\n';
    return 0;
}

int run_convert(const CliRequest& req, std::ostream& out, std::ostream& err) {
    using Convert = std::function<std::string(const std::string&)>;
    auto dyck_in = [](const std::string& s) { return DyckPath::parse(s); };
    auto tree_in = [](const std::string& s) { return PlaneTree::parse(s); };
    auto poset_in = [](const std::string& s) { return UnitIntervalPoset::parse(s); };

    const std::map<std::tuple<std::string, std::string, std::string>, Convert> table{
        {{"poset", "dyck", "phi"}, [&](const std::string& s) { return phi(poset_in(s)).str(); }},
        {{"dyck", "poset", "phi"},
         [&](const std::string& s) { return tree_to_poset(dyck_to_tree_bounce(dyck_in(s))).encode(); }},
        {{"dyck", "poset", "psi"}, [&](const std::string& s) { return psi(dyck_in(s)).encode(); }},
        {{"poset", "dyck", "psi"},
         [&](const std::string& s) { return psi_inverse(poset_in(s)).str(); }},
        {{"tree", "dyck", "steep"},
         [&](const std::string& s) { return tree_to_dyck_steep(tree_in(s)).str(); }},
        {{"dyck", "tree", "steep"},
         [&](const std::string& s) { return dyck_to_tree_steep(dyck_in(s)).str(); }},
        {{"tree", "dyck", "bounce"},
         [&](const std::string& s) { return tree_to_dyck_bounce(tree_in(s)).str(); }},
        {{"dyck", "tree", "bounce"},
         [&](const std::string& s) { return dyck_to_tree_bounce(dyck_in(s)).str(); }},
        {{"poset", "tree", "poset"},
         [&](const std::string& s) { return poset_to_tree(poset_in(s)).str(); }},
        {{"tree", "poset", "poset"},
         [&](const std::string& s) { return tree_to_poset(tree_in(s)).encode(); }},
    };
    auto it = table.find({req.from, req.to, req.via});
    if (it == table.end()) {
        err << "error: no map named '" << req.via << "' from " << req.from << " to " << req.to
            << '\n';
        return 2;
    }
    out << it->second(req.input) << '\n';
    return 0;
}

int run_verify(const CliRequest& req, std::ostream& out, std::ostream& err) {
    SweepOptions opts;
    opts.jobs = req.jobs;
    if (!req.mutant.empty()) {
        const std::map<std::string, Mutant> mutants{
            {"contour-left-to-right", Mutant::contour_left_to_right},
            {"breadth-left-to-right", Mutant::breadth_left_to_right},
            {"sibling-order-increasing", Mutant::sibling_order_increasing},
            {"psi-chain-rule-only", Mutant::psi_chain_rule_only},
            {"oracle-scan-mirror", Mutant::oracle_scan_mirror},
            {"enumerate-duplicate-first", Mutant::enumerate_duplicate_first},
        };
        auto it = mutants.find(req.mutant);
        if (it == mutants.end()) {
            err << "error: unknown mutant '" << req.mutant << "'\n";
            return 2;
        }
        opts.mutant = it->second;
    }

    std::vector<std::string> laws;
    if (req.law.empty())
        laws = law_ids();
    else
        laws.push_back(req.law);

    bool failed = false;
    nlohmann::json out_reports = nlohmann::json::array();
    for (const auto& law : laws) {
        // one aggregated report per law over sizes 1..n_max
        LawReport agg;
        agg.law = law;
        agg.n = req.n_max;
        for (int n = 1; n <= req.n_max; ++n) {
            LawReport r = verify_law(law, n, opts);
            agg.checked += r.checked;
            agg.millis += r.millis;
            for (auto& cx : r.counterexamples) agg.counterexamples.push_back(std::move(cx));
        }
        failed = failed || !agg.ok();
        out_reports.push_back(agg.to_json());
    }
    if (laws.size() == 1)
        out << out_reports[0].dump() << '\n';
    else
        out << out_reports.dump() << '\n';
    return failed ? 1 : 0;
}

int run_render(const CliRequest& req, std::ostream& out, std::ostream& err) {
    const std::string& s = req.input;
    if (!s.empty() && s[0] == '(') {
        out << render_tree(PlaneTree::parse(s));
        return 0;
    }
    if (s.empty() || s[0] == 'N' || s[0] == 'E') {
        out << render_dyck(DyckPath::parse(s));
        return 0;
    }
    err << "error: render accepts a Dyck path (N/E) or a plane tree (parentheses)\n";
    return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Catalan bijections and the zeta map: unit interval posets, "
                 "plane trees, Dyck paths"};
    app.require_subcommand(1);
    CliRequest req;
    req.jobs = default_jobs();

    auto* enumerate = app.add_subcommand("enumerate", "Stream all objects of one size");
    enumerate->add_option("--kind", req.kind, "Object family")
        ->required()
        ->check(CLI::IsMember({"dyck", "tree", "poset"}));
    enumerate->add_option("--n", req.n, "Object size")->required()->check(CLI::NonNegativeNumber);
    enumerate->add_option("--format", req.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* convert = app.add_subcommand("convert", "Apply one of the bijections");
    convert->add_option("--from", req.from, "Input kind")
        ->required()
        ->check(CLI::IsMember({"dyck", "tree", "poset"}));
    convert->add_option("--to", req.to, "Output kind")
        ->required()
        ->check(CLI::IsMember({"dyck", "tree", "poset"}));
    convert->add_option("--via", req.via, "Map family: phi, psi, steep, bounce, poset")
        ->required()
        ->check(CLI::IsMember({"phi", "psi", "steep", "bounce", "poset"}));
    convert->add_option("input", req.input, "Input encoding")->required();

    auto* zeta_cmd = app.add_subcommand("zeta", "Apply the zeta map to a Dyck path");
    zeta_cmd->add_option("input", req.input, "Dyck path")
        ->required()
        ->expected(1);

    auto* verify = app.add_subcommand("verify", "Exhaustively check the laws");
    verify->add_option("--n-max", req.n_max, "Largest size to sweep")
        ->required()
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--law", req.law, "Single law to check")
        ->check(CLI::IsMember(law_ids()));
    verify->add_option("--jobs", req.jobs, "Worker threads (0 = all, 1 = serial)")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--mutant", req.mutant, "Seeded wrong-convention variant (testing aid)")
        ->group("");

    auto* render = app.add_subcommand("render", "ASCII-draw a Dyck path or plane tree");
    render->add_option("input", req.input, "Dyck path or plane tree")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (enumerate->parsed()) return run_enumerate(req, out);
        if (convert->parsed()) return run_convert(req, out, err);
        if (zeta_cmd->parsed()) {
            out << zeta(DyckPath::parse(req.input)).str() << '\n';
            return 0;
        }
        if (verify->parsed()) return run_verify(req, out, err);
        if (render->parsed()) return run_render(req, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::parse_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no subcommand given\n";
    return 2;
}

}  // namespace zetamap::cli
