// Command-line interface: seeds, bases, skeleta, local systems, verification.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clustermirror/clustermirror.hpp"

namespace cm = clustermirror;
using cm::io::json;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<std::size_t> parse_sequence(const std::string& s) {
    std::vector<std::size_t> out;
    for (const auto& tok : split(s, ',')) out.push_back(cm::io::parse_index(json(tok), "--sequence"));
    return out;
}

cm::IntVec parse_class(const std::string& s) {
    cm::IntVec out;
    for (const auto& tok : split(s, ',')) out.push_back(cm::io::parse_int(json(tok), "--class"));
    return out;
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty())
        std::cout << text;
    else
        cm::io::write_file(out, text);
}

std::size_t default_cases(const std::string& suite) {
    if (suite == "oracle" || suite == "double") return 1000;
    if (suite == "dictionary") return 500;
    return 100;
}

struct Options {
    std::string seed, out, sequence, radii, convention = "character", json_out, polytope, trades, skeleton_file,
        local_system, cls, suite = "all", base, counterexample_dir = ".";
    std::size_t depth = 0, handle = 1, cases = 0;
    std::optional<std::size_t> model_k;
    std::uint64_t prng = 0;
    bool with_skeleton = false, strata = false;
};

int cmd_seed_mutate(const Options& o) {
    cm::Seed s = cm::io::seed_from_json(cm::io::read_json(o.seed));
    s = cm::mutate_sequence(s, parse_sequence(o.sequence));
    emit(cm::io::dump(cm::io::to_json(s)), o.out);
    return 0;
}

int cmd_seed_graph(const Options& o) {
    cm::Seed s = cm::io::seed_from_json(cm::io::read_json(o.seed));
    emit(cm::io::dump(cm::io::to_json(cm::exchange_graph(s, o.depth))), o.out);
    return 0;
}

int cmd_seed_model(const Options& o) {
    cm::Seed s = cm::io::seed_from_json(cm::io::read_json(o.seed));
    json j = o.model_k ? cm::io::to_json(cm::mutate_model(s, *o.model_k - 1)) : cm::io::to_json(cm::toric_model(s));
    emit(cm::io::dump(j), o.out);
    return 0;
}

int cmd_base_syz(const Options& o) {
    cm::Seed s = cm::io::seed_from_json(cm::io::read_json(o.seed));
    std::vector<cm::Rat> radii;
    for (const auto& tok : split(o.radii, ',')) radii.push_back(cm::io::parse_rat(json(tok), "--radii"));
    cm::IntegralAffineBase2D base = cm::base_from_fan(cm::fan_from_seed(s), radii);
    if (cm::parse_convention(o.convention) == cm::Convention::Cocharacter) base = cm::toggle_convention(base);
    if (!o.json_out.empty()) cm::io::write_file(o.json_out, cm::io::dump(cm::io::to_json(base)));
    emit(cm::render_svg(base), o.out);
    return 0;
}

int cmd_base_trade(const Options& o) {
    cm::MomentPolytope poly = cm::io::polytope_from_json(cm::io::read_json(o.polytope));
    auto trades = cm::io::trades_from_json(cm::io::read_json(o.trades), poly.dimension);
    cm::AlmostToricBase base = cm::apply_trades(poly, trades);
    json j = cm::io::to_json(base);
    json smooth = json::array();
    for (bool b : cm::smoothness_check(base)) smooth.push_back(b);
    j["smooth"] = smooth;
    json inter = json::array();
    for (auto [a, b] : cm::detect_interactions(base).pairs) inter.push_back(json::array({a + 1, b + 1}));
    j["interactions"] = inter;

    std::optional<cm::RatVec> q;
    if (o.with_skeleton) {
        auto bp = cm::common_basepoint(base);
        q = bp.q;
        j["basepoint"] = cm::io::to_json(bp.q);
        json basis = json::array();
        for (const auto& v : bp.solutions.basis) basis.push_back(cm::io::to_json(v));
        j["basepoint_subspace"] = basis;
        j["skeleton"] = cm::io::to_json(cm::skeleton_from_base(base, bp.q));
    }
    if (!o.json_out.empty()) cm::io::write_file(o.json_out, cm::io::dump(j));
    if (poly.dimension == 2)
        emit(cm::render_svg(base, q), o.out);
    else if (!o.out.empty())
        throw cm::ValidationError("rendering is supported for 2-dimensional bases only");
    else
        std::cout << cm::io::dump(j);
    return 0;
}

int cmd_skeleton_build(const Options& o) {
    cm::Seed s = cm::io::seed_from_json(cm::io::read_json(o.seed));
    json j = cm::io::to_json(cm::skeleton_from_seed(s));
    if (o.strata) j["strata"] = cm::io::to_json(cm::bondal_strata(cm::fan_from_seed(s)));
    emit(cm::io::dump(j), o.out);
    return 0;
}

int cmd_skeleton_surgery(const Options& o) {
    cm::Skeleton sk = cm::io::skeleton_from_json(cm::io::read_json(o.skeleton_file));
    if (o.handle < 1) throw cm::ValidationError("--handle is 1-based");
    emit(cm::io::dump(cm::io::to_json(cm::disk_surgery(sk, o.handle - 1))), o.out);
    return 0;
}

int cmd_locsys_mutate(const Options& o) {
    cm::LocalSystem ls = cm::io::local_system_from_json(cm::io::read_json(o.local_system));
    auto m = cm::mutate_local_system(ls, parse_class(o.cls));
    json j;
    j["class"] = cm::io::to_json(m.s);
    j["adapted"] = {{"gamma1", cm::io::to_json(m.gamma1)},
                    {"gamma2", cm::io::to_json(m.gamma2)},
                    {"holonomy1", cm::io::to_json(m.adapted1)},
                    {"holonomy2", cm::io::to_json(m.adapted2)}};
    j["result"] = cm::io::to_json(m.result);
    emit(cm::io::dump(j), o.out);
    return 0;
}

int cmd_locsys_transition(const Options& o) {
    cm::Seed s = cm::io::seed_from_json(cm::io::read_json(o.seed));
    if (o.handle < 1) throw cm::ValidationError("--handle is 1-based");
    auto t = cm::chart_transition(s, o.handle - 1);
    std::string text = "x1' = " + t.first.to_string() + "\nx2' = " + t.second.to_string() + "\n";
    emit(text, o.out);
    return 0;
}

int cmd_verify(const Options& o) {
    std::vector<cm::SuiteResult> results;
    if (!o.base.empty()) {
        results.push_back(cm::verify_affine_base(cm::io::affine_base_from_json(cm::io::read_json(o.base))));
    } else {
        std::vector<std::string> suites = o.suite == "all" ? cm::suite_names() : std::vector<std::string>{o.suite};
        for (const auto& name : suites) results.push_back(cm::run_suite(name, o.prng, o.cases ? o.cases : default_cases(name)));
    }
    json report;
    report["prng"] = o.prng;
    json arr = json::array();
    bool all = true;
    for (const auto& r : results) {
        json rj = {{"suite", r.name}, {"passed", r.passed}, {"cases", r.cases}};
        if (!r.passed) {
            all = false;
            rj["message"] = r.message;
            if (r.counterexample) {
                std::filesystem::path path =
                    std::filesystem::path(o.counterexample_dir) / ("counterexample-" + r.name + ".json");
                cm::io::write_file(path.string(), cm::io::dump(*r.counterexample));
                rj["counterexample"] = path.string();
                rj["witness"] = *r.counterexample;
            }
        }
        arr.push_back(rj);
    }
    report["suites"] = arr;
    report["passed"] = all;
    emit(cm::io::dump(report), o.out);
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact seeds, skeleta, almost toric bases and their mirror checks"};
    app.require_subcommand(1);
    Options o;

    auto* seed = app.add_subcommand("seed", "Seed mutation, exchange graphs and toric models");
    seed->require_subcommand(1);
    auto* s_mut = seed->add_subcommand("mutate", "Apply a sequence of mutations");
    s_mut->add_option("--seed", o.seed, "Seed JSON")->required();
    s_mut->add_option("--sequence", o.sequence, "Comma-separated 1-based indices")->required();
    s_mut->add_option("--out", o.out, "Output file (default stdout)");
    auto* s_graph = seed->add_subcommand("graph", "Breadth-first exchange graph");
    s_graph->add_option("--seed", o.seed, "Seed JSON")->required();
    s_graph->add_option("--depth", o.depth, "Maximum number of mutations")->required();
    s_graph->add_option("--out", o.out, "Output file (default stdout)");
    auto* s_model = seed->add_subcommand("model", "Toric model, or before/after models with --k");
    s_model->add_option("--seed", o.seed, "Seed JSON")->required();
    s_model->add_option("--k", o.model_k, "Mutation index (1-based)");
    s_model->add_option("--out", o.out, "Output file (default stdout)");

    auto* base = app.add_subcommand("base", "SYZ and almost toric bases");
    base->require_subcommand(1);
    auto* b_syz = base->add_subcommand("syz", "SYZ base of a rank-2 seed");
    b_syz->add_option("--seed", o.seed, "Seed JSON")->required();
    b_syz->add_option("--radii", o.radii, "Comma-separated positive rationals, one per ray");
    b_syz->add_option("--convention", o.convention, "character or cocharacter")
        ->check(CLI::IsMember({"character", "cocharacter"}));
    b_syz->add_option("--out", o.out, "SVG output (default stdout)");
    b_syz->add_option("--json", o.json_out, "Base JSON output");
    auto* b_trade = base->add_subcommand("trade", "Nodal trades on a moment polytope");
    b_trade->add_option("--polytope", o.polytope, "Polytope JSON")->required();
    b_trade->add_option("--trades", o.trades, "Trades JSON")->required();
    b_trade->add_option("--out", o.out, "SVG output (default stdout; JSON for higher dimensions)");
    b_trade->add_option("--json", o.json_out, "Base JSON output");
    b_trade->add_flag("--skeleton", o.with_skeleton, "Compute the basepoint and skeleton");

    auto* skel = app.add_subcommand("skeleton", "Lagrangian skeleta");
    skel->require_subcommand(1);
    auto* k_build = skel->add_subcommand("build", "Skeleton of a seed");
    k_build->add_option("--seed", o.seed, "Seed JSON")->required();
    k_build->add_flag("--strata", o.strata, "Include Bondal strata");
    k_build->add_option("--out", o.out, "Output file (default stdout)");
    auto* k_surg = skel->add_subcommand("surgery", "Disk surgery at one handle");
    k_surg->add_option("--skeleton", o.skeleton_file, "Skeleton JSON")->required();
    k_surg->add_option("--handle", o.handle, "Handle index (1-based)")->required();
    k_surg->add_option("--out", o.out, "Output file (default stdout)");

    auto* loc = app.add_subcommand("locsys", "Local systems on the 2-torus");
    loc->require_subcommand(1);
    auto* l_mut = loc->add_subcommand("mutate", "Mutate across a circle class");
    l_mut->add_option("--local-system", o.local_system, "Local system JSON")->required();
    l_mut->add_option("--class", o.cls, "Circle class, e.g. 1,0")->required();
    l_mut->add_option("--out", o.out, "Output file (default stdout)");
    auto* l_tr = loc->add_subcommand("transition", "Chart transition of a rank-2 seed");
    l_tr->add_option("--seed", o.seed, "Seed JSON")->required();
    l_tr->add_option("--handle", o.handle, "Handle index (1-based)")->required();
    l_tr->add_option("--out", o.out, "Output file (default stdout)");

    auto* ver = app.add_subcommand("verify", "Randomized cross-verification suites");
    std::vector<std::string> suite_choices = cm::suite_names();
    suite_choices.insert(suite_choices.begin(), "all");
    ver->add_option("--suite", o.suite, "Suite name")->check(CLI::IsMember(suite_choices));
    ver->add_option("--prng", o.prng, "PRNG seed")->required();
    ver->add_option("--cases", o.cases, "Cases per suite");
    ver->add_option("--base", o.base, "Check a base JSON instead of running suites");
    ver->add_option("--counterexample-dir", o.counterexample_dir, "Directory for counterexample files");
    ver->add_option("--out", o.out, "Report output (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*seed) {
            if (*s_mut) return cmd_seed_mutate(o);
            if (*s_graph) return cmd_seed_graph(o);
            if (*s_model) return cmd_seed_model(o);
        }
        if (*base) {
            if (*b_syz) return cmd_base_syz(o);
            if (*b_trade) return cmd_base_trade(o);
        }
        if (*skel) {
            if (*k_build) return cmd_skeleton_build(o);
            if (*k_surg) return cmd_skeleton_surgery(o);
        }
        if (*loc) {
            if (*l_mut) return cmd_locsys_mutate(o);
            if (*l_tr) return cmd_locsys_transition(o);
        }
        if (*ver) return cmd_verify(o);
    } catch (const cm::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cm::InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cm::InvariantError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
