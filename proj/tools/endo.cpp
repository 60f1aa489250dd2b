// endo: command-line front end for the endofunction library.

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include <iostream>

#include "endo/category.hpp"
#include "endo/cli/report.hpp"
#include "endo/cli/text.hpp"
#include "endo/cli/verify.hpp"
#include "endo/errors.hpp"
#include "endo/structure.hpp"

namespace {

using namespace endo;
using namespace endo::cli;

constexpr int exit_usage = 2;
constexpr int exit_bound = 3;

nlohmann::ordered_json table_json(const Endofunction& f) {
    return std::vector<Element>(f.images().begin(), f.images().end());
}

int run_analyze(const std::string& spec, bool json) {
    const auto report = analyze(parse_endofunction(spec));
    if (json) {
        std::cout << to_json(report).dump(2) << '\n';
    } else {
        std::cout << to_text(report);
    }
    return 0;
}

int run_dot(const std::string& spec, const std::string& flavor) {
    const auto f = parse_endofunction(spec);
    const auto kind = flavor == "d" ? DotFlavor::directed : flavor == "u" ? DotFlavor::undirected : DotFlavor::quotient;
    std::cout << export_dot(f, kind);
    return 0;
}

int run_factor(const std::string& spec, const std::string& mode, bool json) {
    const auto f = parse_endofunction(spec);
    if (mode == "components") {
        const auto factors = forest_on_cycle_factors(f);
        if (json) {
            nlohmann::ordered_json j;
            j["input"] = table_json(f);
            j["factors"] = nlohmann::ordered_json::array();
            for (const auto& g : factors) j["factors"].push_back(table_json(g));
            std::cout << j.dump(2) << '\n';
        } else {
            for (const auto& g : factors) std::cout << to_table_text(g) << "    " << to_cycle_text(g) << '\n';
            if (factors.empty()) std::cout << "identity: no factors\n";
        }
        return 0;
    }
    const auto w = moves_transpositions(f);
    if (json) {
        nlohmann::ordered_json j;
        j["input"] = table_json(f);
        j["word"] = nlohmann::ordered_json::array();
        for (const auto& factor : w.factors) j["word"].push_back(to_string(factor));
        j["move_count"] = w.move_count;
        j["transposition_count"] = w.transposition_count;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << to_string(w) << '\n';
    }
    return 0;
}

int run_hom(const std::string& dom_spec, const std::string& cod_spec, bool json) {
    const MapObject dom = parse_endofunction(dom_spec);
    const MapObject cod = parse_endofunction(cod_spec);
    const auto homs = hom_set(dom, cod);
    if (json) {
        nlohmann::ordered_json j;
        j["dom"] = table_json(dom.self_map());
        j["cod"] = table_json(cod.self_map());
        j["count"] = homs.size();
        j["morphisms"] = nlohmann::ordered_json::array();
        for (const auto& g : homs) {
            nlohmann::ordered_json m;
            m["table"] = std::vector<Element>(g.table().begin(), g.table().end());
            m["trivial"] = is_trivial_morphism(g);
            j["morphisms"].push_back(std::move(m));
        }
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << homs.size() << " morphisms\n";
        for (const auto& g : homs) {
            std::cout << fmt::format("[{}]{}\n", fmt::join(g.table(), " "), is_trivial_morphism(g) ? " trivial" : "");
        }
    }
    return 0;
}

int run_verify_command(const VerifyOptions& options, bool json) {
    const auto report = run_verify(options);
    if (json) {
        std::cout << to_json(report).dump(2) << '\n';
    } else {
        std::cout << to_text(report);
    }
    return exit_status(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite endofunctions: structure, factorization, the transformation monoid and the category of "
                 "sets with a self-map."};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Emit JSON instead of text");

    std::string spec;
    const auto add_spec = [&spec](CLI::App* cmd) {
        cmd->add_option("-f,--function", spec, "Endofunction, \"4: 2 3 1 1\" or \"(1 2 3)(4->1)\"")->required();
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "Structural report");
    add_spec(analyze_cmd);

    auto* dot_cmd = app.add_subcommand("dot", "Graphviz output");
    add_spec(dot_cmd);
    std::string flavor = "d";
    dot_cmd->add_option("--flavor", flavor, "d (directed), u (undirected) or q (quotient)")
        ->check(CLI::IsMember({"d", "u", "q"}));

    auto* factor_cmd = app.add_subcommand("factor", "Factorizations");
    add_spec(factor_cmd);
    std::string mode = "components";
    factor_cmd->add_option("--mode", mode, "components or word")->check(CLI::IsMember({"components", "word"}));

    auto* hom_cmd = app.add_subcommand("hom", "Enumerate morphisms");
    std::string dom_spec;
    std::string cod_spec;
    hom_cmd->add_option("--dom", dom_spec, "Domain endofunction")->required();
    hom_cmd->add_option("--cod", cod_spec, "Codomain endofunction")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Exhaustive property sweeps");
    VerifyOptions options;
    std::string suite = "all";
    verify_cmd->add_option("--bound", options.bound, "Largest object size")->capture_default_str();
    verify_cmd->add_option("--suite", suite, "all, factorization, monoid, pretorsion or bridges")
        ->check(CLI::IsMember({"all", "factorization", "monoid", "pretorsion", "bridges"}));
    verify_cmd->add_flag("--allow-large-bound", options.allow_large_bound,
                         fmt::format("Permit bounds above {}", max_verify_bound));
    verify_cmd->add_flag("--inject-fault", options.inject_fault, "Add a property that is false by construction");

    // Usage errors exit 2 rather than CLI11's default codes.
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*analyze_cmd) return run_analyze(spec, json);
        if (*dot_cmd) return run_dot(spec, flavor);
        if (*factor_cmd) return run_factor(spec, mode, json);
        if (*hom_cmd) return run_hom(dom_spec, cod_spec, json);
        options.suite = *parse_suite(suite);
        return run_verify_command(options, json);
    } catch (const endo::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const BoundExceeded& e) {
        std::cerr << "bound exceeded: " << e.what() << '\n';
        return exit_bound;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}
