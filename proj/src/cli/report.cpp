#include "endo/cli/report.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "endo/category.hpp"
#include "endo/cli/text.hpp"
#include "endo/structure.hpp"

namespace endo::cli {

namespace {

std::string set_text(const VertexSet& set) { return fmt::format("{{{}}}", fmt::join(set, ",")); }

std::string sets_text(const std::vector<VertexSet>& sets) {
    std::vector<std::string> parts;
    for (const auto& s : sets) parts.push_back(set_text(s));
    return fmt::format("{}", fmt::join(parts, " "));
}

std::vector<std::vector<Element>> table_lists(const std::vector<Endofunction>& maps) {
    std::vector<std::vector<Element>> out;
    for (const auto& g : maps) out.emplace_back(g.images().begin(), g.images().end());
    return out;
}

}  // namespace

std::string to_string(Classification c) { return c == Classification::bijection ? "bijection" : "non-injective"; }

std::string to_string(Sign s) {
    switch (s) {
        case Sign::positive: return "+1";
        case Sign::negative: return "-1";
        case Sign::zero: return "0";
    }
    return "0";
}

AnalysisReport analyze(const Endofunction& f) {
    AnalysisReport r;
    r.input = f;
    r.classification = classify(f);
    r.forest = is_forest(f);
    r.idempotent = is_idempotent(f);
    auto levels = level_partition(f);
    r.height = levels.height;
    r.levels = std::move(levels.levels);
    r.core = cyclic_core(f);
    r.components = components(f).components;
    r.factors = forest_on_cycle_factors(f);
    r.word = moves_transpositions(f);
    r.sign = sign(f);
    const auto cong = cycle_congruence(f);
    r.quotient_class_count = cong.classes().size();
    for (const auto& c : cong.classes()) r.quotient_class_sizes.push_back(c.size());
    r.preorder_kind = preorder_kind(to_preord(f));
    return r;
}

std::string to_text(const AnalysisReport& r) {
    std::vector<std::string> factors;
    for (const auto& g : r.factors) factors.push_back(fmt::format("[{}]", fmt::join(g.images(), " ")));
    std::string out;
    const auto line = [&out](std::string_view key, const std::string& value) {
        out += fmt::format("{}: {}\n", key, value);
    };
    line("input", to_table_text(r.input));
    line("cycle_form", to_cycle_text(r.input));
    line("classification", to_string(r.classification));
    line("forest", r.forest ? "true" : "false");
    line("idempotent", r.idempotent ? "true" : "false");
    line("height", std::to_string(r.height));
    line("core", set_text(r.core));
    line("levels", sets_text(r.levels));
    line("components", sets_text(r.components));
    line("factors", factors.empty() ? "none" : fmt::format("{}", fmt::join(factors, " ")));
    line("word", to_string(r.word));
    line("move_count", std::to_string(r.word.move_count));
    line("transposition_count", std::to_string(r.word.transposition_count));
    line("sign", to_string(r.sign));
    line("quotient_class_count", std::to_string(r.quotient_class_count));
    line("quotient_class_sizes", fmt::format("{}", fmt::join(r.quotient_class_sizes, " ")));
    line("preorder_kind", to_string(r.preorder_kind));
    return out;
}

nlohmann::ordered_json to_json(const AnalysisReport& r) {
    nlohmann::ordered_json word = nlohmann::json::array();
    for (const auto& factor : r.word.factors) word.push_back(to_string(factor));
    nlohmann::ordered_json j;
    j["input"] = std::vector<Element>(r.input.images().begin(), r.input.images().end());
    j["cycle_form"] = to_cycle_text(r.input);
    j["classification"] = to_string(r.classification);
    j["forest"] = r.forest;
    j["idempotent"] = r.idempotent;
    j["height"] = r.height;
    j["core"] = r.core;
    j["levels"] = r.levels;
    j["components"] = r.components;
    j["factors"] = table_lists(r.factors);
    j["word"] = word;
    j["move_count"] = r.word.move_count;
    j["transposition_count"] = r.word.transposition_count;
    j["sign"] = to_int(r.sign);
    j["quotient_class_count"] = r.quotient_class_count;
    j["quotient_class_sizes"] = r.quotient_class_sizes;
    j["preorder_kind"] = to_string(r.preorder_kind);
    return j;
}

std::string export_dot(const Endofunction& f, DotFlavor flavor) {
    std::string out;
    const auto n = f.size();
    switch (flavor) {
        case DotFlavor::directed:
            out = "digraph f {\n";
            for (Element x = 1; x <= n; ++x) out += fmt::format("  {};\n", x);
            for (const auto& [a, b] : graph_edges(f).directed) out += fmt::format("  {} -> {};\n", a, b);
            break;
        case DotFlavor::undirected:
            out = "graph f {\n";
            for (Element x = 1; x <= n; ++x) out += fmt::format("  {};\n", x);
            for (const auto& [a, b] : graph_edges(f).undirected) out += fmt::format("  {} -- {};\n", a, b);
            break;
        case DotFlavor::quotient: {
            const auto cong = cycle_congruence(f);
            const auto q = quotient(f, cong);
            const auto& classes = cong.classes();
            out = "digraph quotient {\n";
            for (std::size_t i = 0; i < classes.size(); ++i) {
                out += fmt::format("  {} [label=\"{}\"];\n", i + 1, set_text(classes[i]));
            }
            const auto& fbar = q.object.self_map();
            for (Element c = 1; c <= fbar.size(); ++c) {
                if (fbar(c) != c) out += fmt::format("  {} -> {};\n", c, fbar(c));
            }
            break;
        }
    }
    out += "}\n";
    return out;
}

}  // namespace endo::cli
