#pragma once

/**
 * @file report.hpp
 * @brief One-shot structural summary of an endofunction, plus Graphviz
 * output.
 */

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "endo/bridges.hpp"
#include "endo/endofunction.hpp"
#include "endo/factorization.hpp"

namespace endo::cli {

struct AnalysisReport {
    Endofunction input = identity(1);
    Classification classification = Classification::bijection;
    bool forest = false;
    bool idempotent = false;
    std::size_t height = 0;
    VertexSet core;
    std::vector<VertexSet> levels;
    std::vector<VertexSet> components;
    std::vector<Endofunction> factors;
    GeneratorWord word;
    Sign sign = Sign::zero;
    std::size_t quotient_class_count = 0;
    /// In class order, classes sorted by least element.
    std::vector<std::size_t> quotient_class_sizes;
    PreorderKind preorder_kind = PreorderKind::neither;
};

AnalysisReport analyze(const Endofunction& f);

/// "key: value" lines, one per field, in declaration order.
std::string to_text(const AnalysisReport& report);

/// Same fields with lower_snake_case keys; sets become sorted integer lists.
nlohmann::ordered_json to_json(const AnalysisReport& report);

std::string to_string(Classification c);
std::string to_string(Sign s);

enum class DotFlavor { directed, undirected, quotient };

/// Graphviz text for the functional graph of f. The quotient flavor draws
/// one node per cycle class, labelled with its members, and omits the loop
/// at each root.
std::string export_dot(const Endofunction& f, DotFlavor flavor);

}  // namespace endo::cli
