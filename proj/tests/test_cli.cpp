#include <doctest.h>

#include <string>

#include "endo/cli/report.hpp"
#include "endo/cli/text.hpp"
#include "endo/cli/verify.hpp"
#include "endo/errors.hpp"

using namespace endo;
using namespace endo::cli;

namespace {

std::pair<std::size_t, std::size_t> error_position(const std::string& text) {
    try {
        parse_endofunction(text);
    } catch (const ParseError& e) {
        return {e.line(), e.column()};
    }
    return {0, 0};
}

}  // namespace

TEST_CASE("parse table form") {
    CHECK(parse_endofunction("4: 2 3 1 1") == Endofunction{2, 3, 1, 1});
    CHECK(parse_endofunction("  1:1  ") == identity(1));
    CHECK(parse_endofunction("3:\n 2\n 3\n 1") == Endofunction{2, 3, 1});
    CHECK_THROWS_AS(parse_endofunction("3: 2 3 4"), ParseError);
    CHECK_THROWS_AS(parse_endofunction("3: 2 3"), ParseError);
    CHECK_THROWS_AS(parse_endofunction("3: 2 3 1 1"), ParseError);
    CHECK_THROWS_AS(parse_endofunction("3: 2 3 0"), ParseError);
    CHECK_THROWS_AS(parse_endofunction("3: 2 3x 1"), ParseError);
    CHECK_THROWS_AS(parse_endofunction("0:"), ParseError);
    CHECK_THROWS_AS(parse_endofunction(""), ParseError);
    CHECK_THROWS_AS(parse_endofunction("[2, 3, 1]"), ParseError);
}

TEST_CASE("parse cycle form") {
    CHECK(parse_endofunction("(1 2 3)(4->1)") == Endofunction{2, 3, 1, 1});
    CHECK(parse_endofunction("( 1 2 3 ) ( 4 -> 1 )") == Endofunction{2, 3, 1, 1});
    CHECK(parse_endofunction("(3)") == identity(3));
    CHECK(parse_endofunction("5: (1 2)") == Endofunction{2, 1, 3, 4, 5});
    CHECK(parse_endofunction("(2->1)(3->1)") == Endofunction{1, 1, 1});
    CHECK_THROWS_AS(parse_endofunction("(1 2)(2->1)"), ParseError);
    CHECK_THROWS_AS(parse_endofunction("(1 2 1)"), ParseError);
    CHECK_THROWS_AS(parse_endofunction("3: (1 4)"), ParseError);
    CHECK_THROWS_AS(parse_endofunction("(0 1)"), ParseError);
    CHECK_THROWS_AS(parse_endofunction("(1 2"), ParseError);
    CHECK_THROWS_AS(parse_endofunction("(1-2)"), ParseError);
    CHECK_THROWS_AS(parse_endofunction("()"), ParseError);
}

TEST_CASE("parse errors carry positions") {
    CHECK(error_position("3: 2 3 4") == std::pair<std::size_t, std::size_t>{1, 8});
    CHECK(error_position("(1 2)\n(2->1)") == std::pair<std::size_t, std::size_t>{2, 2});
    CHECK(error_position("3:\n  2 9 1") == std::pair<std::size_t, std::size_t>{2, 5});
    try {
        parse_endofunction("3: 2 3 4");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()) == "1:8: image 4 out of range 1..3");
    }
}

TEST_CASE("serialization") {
    CHECK(to_table_text(Endofunction{2, 3, 1, 1}) == "4: 2 3 1 1");
    CHECK(to_cycle_text(Endofunction{2, 3, 1, 1}) == "(1 2 3)(4->1)");
    CHECK(to_cycle_text(identity(3)) == "(3)");
    CHECK(to_cycle_text(Endofunction{2, 1, 3}) == "(1 2)(3)");
    CHECK(to_cycle_text(Endofunction{1, 3, 3}) == "(2->3)");
}

TEST_CASE("parse inverts both serializations, n <= 4") {
    for (const auto& f : all_endofunctions_up_to(4)) {
        REQUIRE(parse_endofunction(to_table_text(f)) == f);
        REQUIRE(parse_endofunction(to_cycle_text(f)) == f);
    }
}

TEST_CASE("word and factor text") {
    CHECK(to_string(Factor{Move(3, 3, 2)}) == "m(3,2)");
    CHECK(to_string(Factor{Transposition(3, 2, 1)}) == "(1 2)");
    CHECK(to_string(moves_transpositions(identity(2))) == "id");
    CHECK(to_string(moves_transpositions(Endofunction{1, 1, 2})) == "m(3,2) m(2,1)");
}

TEST_CASE("analyze") {
    const auto r = analyze(Endofunction{2, 3, 1, 1});
    CHECK(r.height == 1);
    CHECK(r.core == VertexSet{1, 2, 3});
    CHECK(r.sign == Sign::zero);
    CHECK(r.quotient_class_count == 2);
    CHECK(r.quotient_class_sizes == std::vector<std::size_t>{3, 1});

    const auto id = analyze(identity(3));
    CHECK(id.height == 0);
    CHECK(id.sign == Sign::positive);
    CHECK(id.forest);
    CHECK(id.components.size() == 3);
    CHECK(id.preorder_kind == PreorderKind::both);

    const auto swap = analyze(Endofunction{2, 1});
    CHECK(swap.sign == Sign::negative);
    CHECK(swap.classification == Classification::bijection);
    CHECK(swap.components.size() == 1);
}

TEST_CASE("report text and JSON") {
    const auto r = analyze(Endofunction{2, 3, 1, 1});
    const auto text = to_text(r);
    CHECK(text.rfind("input: 4: 2 3 1 1\ncycle_form: (1 2 3)(4->1)\nclassification: non-injective\n", 0) == 0);
    CHECK(text.find("\nsign: 0\n") != std::string::npos);
    CHECK(text.find("\nquotient_class_count: 2\n") != std::string::npos);

    const auto j = to_json(r);
    CHECK(j["input"] == nlohmann::json({2, 3, 1, 1}));
    CHECK(j["core"] == nlohmann::json({1, 2, 3}));
    CHECK(j["components"] == nlohmann::json::parse("[[1,2,3,4]]"));
    CHECK(j["sign"] == 0);
    CHECK(j["quotient_class_sizes"] == nlohmann::json({3, 1}));
    CHECK(j["preorder_kind"] == "neither");
    std::vector<std::string> keys;
    for (const auto& [key, value] : j.items()) keys.push_back(key);
    CHECK(keys.front() == "input");
    CHECK(keys.back() == "preorder_kind");
}

TEST_CASE("export_dot") {
    CHECK(export_dot(Endofunction{2, 2}, DotFlavor::directed) == "digraph f {\n  1;\n  2;\n  1 -> 2;\n  2 -> 2;\n}\n");
    CHECK(export_dot(identity(2), DotFlavor::undirected) == "graph f {\n  1;\n  2;\n}\n");
    CHECK(export_dot(Endofunction{2, 1}, DotFlavor::undirected) == "graph f {\n  1;\n  2;\n  1 -- 2;\n}\n");
    CHECK(export_dot(Endofunction{2, 3, 1, 1}, DotFlavor::quotient) ==
          "digraph quotient {\n  1 [label=\"{1,2,3}\"];\n  2 [label=\"{4}\"];\n  2 -> 1;\n}\n");
}

TEST_CASE("export_dot is deterministic, n <= 3") {
    for (const auto& f : all_endofunctions_up_to(3)) {
        for (auto flavor : {DotFlavor::directed, DotFlavor::undirected, DotFlavor::quotient}) {
            REQUIRE(export_dot(f, flavor) == export_dot(Endofunction(f), flavor));
        }
    }
}

TEST_CASE("verify suites pass") {
    const auto factor = run_verify({.bound = 4, .suite = Suite::factorization});
    CHECK(factor.passed());
    CHECK(exit_status(factor) == 0);
    CHECK(factor.results.front().instances == 1 + 4 + 27 + 256);

    const auto pretorsion = run_verify({.bound = 3, .suite = Suite::pretorsion});
    CHECK(pretorsion.passed());
    const auto monoid = run_verify({.bound = 3, .suite = Suite::monoid});
    CHECK(monoid.passed());
    for (const auto& r : monoid.results) CHECK(r.suite == "monoid");
}

TEST_CASE("verify fault injection and bounds") {
    const auto broken = run_verify({.bound = 2, .suite = Suite::bridges, .inject_fault = true});
    CHECK_FALSE(broken.passed());
    CHECK(exit_status(broken) == 1);
    CHECK(broken.results.back().witness == "2: 1 1");

    CHECK_THROWS_AS(run_verify({.bound = 6}), BoundExceeded);
    CHECK_THROWS_AS(run_verify({.bound = 0}), std::invalid_argument);
    CHECK(parse_suite("pretorsion") == Suite::pretorsion);
    CHECK_FALSE(parse_suite("everything").has_value());
}
