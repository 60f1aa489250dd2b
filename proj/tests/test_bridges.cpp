#include <doctest.h>

#include <stdexcept>

#include "endo/bridges.hpp"
#include "endo/oracles.hpp"
#include "endo/structure.hpp"

using namespace endo;

namespace {

std::vector<bool> relation(std::size_t n, const std::vector<std::pair<Element, Element>>& pairs) {
    std::vector<bool> holds(n * n, false);
    for (Element x = 1; x <= n; ++x) holds[(x - 1) * n + (x - 1)] = true;
    for (auto [x, y] : pairs) holds[(x - 1) * n + (y - 1)] = true;
    return holds;
}

}  // namespace

TEST_CASE("to_preord") {
    CHECK(to_preord(Endofunction{2, 3, 1}) == PreorderRelation(3, std::vector<bool>(9, true)));
    CHECK(to_preord(identity(2)) == PreorderRelation(2, relation(2, {})));
    CHECK(to_preord(Endofunction{1, 1, 2}) == PreorderRelation(3, relation(3, {{1, 2}, {1, 3}, {2, 3}})));
}

TEST_CASE("PreorderRelation validation") {
    CHECK_THROWS_AS(PreorderRelation(2, {false, false, false, true}), std::invalid_argument);
    CHECK_THROWS_AS(PreorderRelation(3, relation(3, {{1, 2}, {2, 3}})), std::invalid_argument);
    CHECK_THROWS_AS(PreorderRelation(2, {true, true}), std::invalid_argument);
}

TEST_CASE("preorder_kind") {
    CHECK(preorder_kind(to_preord(Endofunction{2, 3, 1})) == PreorderKind::equivalence);
    CHECK(preorder_kind(to_preord(Endofunction{1, 1, 2})) == PreorderKind::partial_order);
    CHECK(preorder_kind(to_preord(identity(3))) == PreorderKind::both);
    CHECK(preorder_kind(to_preord(Endofunction{2, 1, 1})) == PreorderKind::neither);
    CHECK(to_string(PreorderKind::partial_order) == "partial-order");
}

TEST_CASE("to_preord agrees with reachability and Warshall closure, n <= 4") {
    for (const auto& f : all_endofunctions_up_to(4)) {
        const auto r = to_preord(f);
        REQUIRE(r == PreorderRelation(f.size(), oracle::reachability(f)));
        REQUIRE(r == reachability_closure(f));
    }
}

TEST_CASE("bijections give equivalences and forests give partial orders, n <= 4") {
    for (const auto& f : all_endofunctions_up_to(4)) {
        const auto kind = preorder_kind(to_preord(f));
        const bool equivalence = kind == PreorderKind::equivalence || kind == PreorderKind::both;
        const bool partial = kind == PreorderKind::partial_order || kind == PreorderKind::both;
        REQUIRE(equivalence == (classify(f) == Classification::bijection));
        REQUIRE(partial == is_forest(f));
    }
}

TEST_CASE("morphisms are monotone, n <= 3") {
    const auto objects = all_endofunctions_up_to(3);
    for (const auto& a : objects) {
        for (const auto& b : objects) {
            const auto ra = to_preord(a);
            const auto rb = to_preord(b);
            for (const auto& g : hom_set(a, b)) REQUIRE(is_monotone(ra, rb, g.table()));
        }
    }
}

TEST_CASE("the preorder functor is not full") {
    const Endofunction cycle{2, 3, 1};
    const std::vector<Element> swap{2, 1, 3};
    CHECK(is_monotone(to_preord(cycle), to_preord(cycle), swap));
    CHECK_FALSE(is_morphism(cycle, cycle, swap));
}

TEST_CASE("no zero object") {
    CHECK(hom_set(identity(1), Endofunction{2, 3, 1}).empty());
}

TEST_CASE("stable_equivalent examples") {
    const Endofunction cycle{2, 3, 1};
    const auto id = Morphism::identity(cycle);
    CHECK(stable_equivalent(id, id));

    const Morphism c1(cycle, identity(2), {1, 1, 1});
    const Morphism c2(cycle, identity(2), {2, 2, 2});
    CHECK(stable_equivalent(c1, c2));

    const Endofunction swap{2, 1};
    CHECK_FALSE(stable_equivalent(Morphism::identity(swap), Morphism(swap, swap, {2, 1})));

    CHECK_THROWS_AS(stable_equivalent(id, c1), std::invalid_argument);
}

TEST_CASE("stable_classes") {
    const Endofunction cycle{2, 3, 1};
    const auto classes = stable_classes(cycle, identity(2));
    CHECK(classes == std::vector<std::vector<std::size_t>>{{0, 1}});
    CHECK(stable_classes(Endofunction{2, 1}, Endofunction{2, 1}).size() == 2);
}

TEST_CASE("stable equivalence is a congruence, n <= 3") {
    const auto objects = all_endofunctions_up_to(3);
    std::vector<std::vector<std::vector<Morphism>>> homs(objects.size());
    for (std::size_t i = 0; i < objects.size(); ++i) {
        for (const auto& b : objects) homs[i].push_back(hom_set(objects[i], b));
    }
    for (std::size_t i = 0; i < objects.size(); ++i) {
        for (std::size_t j = 0; j < objects.size(); ++j) {
            const auto& gs = homs[i][j];
            for (const auto& g : gs) {
                REQUIRE(stable_equivalent(g, g));
                for (const auto& h : gs) {
                    const bool gh = stable_equivalent(g, h);
                    REQUIRE(gh == stable_equivalent(h, g));
                    if (!gh) continue;
                    for (const auto& k : gs) {
                        if (stable_equivalent(h, k)) REQUIRE(stable_equivalent(g, k));
                    }
                    // pre- and post-composition
                    for (std::size_t p = 0; p < objects.size(); ++p) {
                        for (const auto& m : homs[p][i]) REQUIRE(stable_equivalent(compose(g, m), compose(h, m)));
                        for (const auto& l : homs[j][p]) REQUIRE(stable_equivalent(compose(l, g), compose(l, h)));
                    }
                }
            }
        }
    }
}
