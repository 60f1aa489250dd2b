#include <doctest.h>

#include <stdexcept>

#include "endo/endofunction.hpp"

using namespace endo;

TEST_CASE("identity") {
    CHECK(identity(3) == Endofunction{1, 2, 3});
    CHECK(identity(1) == Endofunction{1});
    CHECK(identity(5) == Endofunction{1, 2, 3, 4, 5});
    CHECK_THROWS_AS(identity(0), std::invalid_argument);
}

TEST_CASE("construction rejects bad tables") {
    CHECK_THROWS_AS(Endofunction(std::vector<Element>{}), std::invalid_argument);
    CHECK_THROWS_AS((Endofunction{2, 3, 4}), std::invalid_argument);
    CHECK_THROWS_AS((Endofunction{0, 1}), std::invalid_argument);
}

TEST_CASE("compose") {
    CHECK(compose(Endofunction{2, 2}, Endofunction{2, 1}) == Endofunction{2, 2});
    CHECK(compose(identity(3), Endofunction{2, 3, 1}) == Endofunction{2, 3, 1});
    // 1 -> 3 -> 1, 2 -> 2 -> 3, 3 -> 1 -> 2
    CHECK(compose(Endofunction{2, 3, 1}, Endofunction{3, 2, 1}) == Endofunction{1, 3, 2});
    CHECK_THROWS_AS(compose(identity(2), identity(3)), std::invalid_argument);
}

TEST_CASE("power") {
    CHECK(power(Endofunction{2, 3, 1}, 3) == identity(3));
    CHECK(power(Endofunction{1, 1, 2}, 0) == identity(3));
    CHECK(power(Endofunction{1, 1, 2}, 3) == Endofunction{1, 1, 1});
    // 20! applied to a 7-cycle plus a 13-cycle.
    std::vector<Element> images(20);
    for (Element i = 1; i <= 7; ++i) images[i - 1] = i % 7 + 1;
    for (Element i = 8; i <= 20; ++i) images[i - 1] = i == 20 ? 8 : i + 1;
    CHECK(power(Endofunction(images), factorial(20)) == identity(20));
}

TEST_CASE("classify") {
    CHECK(classify(Endofunction{2, 3, 1}) == Classification::bijection);
    CHECK(classify(Endofunction{1, 1, 2}) == Classification::non_injective);
    CHECK(classify(Endofunction{2, 1}) == Classification::bijection);
}

TEST_CASE("orbit_info") {
    CHECK(orbit_info(Endofunction{2, 3, 1, 1}, 4) == OrbitInfo{1, 3});
    CHECK(orbit_info(identity(3), 2) == OrbitInfo{0, 1});
    CHECK(orbit_info(Endofunction{1, 1, 2}, 3) == OrbitInfo{2, 1});
    CHECK_THROWS_AS(orbit_info(identity(3), 4), std::out_of_range);
    CHECK_THROWS_AS(orbit_info(identity(3), 0), std::out_of_range);
}

TEST_CASE("factorial_power matches the literal exponent beyond 20") {
    // 21 points: a 3-cycle with an 18-point tail hanging off it.
    std::vector<Element> images(21);
    images[0] = 2;
    images[1] = 3;
    images[2] = 1;
    for (Element i = 4; i <= 21; ++i) images[i - 1] = i - 1;
    const Endofunction f(images);
    const auto fp = factorial_power(f);
    // 21! is a multiple of 3 and at least the tail, so every point lands on
    // the cycle point reached after a multiple of 3 steps past its tail.
    CHECK(fp == power(f, 21));
    CHECK(fp(21) == f(f(f(fp(21)))));
}

TEST_CASE("enumeration order and counts") {
    const auto all2 = all_endofunctions(2);
    REQUIRE(all2.size() == 4);
    CHECK(all2[0] == Endofunction{1, 1});
    CHECK(all2[1] == Endofunction{1, 2});
    CHECK(all2[2] == Endofunction{2, 1});
    CHECK(all2[3] == Endofunction{2, 2});
    CHECK(all_endofunctions(4).size() == 256);
    CHECK(all_endofunctions_up_to(3).size() == 1 + 4 + 27);
}

TEST_CASE("composition is associative with identity neutral, n <= 3") {
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto all = all_endofunctions(n);
        const auto id = identity(n);
        for (const auto& f : all) {
            CHECK(compose(id, f) == f);
            CHECK(compose(f, id) == f);
            for (const auto& g : all) {
                const auto fg = compose(f, g);
                for (const auto& h : all) REQUIRE(compose(fg, h) == compose(f, compose(g, h)));
            }
        }
    }
}

TEST_CASE("power laws, n <= 4") {
    for (const auto& f : all_endofunctions_up_to(4)) {
        for (std::uint64_t a = 0; a <= 5; ++a) {
            for (std::uint64_t b = 0; b <= 5; ++b) REQUIRE(power(f, a + b) == compose(power(f, a), power(f, b)));
        }
    }
}

TEST_CASE("bijection iff f^(n!) is the identity, n <= 4") {
    for (const auto& f : all_endofunctions_up_to(4)) {
        const bool literal = power(f, factorial(f.size())) == identity(f.size());
        REQUIRE((classify(f) == Classification::bijection) == literal);
    }
}

TEST_CASE("orbit tail and period are tight, n <= 4") {
    for (const auto& f : all_endofunctions_up_to(4)) {
        for (Element x = 1; x <= f.size(); ++x) {
            const auto info = orbit_info(f, x);
            REQUIRE(info.tail + info.period <= f.size());
            REQUIRE(power(f, info.tail)(x) == power(f, info.tail + info.period)(x));
            for (std::size_t t = 0; t < info.tail + info.period; ++t) {
                for (std::size_t u = t + 1; u <= info.tail + info.period; ++u) {
                    if (t == info.tail && u == info.tail + info.period) continue;
                    REQUIRE(power(f, t)(x) != power(f, u)(x));
                }
            }
        }
    }
}
