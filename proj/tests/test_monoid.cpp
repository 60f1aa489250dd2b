#include <doctest.h>

#include <algorithm>

#include "endo/errors.hpp"
#include "endo/monoid.hpp"

using namespace endo;

namespace {

std::vector<Endofunction> move_maps(std::size_t n) {
    std::vector<Endofunction> out;
    for (const auto& mv : all_moves(n)) out.push_back(mv.to_endofunction());
    return out;
}

std::vector<SemidirectElement> all_semidirect(std::size_t n) {
    const auto monoid = enumerate(n);
    std::vector<Endofunction> extended = monoid.ideal;
    extended.push_back(identity(n));
    std::vector<SemidirectElement> out;
    for (const auto& g : extended) {
        for (const auto& tau : monoid.units) out.emplace_back(g, tau);
    }
    return out;
}

std::vector<NestedSemidirectElement> all_nested(std::size_t n) {
    const auto monoid = enumerate(n);
    std::vector<Endofunction> extended = monoid.ideal;
    extended.push_back(identity(n));
    std::vector<NestedSemidirectElement> out;
    for (const auto& g : extended) {
        for (const auto& a : alternating_group(n)) {
            out.emplace_back(g, a, identity(n));
            out.emplace_back(g, a, swap_first_two(n));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("enumerate") {
    const auto m2 = enumerate(2);
    CHECK(m2.all == std::vector<Endofunction>{{1, 1}, {1, 2}, {2, 1}, {2, 2}});
    CHECK(m2.units.size() == 2);
    CHECK(m2.ideal.size() == 2);

    const auto m3 = enumerate(3);
    CHECK(m3.all.size() == 27);
    CHECK(m3.units.size() == 6);
    CHECK(m3.ideal.size() == 21);

    const auto m1 = enumerate(1);
    CHECK(m1.all.size() == 1);
    CHECK(m1.units.size() == 1);
    CHECK(m1.ideal.empty());

    CHECK_THROWS_AS(enumerate(6), BoundExceeded);
    CHECK(enumerate(6, 6).all.size() == 46656);
}

TEST_CASE("alternating group") {
    CHECK(alternating_group(3) == std::vector<Endofunction>{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}});
    CHECK(alternating_group(4).size() == 12);
}

TEST_CASE("conjugate_move") {
    CHECK(conjugate_move(Endofunction{3, 2, 1}, Move(3, 1, 2)) == Move(3, 3, 2));
    CHECK(conjugate_move(identity(3), Move(3, 1, 2)) == Move(3, 1, 2));
    CHECK(conjugate_move(Endofunction{2, 3, 1}, Move(3, 1, 3)) == Move(3, 2, 1));
    CHECK_THROWS_AS(conjugate_move(Endofunction{1, 1, 2}, Move(3, 1, 2)), std::invalid_argument);
}

TEST_CASE("conjugating a move by sigma is the move on the image points, n <= 4") {
    for (std::size_t n = 2; n <= 4; ++n) {
        for (const auto& sigma : enumerate(n).units) {
            for (const auto& mv : all_moves(n)) {
                const auto direct = compose(compose(sigma, mv.to_endofunction()), inverse(sigma));
                REQUIRE(conjugate_move(sigma, mv).to_endofunction() == direct);
            }
        }
    }
}

TEST_CASE("semidirect_compose") {
    const auto id = identity(2);
    const Endofunction swap{2, 1};
    const Endofunction up{2, 2};
    const SemidirectElement x(up, swap);
    CHECK(semidirect_compose(SemidirectElement::one(2), x) == x);
    CHECK(semidirect_compose(SemidirectElement(up, id), SemidirectElement(id, swap)) == SemidirectElement(up, swap));
    CHECK(semidirect_compose(SemidirectElement(id, swap), SemidirectElement(up, id)) ==
          SemidirectElement(Endofunction{1, 1}, swap));
    CHECK_THROWS_AS(SemidirectElement(swap, id), std::invalid_argument);
    CHECK_THROWS_AS(SemidirectElement(id, up), std::invalid_argument);
}

TEST_CASE("psi") {
    CHECK(psi(SemidirectElement(Endofunction{2, 2}, Endofunction{2, 1})) == Endofunction{2, 2});
    CHECK(psi(SemidirectElement(identity(3), Endofunction{3, 1, 2})) == Endofunction{3, 1, 2});
    CHECK(psi(SemidirectElement(Endofunction{1, 1}, identity(2))) == Endofunction{1, 1});
}

TEST_CASE("psi_fiber") {
    CHECK(psi_fiber(Endofunction{2, 1}) == std::vector<SemidirectElement>{{identity(2), Endofunction{2, 1}}});
    CHECK(psi_fiber(Endofunction{2, 2}).size() == 2);
    CHECK(psi_fiber(identity(2)) == std::vector<SemidirectElement>{SemidirectElement::one(2)});
    CHECK_THROWS_AS(psi_fiber(identity(6)), BoundExceeded);
}

TEST_CASE("closure") {
    CHECK(closure(move_maps(2)) == std::vector<Endofunction>{{1, 1}, {2, 2}});
    CHECK(closure(move_maps(3)) == enumerate(3).ideal);
    CHECK(closure({identity(3)}) == std::vector<Endofunction>{identity(3)});
    CHECK(closure({}).empty());
    CHECK_THROWS_AS(closure({identity(2), identity(3)}), std::invalid_argument);
    CHECK_THROWS_AS(closure({identity(6)}), BoundExceeded);
}

TEST_CASE("moves generate the ideal, n in 2..4") {
    for (std::size_t n = 2; n <= 4; ++n) CHECK(closure(move_maps(n)) == enumerate(n).ideal);
    CHECK(enumerate(4).ideal.size() == 232);
}

TEST_CASE("the ideal is completely prime, n <= 3") {
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto all = enumerate(n).all;
        for (const auto& f : all) {
            for (const auto& g : all) {
                REQUIRE(!compose(f, g).is_bijection() == (!f.is_bijection() || !g.is_bijection()));
            }
        }
    }
}

TEST_CASE("psi is an onto homomorphism with fibers 1 or n!, n <= 3") {
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto elements = all_semidirect(n);
        for (const auto& x : elements) {
            for (const auto& y : elements) REQUIRE(psi(semidirect_compose(x, y)) == compose(psi(x), psi(y)));
        }
        std::size_t total = 0;
        for (const auto& f : enumerate(n).all) {
            const auto fiber = psi_fiber(f);
            REQUIRE(fiber.size() == (f.is_bijection() ? 1 : factorial(n)));
            for (const auto& x : fiber) REQUIRE(psi(x) == f);
            total += fiber.size();
        }
        REQUIRE(total == elements.size());
    }
}

TEST_CASE("nested_sign") {
    CHECK(nested_sign(NestedSemidirectElement::one(3)) == Sign::positive);
    CHECK(nested_sign({identity(3), identity(3), swap_first_two(3)}) == Sign::negative);
    CHECK(nested_sign({Endofunction{2, 2, 3}, identity(3), identity(3)}) == Sign::zero);
    CHECK_THROWS_AS(NestedSemidirectElement(identity(3), Endofunction{2, 1, 3}, identity(3)), std::invalid_argument);
    CHECK_THROWS_AS(NestedSemidirectElement(identity(3), identity(3), Endofunction{1, 3, 2}), std::invalid_argument);
}

TEST_CASE("sign triangle commutes and the projection is a homomorphism, n in 2..3") {
    for (std::size_t n = 2; n <= 3; ++n) {
        const auto elements = all_nested(n);
        for (const auto& x : elements) {
            REQUIRE(nested_sign(x) == sign(nested_project(x)));
            for (const auto& y : elements) {
                REQUIRE(nested_project(nested_compose(x, y)) == compose(nested_project(x), nested_project(y)));
            }
        }
    }
}

TEST_CASE("no idempotent endomorphism of M_2 has image S_2") {
    // M_2 = {[1,1], [1,2], [2,1], [2,2]}; the search does see the identity
    // and the map collapsing everything onto the unit.
    const auto all = idempotent_endomorphisms(2);
    CHECK(std::find(all.begin(), all.end(), std::vector<std::size_t>{0, 1, 2, 3}) != all.end());
    CHECK(std::find(all.begin(), all.end(), std::vector<std::size_t>{1, 1, 1, 1}) != all.end());
    CHECK(idempotent_endomorphisms_onto_units(2).empty());
    CHECK_THROWS_AS(idempotent_endomorphisms_onto_units(3), BoundExceeded);
}
