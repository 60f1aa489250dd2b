#include "endo/cli/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "endo/bridges.hpp"
#include "endo/category.hpp"
#include "endo/cli/text.hpp"
#include "endo/errors.hpp"
#include "endo/factorization.hpp"
#include "endo/monoid.hpp"
#include "endo/oracles.hpp"
#include "endo/structure.hpp"

namespace endo::cli {

namespace {

/// Thrown to abandon a sweep at its first failure.
struct Stop {};

class Probe {
public:
    void count(std::size_t k = 1) { instances += k; }

    /// Records the witness and ends the sweep.
    [[noreturn]] void fail(std::string what) {
        witness = std::move(what);
        throw Stop{};
    }

    void require(bool ok, const std::function<std::string()>& what) {
        if (!ok) fail(what());
    }

    std::size_t instances = 0;
    std::string witness;
};

struct Property {
    const char* suite;
    const char* name;
    /// Largest object size swept; 0 for a property tied to one fixed input.
    std::size_t cap;
    std::function<void(std::size_t limit, Probe&)> body;
};

constexpr std::size_t uncapped = static_cast<std::size_t>(-1);

std::string t(const Endofunction& f) { return to_table_text(f); }

std::string t(std::span<const Element> table) { return fmt::format("[{}]", fmt::join(table, " ")); }

std::string morphism_text(const Morphism& g) {
    return fmt::format("{} from {} to {}", t(g.table()), t(g.dom().self_map()), t(g.cod().self_map()));
}

bool contains(const VertexSet& set, Element x) { return std::binary_search(set.begin(), set.end(), x); }

std::uint64_t power_of(std::size_t base, std::size_t exp) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) out *= base;
    return out;
}

/// hom_set for every ordered pair of objects up to a size, indexed like
/// all_endofunctions_up_to.
struct HomTable {
    std::vector<Endofunction> objects;
    std::vector<std::vector<std::vector<Morphism>>> homs;

    explicit HomTable(std::size_t limit) : objects(all_endofunctions_up_to(limit)) {
        homs.resize(objects.size());
        for (std::size_t i = 0; i < objects.size(); ++i) {
            for (const auto& b : objects) homs[i].push_back(hom_set(objects[i], b));
        }
    }
};

// -- factorization --------------------------------------------------------

void component_factors(std::size_t limit, Probe& p) {
    for (const auto& f : all_endofunctions_up_to(limit)) {
        p.count();
        auto factors = forest_on_cycle_factors(f);
        const auto bad = [&] { return t(f); };
        for (std::size_t i = 0; i < factors.size(); ++i) {
            p.require(is_forest_on_cycle(factors[i]) && !factors[i].is_identity(), bad);
            for (std::size_t j = i + 1; j < factors.size(); ++j) {
                p.require(are_disjoint(factors[i], factors[j]), bad);
                p.require(are_support_disjoint(factors[i], factors[j]), bad);
                p.require(compose(factors[i], factors[j]) == compose(factors[j], factors[i]), bad);
            }
        }
        std::sort(factors.begin(), factors.end());
        do {
            auto product = identity(f.size());
            for (const auto& g : factors) product = compose(product, g);
            p.require(product == f, bad);
        } while (std::next_permutation(factors.begin(), factors.end()));
    }
}

void support_disjoint_uniqueness(std::size_t limit, Probe& p) {
    for (const auto& f : all_endofunctions_up_to(limit)) {
        p.count();
        auto canonical = forest_on_cycle_factors(f);
        std::sort(canonical.begin(), canonical.end());
        const auto all = oracle::disjoint_factorizations(f, oracle::Disjointness::closed_support);
        p.require(all.size() == 1 && all.front() == canonical,
                  [&] { return fmt::format("{} has {} support-disjoint factorizations", t(f), all.size()); });
    }
}

void word_soundness(std::size_t limit, Probe& p) {
    for (const auto& f : all_endofunctions_up_to(limit)) {
        p.count();
        const auto w = moves_transpositions(f);
        const auto core = cyclic_core(f);
        const auto bad = [&] { return fmt::format("{} word {}", t(f), to_string(w)); };
        p.require(evaluate_word(w) == f, bad);
        p.require(w.move_count == f.size() - core.size(), bad);
        for (const auto& factor : w.factors) {
            if (const auto* mv = std::get_if<Move>(&factor)) {
                p.require(!contains(core, mv->source()), bad);
            } else {
                const auto& tr = std::get<Transposition>(factor);
                p.require(contains(core, tr.first()) && contains(core, tr.second()), bad);
            }
        }
        const auto sigma = permutation_part(w);
        const auto m = moves_part(w);
        for (Element x = 1; x <= f.size(); ++x) {
            p.require(sigma(x) == (contains(core, x) ? f(x) : x), bad);
            p.require(m(x) == (contains(core, x) ? x : f(x)), bad);
        }
    }
}

void sign_matches_inversions(std::size_t limit, Probe& p) {
    for (const auto& f : all_endofunctions_up_to(limit)) {
        p.count();
        p.require(to_int(sign(f)) == oracle::sign_by_inversions(f), [&] { return t(f); });
    }
}

void sign_multiplicative(std::size_t limit, Probe& p) {
    for (std::size_t n = 1; n <= limit; ++n) {
        const auto all = all_endofunctions(n);
        std::vector<Sign> signs;
        for (const auto& f : all) signs.push_back(sign(f));
        for (std::size_t i = 0; i < all.size(); ++i) {
            for (std::size_t j = 0; j < all.size(); ++j) {
                p.count();
                p.require(sign(compose(all[i], all[j])) == signs[i] * signs[j],
                          [&] { return fmt::format("f = {}, g = {}", t(all[i]), t(all[j])); });
            }
        }
    }
}

void idempotent_characterization(std::size_t limit, Probe& p) {
    for (const auto& f : all_endofunctions_up_to(limit)) {
        p.count();
        const auto core = cyclic_core(f);
        const bool core_fixed = std::all_of(core.begin(), core.end(), [&](Element x) { return f(x) == x; });
        p.require(is_idempotent(f) == (level_partition(f).height <= 1 && core_fixed), [&] { return t(f); });
    }
}

void power_predicates(std::size_t limit, Probe& p) {
    for (const auto& f : all_endofunctions_up_to(limit)) {
        p.count();
        const auto n = f.size();
        const auto periodic = oracle::periodic_points(f);
        const bool forest = std::all_of(periodic.begin(), periodic.end(), [&](Element x) { return f(x) == x; });
        p.require((power(f, n) == power(f, n + 1)) == forest, [&] { return t(f); });
        p.require(is_forest(f) == forest, [&] { return t(f); });
        p.require(power(f, factorial(n)).is_identity() == f.is_bijection(), [&] { return t(f); });
    }
}

void structure_vs_oracles(std::size_t limit, Probe& p) {
    for (const auto& f : all_endofunctions_up_to(limit)) {
        p.count();
        const auto bad = [&] { return t(f); };
        p.require(components(f).components == oracle::components_by_closure(f), bad);
        p.require(cyclic_core(f) == oracle::periodic_points(f), bad);
        const auto levels = level_partition(f).levels;
        for (std::size_t i = 0; i < levels.size(); ++i) {
            for (auto x : levels[i]) p.require(oracle::distance_to_core(f, x) == i, bad);
        }
    }
}

// -- monoid ---------------------------------------------------------------

void cardinalities(std::size_t limit, Probe& p) {
    for (std::size_t n = 1; n <= limit; ++n) {
        p.count();
        const auto m = enumerate(n, limit);
        p.require(m.all.size() == power_of(n, n) && m.units.size() == factorial(n) &&
                      m.ideal.size() == power_of(n, n) - factorial(n),
                  [&] { return fmt::format("n = {}: {} maps, {} units", n, m.all.size(), m.units.size()); });
    }
}

void moves_generate_ideal(std::size_t limit, Probe& p) {
    for (std::size_t n = 2; n <= limit; ++n) {
        p.count();
        std::vector<Endofunction> moves;
        for (const auto& mv : all_moves(n)) moves.push_back(mv.to_endofunction());
        const auto generated = closure(moves, limit);
        p.require(generated == enumerate(n, limit).ideal,
                  [&] { return fmt::format("n = {}: closure has {} elements", n, generated.size()); });
    }
}

void ideal_completely_prime(std::size_t limit, Probe& p) {
    for (std::size_t n = 1; n <= limit; ++n) {
        const auto all = all_endofunctions(n);
        for (const auto& f : all) {
            for (const auto& g : all) {
                p.count();
                p.require(compose(f, g).is_bijection() == (f.is_bijection() && g.is_bijection()),
                          [&] { return fmt::format("f = {}, g = {}", t(f), t(g)); });
            }
        }
    }
}

void psi_fibers(std::size_t limit, Probe& p) {
    for (const auto& f : all_endofunctions_up_to(limit)) {
        p.count();
        const auto fiber = psi_fiber(f, limit);
        const auto expected = f.is_bijection() ? 1 : factorial(f.size());
        p.require(fiber.size() == expected,
                  [&] { return fmt::format("{} has fiber of size {}", t(f), fiber.size()); });
        for (const auto& x : fiber) p.require(psi(x) == f, [&] { return t(f); });
    }
}

void psi_homomorphism(std::size_t limit, Probe& p) {
    for (std::size_t n = 1; n <= limit; ++n) {
        const auto m = enumerate(n, limit);
        auto extended = m.ideal;
        extended.push_back(identity(n));
        std::vector<SemidirectElement> elements;
        for (const auto& g : extended) {
            for (const auto& tau : m.units) elements.emplace_back(g, tau);
        }
        for (const auto& x : elements) {
            for (const auto& y : elements) {
                p.count();
                p.require(psi(semidirect_compose(x, y)) == compose(psi(x), psi(y)), [&] {
                    return fmt::format("({}, {}) * ({}, {})", t(x.g()), t(x.tau()), t(y.g()), t(y.tau()));
                });
            }
        }
    }
}

void conjugate_moves(std::size_t limit, Probe& p) {
    for (std::size_t n = 2; n <= limit; ++n) {
        for (const auto& sigma : enumerate(n, limit).units) {
            for (const auto& mv : all_moves(n)) {
                p.count();
                const auto direct = compose(compose(sigma, mv.to_endofunction()), inverse(sigma));
                p.require(conjugate_move(sigma, mv).to_endofunction() == direct, [&] {
                    return fmt::format("sigma = {}, m({},{})", t(sigma), mv.source(), mv.target());
                });
            }
        }
    }
}

void sign_triangle(std::size_t limit, Probe& p) {
    for (std::size_t n = 2; n <= limit; ++n) {
        const auto m = enumerate(n, limit);
        auto extended = m.ideal;
        extended.push_back(identity(n));
        std::vector<NestedSemidirectElement> elements;
        for (const auto& g : extended) {
            for (const auto& a : alternating_group(n, limit)) {
                elements.emplace_back(g, a, identity(n));
                elements.emplace_back(g, a, swap_first_two(n));
            }
        }
        for (const auto& x : elements) {
            const auto bad = [&] { return fmt::format("(({}, {}), {})", t(x.g()), t(x.a()), t(x.t())); };
            p.require(nested_sign(x) == sign(nested_project(x)), bad);
            for (const auto& y : elements) {
                p.count();
                p.require(nested_project(nested_compose(x, y)) == compose(nested_project(x), nested_project(y)), bad);
            }
        }
    }
}

void no_idempotent_onto_units(std::size_t, Probe& p) {
    // 4^4 candidate self-maps of M_2.
    p.count(256);
    const auto all = idempotent_endomorphisms(2);
    p.require(!all.empty(), [] { return std::string("search found no idempotent endomorphism at all"); });
    const auto onto = idempotent_endomorphisms_onto_units(2);
    p.require(onto.empty(), [&] { return fmt::format("image table [{}]", fmt::join(onto.front(), " ")); });
}

// -- pretorsion -----------------------------------------------------------

void preexact_shape(std::size_t limit, Probe& p) {
    for (const auto& f : all_endofunctions_up_to(limit)) {
        p.count();
        const auto seq = preexact_sequence(f);
        const auto fn = power(f, f.size());
        const auto bad = [&] { return t(f); };
        p.require(seq.torsion.is_injective() && seq.quotient.is_surjective(), bad);
        p.require(seq.torsion.dom().is_torsion() && seq.quotient.cod().is_torsion_free(), bad);
        for (Element x = 1; x <= f.size(); ++x) p.require(seq.quotient(fn(x)) == seq.quotient(f(fn(x))), bad);
    }
}

void prekernel_precokernel(std::size_t limit, Probe& p) {
    for (const auto& f : all_endofunctions_up_to(limit)) {
        const auto seq = preexact_sequence(f);
        const auto k = prekernel_check(seq.torsion, seq.quotient, limit);
        p.count(k.morphisms_tested);
        p.require(k.holds, [&] { return fmt::format("{}: prekernel: {}", t(f), k.failure); });
        const auto c = precokernel_check(seq.torsion, seq.quotient, limit);
        p.count(c.morphisms_tested);
        p.require(c.holds, [&] { return fmt::format("{}: precokernel: {}", t(f), c.failure); });
    }
}

void torsion_to_forest_trivial(std::size_t limit, Probe& p) {
    const auto objects = all_endofunctions_up_to(limit);
    for (const auto& c : objects) {
        if (!c.is_bijection()) continue;
        for (const auto& fo : objects) {
            if (!is_forest(fo)) continue;
            for (const auto& g : hom_set(c, fo)) {
                p.count();
                p.require(is_trivial_morphism(g), [&] { return morphism_text(g); });
            }
        }
    }
}

void triviality_vs_oracle(std::size_t limit, Probe& p) {
    const auto objects = all_endofunctions_up_to(limit);
    for (const auto& a : objects) {
        for (const auto& b : objects) {
            for (const auto& table : hom_tables(a, b)) {
                p.count();
                const Morphism g(a, b, table);
                p.require(is_trivial_morphism(g) == oracle::factors_through_identity(a, b, table, limit),
                          [&] { return morphism_text(g); });
            }
        }
    }
}

void arrow_preservation(std::size_t limit, Probe& p) {
    const auto objects = all_endofunctions_up_to(limit);
    for (const auto& a : objects) {
        for (const auto& b : objects) {
            const auto arrows = graph_edges(b).directed;
            for (const auto& g : hom_set(a, b)) {
                p.count();
                for (Element x = 1; x <= a.size(); ++x) {
                    const std::pair<Element, Element> arrow{g(x), g(a(x))};
                    p.require(std::find(arrows.begin(), arrows.end(), arrow) != arrows.end(),
                              [&] { return morphism_text(g); });
                }
            }
        }
    }
}

void characterization(std::size_t limit, Probe& p) {
    for (const auto& f : all_endofunctions_up_to(limit)) {
        p.count();
        const auto c = pretorsion_characterization(f, limit);
        p.require(c.torsion_test == f.is_bijection() && c.torsion_free_test == is_forest(f),
                  [&] { return fmt::format("{} classified {}", t(f), to_string(c.kind)); });
    }
}

void cycle_congruence_generated(std::size_t limit, Probe& p) {
    for (const auto& f : all_endofunctions_up_to(limit)) {
        p.count();
        const auto fn = power(f, f.size());
        std::vector<std::pair<Element, Element>> pairs;
        for (Element x = 1; x <= f.size(); ++x) pairs.emplace_back(fn(x), f(fn(x)));
        const auto classes = cycle_congruence(f).classes();
        p.require(classes == oracle::generated_congruence(f, pairs), [&] { return t(f); });
        p.require(classes == oracle::mutual_reachability_classes(f), [&] { return t(f); });
    }
}

void figure_quotient(std::size_t, Probe& p) {
    p.count();
    const auto f = oracle::figure_surrogate();
    const auto cong = cycle_congruence(f);
    std::vector<std::size_t> sizes;
    for (const auto& c : cong.classes()) sizes.push_back(c.size());
    std::sort(sizes.rbegin(), sizes.rend());
    std::vector<std::size_t> expected{6, 4};
    expected.resize(19, 1);
    const auto q = quotient(f, cong);
    p.require(sizes == expected && q.object.size() == 19 && q.object.is_torsion_free(),
              [&] { return fmt::format("{} classes: {}", cong.classes().size(), fmt::join(sizes, " ")); });
}

void winding_literal(std::size_t limit, Probe& p) {
    for (const auto& f : all_endofunctions_up_to(limit)) {
        p.count();
        const auto w = winding_morphism(f);
        const auto core = cyclic_core(f);
        const auto literal = oracle::winding_literal(f);
        for (Element x = 1; x <= f.size(); ++x) p.require(core[w(x) - 1] == literal[x - 1], [&] { return t(f); });
        for (std::size_t i = 0; i < core.size(); ++i) p.require(w(core[i]) == i + 1, [&] { return t(f); });
    }
}

void winding_exponent_free(std::size_t limit, Probe& p) {
    for (const auto& f : all_endofunctions_up_to(limit)) {
        p.count();
        const auto core = cyclic_core(f);
        std::uint64_t order = 1;
        while (true) {
            const auto q = power(f, order);
            if (std::all_of(core.begin(), core.end(), [&](Element x) { return q(x) == x; })) break;
            ++order;
        }
        const auto height = level_partition(f).height;
        const auto w = winding_morphism(f);
        // Every admissible k up to the next few multiples of the order.
        for (std::uint64_t k = 0; k <= height + 3 * order; k += order) {
            if (k < height) continue;
            const auto fk = power(f, k);
            const auto back = power(f, (order - k % order) % order);
            for (Element x = 1; x <= f.size(); ++x) {
                p.require(core[w(x) - 1] == back(fk(x)), [&] { return fmt::format("{} at k = {}", t(f), k); });
            }
        }
    }
}

void adjunctions(std::size_t limit, Probe& p) {
    const auto objects = all_endofunctions_up_to(limit);
    for (const auto& obj : objects) {
        for (const auto& target : objects) {
            const auto run = [&](AdjunctionSide side, const char* label) {
                p.count();
                const auto r = adjunction_check(obj, target, side);
                p.require(r.holds, [&] {
                    return fmt::format("{} obj {} target {}: {}", label, t(obj), t(target), r.failure);
                });
            };
            if (target.is_bijection()) {
                run(AdjunctionSide::reflective_torsion, "reflective torsion");
                run(AdjunctionSide::coreflective_torsion, "coreflective torsion");
            }
            if (is_forest(target)) run(AdjunctionSide::reflective_torsion_free, "reflective torsion-free");
        }
    }
}

void no_right_adjoint(std::size_t limit, Probe& p) {
    // Fixed-point-free cycles receive nothing from a forest.
    for (std::size_t n = 2; n <= std::max<std::size_t>(limit, 2); ++n) {
        std::vector<Element> cycle(n);
        for (Element x = 1; x <= n; ++x) cycle[x - 1] = x % n + 1;
        p.count();
        p.require(no_morphism_from_forests(Endofunction(cycle), limit),
                  [&] { return fmt::format("forest maps into {}", t(Endofunction(cycle))); });
    }
}

void functoriality(std::size_t limit, Probe& p) {
    const HomTable table(limit);
    const auto& objects = table.objects;
    for (std::size_t i = 0; i < objects.size(); ++i) {
        p.require(functor_R(Morphism::identity(objects[i])) == Morphism::identity(torsion_part(objects[i]).object),
                  [&] { return "R(id) on " + t(objects[i]); });
        const auto ci = quotient(objects[i], cycle_congruence(objects[i])).object;
        p.require(functor_C(Morphism::identity(objects[i])) == Morphism::identity(ci),
                  [&] { return "C(id) on " + t(objects[i]); });
        for (std::size_t j = 0; j < objects.size(); ++j) {
            for (const auto& h : table.homs[i][j]) {
                for (std::size_t k = 0; k < objects.size(); ++k) {
                    for (const auto& g : table.homs[j][k]) {
                        p.count();
                        const auto gh = compose(g, h);
                        p.require(functor_R(gh) == compose(functor_R(g), functor_R(h)) &&
                                      functor_C(gh) == compose(functor_C(g), functor_C(h)),
                                  [&] { return morphism_text(g) + " after " + morphism_text(h); });
                    }
                }
            }
        }
    }
}

// -- bridges --------------------------------------------------------------

void preorder_vs_reachability(std::size_t limit, Probe& p) {
    for (const auto& f : all_endofunctions_up_to(limit)) {
        p.count();
        const auto r = to_preord(f);
        p.require(r == PreorderRelation(f.size(), oracle::reachability(f)) && r == reachability_closure(f),
                  [&] { return t(f); });
    }
}

void preorder_kinds(std::size_t limit, Probe& p) {
    for (const auto& f : all_endofunctions_up_to(limit)) {
        p.count();
        const auto kind = preorder_kind(to_preord(f));
        const bool equivalence = kind == PreorderKind::equivalence || kind == PreorderKind::both;
        const bool partial = kind == PreorderKind::partial_order || kind == PreorderKind::both;
        p.require(equivalence == f.is_bijection() && partial == is_forest(f),
                  [&] { return fmt::format("{} gives {}", t(f), to_string(kind)); });
    }
}

void monotone_morphisms(std::size_t limit, Probe& p) {
    const auto objects = all_endofunctions_up_to(limit);
    std::vector<PreorderRelation> orders;
    for (const auto& f : objects) orders.push_back(to_preord(f));
    for (std::size_t i = 0; i < objects.size(); ++i) {
        for (std::size_t j = 0; j < objects.size(); ++j) {
            for (const auto& g : hom_set(objects[i], objects[j])) {
                p.count();
                p.require(is_monotone(orders[i], orders[j], g.table()), [&] { return morphism_text(g); });
            }
        }
    }
}

void not_full_witness(std::size_t, Probe& p) {
    p.count();
    const Endofunction cycle{2, 3, 1};
    const std::vector<Element> swap{2, 1, 3};
    p.require(is_monotone(to_preord(cycle), to_preord(cycle), swap) && !is_morphism(cycle, cycle, swap),
              [] { return std::string("[2 1 3] on the 3-cycle"); });
}

void stable_congruence(std::size_t limit, Probe& p) {
    const HomTable table(limit);
    const auto n = table.objects.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto& gs = table.homs[i][j];
            for (const auto& g : gs) {
                p.require(stable_equivalent(g, g), [&] { return "reflexivity at " + morphism_text(g); });
                for (const auto& h : gs) {
                    p.count();
                    const bool gh = stable_equivalent(g, h);
                    const auto pair = [&] { return morphism_text(g) + " vs " + t(h.table()); };
                    p.require(gh == stable_equivalent(h, g), pair);
                    if (!gh) continue;
                    for (const auto& k : gs) {
                        if (stable_equivalent(h, k)) p.require(stable_equivalent(g, k), pair);
                    }
                    for (std::size_t q = 0; q < n; ++q) {
                        for (const auto& m : table.homs[q][i]) {
                            p.require(stable_equivalent(compose(g, m), compose(h, m)), pair);
                        }
                        for (const auto& l : table.homs[j][q]) {
                            p.require(stable_equivalent(compose(l, g), compose(l, h)), pair);
                        }
                    }
                }
            }
        }
    }
}

void no_zero_object(std::size_t, Probe& p) {
    p.count();
    p.require(hom_set(identity(1), Endofunction{2, 3, 1}).empty(),
              [] { return std::string("({1}, id) maps into the 3-cycle"); });
}

// -- injected fault -------------------------------------------------------

void every_map_bijective(std::size_t limit, Probe& p) {
    for (const auto& f : all_endofunctions_up_to(limit)) {
        p.count();
        p.require(f.is_bijection(), [&] { return t(f); });
    }
}

const std::vector<Property>& registry() {
    static const std::vector<Property> properties{
        {"factorization", "component-factors", uncapped, component_factors},
        {"factorization", "support-disjoint-uniqueness", 4, support_disjoint_uniqueness},
        {"factorization", "word-soundness", uncapped, word_soundness},
        {"factorization", "sign-matches-inversions", uncapped, sign_matches_inversions},
        {"factorization", "sign-multiplicative", 4, sign_multiplicative},
        {"factorization", "idempotent-characterization", uncapped, idempotent_characterization},
        {"factorization", "power-predicates", uncapped, power_predicates},
        {"factorization", "structure-vs-oracles", uncapped, structure_vs_oracles},
        {"monoid", "cardinalities", uncapped, cardinalities},
        {"monoid", "moves-generate-ideal", uncapped, moves_generate_ideal},
        {"monoid", "ideal-completely-prime", 4, ideal_completely_prime},
        {"monoid", "psi-fibers", uncapped, psi_fibers},
        {"monoid", "psi-homomorphism", 3, psi_homomorphism},
        {"monoid", "conjugate-moves", uncapped, conjugate_moves},
        {"monoid", "sign-triangle", 3, sign_triangle},
        {"monoid", "no-idempotent-onto-units", 0, no_idempotent_onto_units},
        {"pretorsion", "preexact-shape", uncapped, preexact_shape},
        {"pretorsion", "prekernel-precokernel", 4, prekernel_precokernel},
        {"pretorsion", "torsion-to-forest-trivial", 3, torsion_to_forest_trivial},
        {"pretorsion", "triviality-vs-identity-factoring", 3, triviality_vs_oracle},
        {"pretorsion", "arrow-preservation", 3, arrow_preservation},
        {"pretorsion", "characterization", 3, characterization},
        {"pretorsion", "cycle-congruence-generated", uncapped, cycle_congruence_generated},
        {"pretorsion", "figure-quotient", 0, figure_quotient},
        {"pretorsion", "winding-literal", 5, winding_literal},
        {"pretorsion", "winding-exponent-free", 4, winding_exponent_free},
        {"pretorsion", "adjunctions", 3, adjunctions},
        {"pretorsion", "no-right-adjoint", 4, no_right_adjoint},
        {"pretorsion", "functoriality", 3, functoriality},
        {"bridges", "preorder-vs-reachability", uncapped, preorder_vs_reachability},
        {"bridges", "preorder-kinds", uncapped, preorder_kinds},
        {"bridges", "monotone-morphisms", 3, monotone_morphisms},
        {"bridges", "not-full-witness", 0, not_full_witness},
        {"bridges", "stable-congruence", 3, stable_congruence},
        {"bridges", "no-zero-object", 0, no_zero_object},
    };
    return properties;
}

/// Fixed-input properties report the size of that input.
std::size_t fixed_size(const char* name) {
    const std::string_view n(name);
    if (n == "figure-quotient") return 27;
    if (n == "no-idempotent-onto-units") return 2;
    return 3;
}

PropertyResult run_property(const Property& prop, std::size_t bound) {
    PropertyResult result;
    result.suite = prop.suite;
    result.name = prop.name;
    result.fixed_input = prop.cap == 0;
    result.size_limit = prop.cap == 0 ? fixed_size(prop.name) : std::min(bound, prop.cap);
    Probe probe;
    const auto start = std::chrono::steady_clock::now();
    try {
        prop.body(prop.cap == 0 ? bound : result.size_limit, probe);
        result.passed = true;
    } catch (const Stop&) {
        result.passed = false;
        result.witness = probe.witness;
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.instances = probe.instances;
    return result;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
    if (name == "all") return Suite::all;
    if (name == "factorization") return Suite::factorization;
    if (name == "monoid") return Suite::monoid;
    if (name == "pretorsion") return Suite::pretorsion;
    if (name == "bridges") return Suite::bridges;
    return std::nullopt;
}

std::string to_string(Suite suite) {
    switch (suite) {
        case Suite::all: return "all";
        case Suite::factorization: return "factorization";
        case Suite::monoid: return "monoid";
        case Suite::pretorsion: return "pretorsion";
        case Suite::bridges: return "bridges";
    }
    return "all";
}

bool VerifyReport::passed() const {
    return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.passed; });
}

VerifyReport run_verify(const VerifyOptions& options) {
    if (options.bound == 0) throw std::invalid_argument("verify: bound must be at least 1");
    if (options.bound > max_verify_bound && !options.allow_large_bound) {
        throw BoundExceeded(fmt::format("verify: bound {} exceeds {}; pass the override to run it anyway",
                                        options.bound, max_verify_bound));
    }
    VerifyReport report;
    report.bound = options.bound;
    const auto wanted = to_string(options.suite);
    for (const auto& prop : registry()) {
        if (options.suite != Suite::all && wanted != prop.suite) continue;
        report.results.push_back(run_property(prop, options.bound));
    }
    if (options.inject_fault) {
        report.results.push_back(run_property({"injected", "every-map-bijective", uncapped, every_map_bijective},
                                              options.bound));
    }
    return report;
}

int exit_status(const VerifyReport& report) { return report.passed() ? 0 : 1; }

std::string to_text(const VerifyReport& report) {
    std::string out;
    double total = 0;
    std::size_t failed = 0;
    for (const auto& r : report.results) {
        out += fmt::format("{} {}.{}  n{}{}  {} instances  {:.3f}s\n", r.passed ? "PASS" : "FAIL", r.suite, r.name,
                           r.fixed_input ? "=" : "<=", r.size_limit, r.instances, r.seconds);
        if (!r.passed) out += fmt::format("     witness: {}\n", r.witness);
        total += r.seconds;
        failed += r.passed ? 0 : 1;
    }
    out += fmt::format("{} properties, {} failed, bound {}, {:.3f}s\n", report.results.size(), failed, report.bound,
                       total);
    return out;
}

nlohmann::ordered_json to_json(const VerifyReport& report) {
    nlohmann::ordered_json j;
    j["bound"] = report.bound;
    j["passed"] = report.passed();
    j["properties"] = nlohmann::ordered_json::array();
    for (const auto& r : report.results) {
        nlohmann::ordered_json p;
        p["suite"] = r.suite;
        p["name"] = r.name;
        p["passed"] = r.passed;
        p["size_limit"] = r.size_limit;
        p["fixed_input"] = r.fixed_input;
        p["instances"] = r.instances;
        p["seconds"] = r.seconds;
        if (!r.passed) p["witness"] = r.witness;
        j["properties"].push_back(std::move(p));
    }
    return j;
}

}  // namespace endo::cli
