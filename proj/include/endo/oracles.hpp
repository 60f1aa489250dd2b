#pragma once

/**
 * @file oracles.hpp
 * @brief Brute-force reference computations.
 *
 * Nothing here calls into structure, factorization, monoid, category or
 * bridges; each routine recomputes its answer from image tables by naive
 * iteration or exhaustive search so it can judge those modules.
 */

#include <cstddef>
#include <cstdint>
#include <vector>

#include "endo/endofunction.hpp"

namespace endo::oracle {

using Table = std::vector<Element>;

/// Connected component of x as the closure of {x} under f and f^-1.
VertexSet component_by_closure(const Endofunction& f, Element x);

/// All components by closure, sorted by minimum element.
std::vector<VertexSet> components_by_closure(const Endofunction& f);

/// Points x with f^k(x) = x for some 1 <= k <= n.
VertexSet periodic_points(const Endofunction& f);

/// Number of steps from x to the first periodic point.
std::size_t distance_to_core(const Endofunction& f, Element x);

/// Number of distinct directed cycles whose points lie in the set.
std::size_t cycles_in(const Endofunction& f, const VertexSet& set);

/// Parity of a bijection by counting inversions; 0 for non-injective maps.
int sign_by_inversions(const Endofunction& f);

/// Least congruence containing the pairs, by repeated merging until
/// x ~ y implies f(x) ~ f(y). Classes sorted by minimum.
std::vector<VertexSet> generated_congruence(const Endofunction& f,
                                            const std::vector<std::pair<Element, Element>>& pairs);

/// x ~ y iff each reaches the other under iteration of f.
std::vector<VertexSet> mutual_reachability_classes(const Endofunction& f);

/// table . f == f2 . table
bool commutes(const Endofunction& f, const Endofunction& f2, const Table& table);

/// All commuting tables, lexicographic.
std::vector<Table> morphism_tables(const Endofunction& f, const Endofunction& f2);

/// g factors through some identity object of size <= max_identity_size.
bool factors_through_identity(const Endofunction& dom, const Endofunction& cod, const Table& g,
                              std::size_t max_identity_size);

/// sigma^-(n!) (f^(n!)(x)) computed by stepping, values as elements of X.
Table winding_literal(const Endofunction& f);

/// At most one closure component has two or more points.
bool is_forest_on_cycle(const Endofunction& f);

enum class Disjointness {
    /// Every point is fixed by one of the two maps.
    pointwise,
    /// Moved points together with their images form disjoint sets.
    closed_support,
};

enum class ProductOrder {
    /// Some ordering of the factors composes to f.
    some,
    /// Every ordering composes to f.
    every,
};

/// Every set of pairwise disjoint, non-identity forest-on-cycle maps whose
/// product is f in the given sense. Each set is sorted.
std::vector<std::vector<Endofunction>> disjoint_factorizations(const Endofunction& f, Disjointness mode,
                                                               ProductOrder order = ProductOrder::some);

/// A 27-point map with a 6-cycle on 1..6, a 4-cycle on 7..10 and 17
/// tree points: a 9-chain into 1 and eight leaves on 7.
Endofunction figure_surrogate();

/// holds[(x-1)*n + (y-1)] iff x = f^t(y) for some t >= 0, by walking.
std::vector<bool> reachability(const Endofunction& f);

}  // namespace endo::oracle
