#pragma once

/**
 * @file bridges.hpp
 * @brief The reachability preorder of an endofunction and the stable
 * congruence on hom-sets.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "endo/category.hpp"

namespace endo {

/// n x n relation; holds(x, y) is 1-indexed.
class PreorderRelation {
public:
    /// Throws std::invalid_argument unless the relation is reflexive and
    /// transitive.
    PreorderRelation(std::size_t n, std::vector<bool> holds);

    std::size_t size() const noexcept { return n_; }
    bool holds(Element x, Element y) const noexcept { return holds_[(x - 1) * n_ + (y - 1)]; }

    bool is_symmetric() const;
    bool is_antisymmetric() const;

    bool operator==(const PreorderRelation&) const = default;

private:
    std::size_t n_;
    std::vector<bool> holds_;
};

enum class PreorderKind { equivalence, partial_order, both, neither };

std::string to_string(PreorderKind kind);

/// x rho y iff x = f^t(y) for some t in [0, n].
PreorderRelation to_preord(const MapObject& obj);

/// Reflexive-transitive closure of y -> f(y), computed by Warshall's
/// algorithm; agrees with to_preord.
PreorderRelation reachability_closure(const MapObject& obj);

PreorderKind preorder_kind(const PreorderRelation& r);

/// g is monotone from rho_f to rho_f'.
bool is_monotone(const PreorderRelation& from, const PreorderRelation& to, std::span<const Element> table);

/// On every connected component C of the domain, either g and h agree, or
/// both are constant on C with values fixed by the codomain map. Throws
/// std::invalid_argument if g and h do not share domain and codomain.
bool stable_equivalent(const Morphism& g, const Morphism& h);

/// Partition of hom_set(dom, cod) into stable classes; each inner vector
/// lists indices into hom_set(dom, cod).
std::vector<std::vector<std::size_t>> stable_classes(const MapObject& dom, const MapObject& cod);

}  // namespace endo
