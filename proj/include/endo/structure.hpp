#pragma once

/**
 * @file structure.hpp
 * @brief Shape of a single endofunction: levels, cyclic core, graphs and
 * connected components.
 *
 * Level i of f holds the points at distance i from the cyclic core, so that
 * f maps level 0 onto itself and level i into level i - 1.
 */

#include <cstddef>
#include <utility>
#include <vector>

#include "endo/endofunction.hpp"

namespace endo {

struct LevelStructure {
    std::size_t height = 0;
    /// levels[0] is the cyclic core; each level is sorted ascending.
    std::vector<VertexSet> levels;

    bool operator==(const LevelStructure&) const = default;
};

struct ComponentDecomposition {
    /// Components sorted by their minimum element; each sorted ascending.
    std::vector<VertexSet> components;

    bool operator==(const ComponentDecomposition&) const = default;
};

struct GraphEdges {
    /// (i, f(i)) for every i, ordered by i.
    std::vector<std::pair<Element, Element>> directed;
    /// {i, f(i)} with f(i) != i, stored as (min, max), sorted, no duplicates.
    std::vector<std::pair<Element, Element>> undirected;

    bool operator==(const GraphEdges&) const = default;
};

LevelStructure level_partition(const Endofunction& f);

/// Points on directed cycles: the image of f^n.
VertexSet cyclic_core(const Endofunction& f);

/// Connected components of the undirected graph of f (union-find).
ComponentDecomposition components(const Endofunction& f);

/// Component index of every element, parallel to components(f).components.
/// Entry x - 1 is the index of the component containing x.
std::vector<std::size_t> component_labels(const Endofunction& f);

GraphEdges graph_edges(const Endofunction& f);

bool is_forest(const Endofunction& f);
bool is_idempotent(const Endofunction& f);

/// At most one connected component has two or more vertices.
bool is_forest_on_cycle(const Endofunction& f);

/// Disjoint-set forest over {1..n} with union by size and path halving.
class UnionFind {
public:
    explicit UnionFind(std::size_t n);

    Element find(Element x);
    bool unite(Element a, Element b);

    /// Classes sorted by minimum element, each sorted ascending.
    std::vector<VertexSet> classes();

private:
    std::vector<Element> parent_;
    std::vector<std::size_t> size_;
};

}  // namespace endo
