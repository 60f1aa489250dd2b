#include "endo/structure.hpp"

#include <algorithm>
#include <numeric>

namespace endo {

UnionFind::UnionFind(std::size_t n) : parent_(n + 1), size_(n + 1, 1) {
    std::iota(parent_.begin(), parent_.end(), Element{0});
}

Element UnionFind::find(Element x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

bool UnionFind::unite(Element a, Element b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
}

std::vector<VertexSet> UnionFind::classes() {
    const auto n = parent_.size() - 1;
    std::vector<std::size_t> slot(n + 1, n + 1);
    std::vector<VertexSet> out;
    // Scanning x ascending visits each class first at its minimum.
    for (Element x = 1; x <= n; ++x) {
        const auto root = find(x);
        if (slot[root] == n + 1) {
            slot[root] = out.size();
            out.emplace_back();
        }
        out[slot[root]].push_back(x);
    }
    return out;
}

LevelStructure level_partition(const Endofunction& f) {
    const auto n = f.size();
    // Descending image chain X, f(X), f^2(X), ... stabilizes at the core.
    std::vector<bool> current(n + 1, true);
    std::size_t count = n;
    while (true) {
        std::vector<bool> next(n + 1, false);
        std::size_t next_count = 0;
        for (Element x = 1; x <= n; ++x) {
            if (current[x] && !next[f(x)]) {
                next[f(x)] = true;
                ++next_count;
            }
        }
        if (next_count == count) break;
        current = std::move(next);
        count = next_count;
    }

    LevelStructure out;
    std::vector<bool> covered = current;
    VertexSet core;
    for (Element x = 1; x <= n; ++x) {
        if (covered[x]) core.push_back(x);
    }
    out.levels.push_back(std::move(core));
    std::size_t covered_count = count;
    // Ascending preimage chain: next level is f^{-1}(covered) \ covered.
    while (covered_count < n) {
        VertexSet level;
        for (Element x = 1; x <= n; ++x) {
            if (!covered[x] && covered[f(x)]) level.push_back(x);
        }
        for (auto x : level) covered[x] = true;
        covered_count += level.size();
        out.levels.push_back(std::move(level));
    }
    out.height = out.levels.size() - 1;
    return out;
}

VertexSet cyclic_core(const Endofunction& f) { return power(f, f.size()).image(); }

ComponentDecomposition components(const Endofunction& f) {
    UnionFind uf(f.size());
    for (Element x = 1; x <= f.size(); ++x) uf.unite(x, f(x));
    return {uf.classes()};
}

std::vector<std::size_t> component_labels(const Endofunction& f) {
    const auto decomposition = components(f);
    std::vector<std::size_t> labels(f.size());
    for (std::size_t c = 0; c < decomposition.components.size(); ++c) {
        for (auto x : decomposition.components[c]) labels[x - 1] = c;
    }
    return labels;
}

GraphEdges graph_edges(const Endofunction& f) {
    GraphEdges out;
    for (Element x = 1; x <= f.size(); ++x) {
        out.directed.emplace_back(x, f(x));
        if (f(x) != x) out.undirected.emplace_back(std::min(x, f(x)), std::max(x, f(x)));
    }
    std::sort(out.undirected.begin(), out.undirected.end());
    out.undirected.erase(std::unique(out.undirected.begin(), out.undirected.end()), out.undirected.end());
    return out;
}

bool is_forest(const Endofunction& f) {
    const auto fn = power(f, f.size());
    return fn == compose(f, fn);
}

bool is_idempotent(const Endofunction& f) { return compose(f, f) == f; }

bool is_forest_on_cycle(const Endofunction& f) {
    const auto decomposition = components(f);
    return std::count_if(decomposition.components.begin(), decomposition.components.end(),
                         [](const VertexSet& c) { return c.size() >= 2; }) <= 1;
}

}  // namespace endo
