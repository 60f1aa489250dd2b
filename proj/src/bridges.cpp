#include "endo/bridges.hpp"

#include <stdexcept>

#include "endo/structure.hpp"

namespace endo {

PreorderRelation::PreorderRelation(std::size_t n, std::vector<bool> holds) : n_(n), holds_(std::move(holds)) {
    if (holds_.size() != n_ * n_) {
        throw std::invalid_argument("preorder: relation table has the wrong size");
    }
    for (Element x = 1; x <= n_; ++x) {
        if (!this->holds(x, x)) throw std::invalid_argument("preorder: relation is not reflexive");
    }
    for (Element x = 1; x <= n_; ++x) {
        for (Element y = 1; y <= n_; ++y) {
            if (!this->holds(x, y)) continue;
            for (Element z = 1; z <= n_; ++z) {
                if (this->holds(y, z) && !this->holds(x, z)) {
                    throw std::invalid_argument("preorder: relation is not transitive");
                }
            }
        }
    }
}

bool PreorderRelation::is_symmetric() const {
    for (Element x = 1; x <= n_; ++x) {
        for (Element y = 1; y <= n_; ++y) {
            if (holds(x, y) != holds(y, x)) return false;
        }
    }
    return true;
}

bool PreorderRelation::is_antisymmetric() const {
    for (Element x = 1; x <= n_; ++x) {
        for (Element y = x + 1; y <= n_; ++y) {
            if (holds(x, y) && holds(y, x)) return false;
        }
    }
    return true;
}

std::string to_string(PreorderKind kind) {
    switch (kind) {
        case PreorderKind::equivalence: return "equivalence";
        case PreorderKind::partial_order: return "partial-order";
        case PreorderKind::both: return "both";
        case PreorderKind::neither: return "neither";
    }
    return "neither";
}

PreorderRelation to_preord(const MapObject& obj) {
    const auto& f = obj.self_map();
    const auto n = f.size();
    std::vector<bool> holds(n * n, false);
    for (Element y = 1; y <= n; ++y) {
        Element x = y;
        for (std::size_t t = 0; t <= n; ++t) {
            holds[(x - 1) * n + (y - 1)] = true;
            x = f(x);
        }
    }
    return {n, std::move(holds)};
}

PreorderRelation reachability_closure(const MapObject& obj) {
    const auto& f = obj.self_map();
    const auto n = f.size();
    std::vector<bool> holds(n * n, false);
    for (Element y = 1; y <= n; ++y) {
        holds[(y - 1) * n + (y - 1)] = true;
        holds[(f(y) - 1) * n + (y - 1)] = true;
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!holds[i * n + k]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (holds[k * n + j]) holds[i * n + j] = true;
            }
        }
    }
    return {n, std::move(holds)};
}

PreorderKind preorder_kind(const PreorderRelation& r) {
    const bool symmetric = r.is_symmetric();
    const bool antisymmetric = r.is_antisymmetric();
    if (symmetric && antisymmetric) return PreorderKind::both;
    if (symmetric) return PreorderKind::equivalence;
    if (antisymmetric) return PreorderKind::partial_order;
    return PreorderKind::neither;
}

bool is_monotone(const PreorderRelation& from, const PreorderRelation& to, std::span<const Element> table) {
    for (Element x = 1; x <= from.size(); ++x) {
        for (Element y = 1; y <= from.size(); ++y) {
            if (from.holds(x, y) && !to.holds(table[x - 1], table[y - 1])) return false;
        }
    }
    return true;
}

bool stable_equivalent(const Morphism& g, const Morphism& h) {
    if (g.dom() != h.dom() || g.cod() != h.cod()) {
        throw std::invalid_argument("stable_equivalent: morphisms do not share domain and codomain");
    }
    const auto& cod = g.cod().self_map();
    // A map is constant on C with a fixed value.
    const auto collapses = [&](const Morphism& m, const VertexSet& c) {
        const auto v = m(c.front());
        if (cod(v) != v) return false;
        for (auto x : c) {
            if (m(x) != v) return false;
        }
        return true;
    };
    for (const auto& c : components(g.dom().self_map()).components) {
        bool agree = true;
        for (auto x : c) agree = agree && g(x) == h(x);
        if (!agree && !(collapses(g, c) && collapses(h, c))) return false;
    }
    return true;
}

std::vector<std::vector<std::size_t>> stable_classes(const MapObject& dom, const MapObject& cod) {
    const auto homs = hom_set(dom, cod);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < homs.size(); ++i) {
        bool placed = false;
        for (auto& c : classes) {
            if (stable_equivalent(homs[c.front()], homs[i])) {
                c.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({i});
    }
    return classes;
}

}  // namespace endo
