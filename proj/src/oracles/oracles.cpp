#include "endo/oracles.hpp"

#include <algorithm>
#include <functional>

namespace endo::oracle {

VertexSet component_by_closure(const Endofunction& f, Element x) {
    const auto n = f.size();
    std::vector<bool> in(n + 1, false);
    in[x] = true;
    bool grew = true;
    while (grew) {
        grew = false;
        for (Element y = 1; y <= n; ++y) {
            // Add f(y) for y inside, and y whenever f(y) is inside.
            if (in[y] && !in[f(y)]) {
                in[f(y)] = true;
                grew = true;
            }
            if (!in[y] && in[f(y)]) {
                in[y] = true;
                grew = true;
            }
        }
    }
    VertexSet out;
    for (Element y = 1; y <= n; ++y) {
        if (in[y]) out.push_back(y);
    }
    return out;
}

std::vector<VertexSet> components_by_closure(const Endofunction& f) {
    std::vector<VertexSet> out;
    std::vector<bool> placed(f.size() + 1, false);
    for (Element x = 1; x <= f.size(); ++x) {
        if (placed[x]) continue;
        auto c = component_by_closure(f, x);
        for (auto y : c) placed[y] = true;
        out.push_back(std::move(c));
    }
    return out;
}

VertexSet periodic_points(const Endofunction& f) {
    VertexSet out;
    for (Element x = 1; x <= f.size(); ++x) {
        Element y = x;
        for (std::size_t k = 1; k <= f.size(); ++k) {
            y = f(y);
            if (y == x) {
                out.push_back(x);
                break;
            }
        }
    }
    return out;
}

std::size_t distance_to_core(const Endofunction& f, Element x) {
    const auto core = periodic_points(f);
    std::size_t d = 0;
    while (!std::binary_search(core.begin(), core.end(), x)) {
        x = f(x);
        ++d;
    }
    return d;
}

std::size_t cycles_in(const Endofunction& f, const VertexSet& set) {
    const auto core = periodic_points(f);
    std::vector<bool> seen(f.size() + 1, false);
    std::size_t count = 0;
    for (auto x : set) {
        if (seen[x] || !std::binary_search(core.begin(), core.end(), x)) continue;
        ++count;
        for (auto y = x; !seen[y]; y = f(y)) seen[y] = true;
    }
    return count;
}

int sign_by_inversions(const Endofunction& f) {
    if (!f.is_bijection()) return 0;
    std::size_t inversions = 0;
    for (Element i = 1; i <= f.size(); ++i) {
        for (Element j = i + 1; j <= f.size(); ++j) {
            if (f(i) > f(j)) ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

namespace {

std::vector<VertexSet> classes_from_labels(const std::vector<std::size_t>& label) {
    std::vector<VertexSet> out;
    std::vector<std::size_t> slot(label.size() + 1, label.size() + 1);
    for (std::size_t i = 1; i < label.size(); ++i) {
        if (slot[label[i]] == label.size() + 1) {
            slot[label[i]] = out.size();
            out.emplace_back();
        }
        out[slot[label[i]]].push_back(static_cast<Element>(i));
    }
    return out;
}

void merge(std::vector<std::size_t>& label, Element a, Element b, bool& changed) {
    const auto from = label[b];
    const auto to = label[a];
    if (from == to) return;
    for (auto& l : label) {
        if (l == from) l = to;
    }
    changed = true;
}

}  // namespace

std::vector<VertexSet> generated_congruence(const Endofunction& f,
                                            const std::vector<std::pair<Element, Element>>& pairs) {
    const auto n = f.size();
    std::vector<std::size_t> label(n + 1);
    for (std::size_t i = 0; i <= n; ++i) label[i] = i;
    bool changed = false;
    for (auto [a, b] : pairs) merge(label, a, b, changed);
    do {
        changed = false;
        for (Element x = 1; x <= n; ++x) {
            for (Element y = 1; y <= n; ++y) {
                if (label[x] == label[y] && label[f(x)] != label[f(y)]) merge(label, f(x), f(y), changed);
            }
        }
    } while (changed);
    return classes_from_labels(label);
}

std::vector<VertexSet> mutual_reachability_classes(const Endofunction& f) {
    const auto reach = reachability(f);
    const auto n = f.size();
    std::vector<std::size_t> label(n + 1);
    for (std::size_t i = 0; i <= n; ++i) label[i] = i;
    for (Element x = 1; x <= n; ++x) {
        for (Element y = 1; y < x; ++y) {
            if (reach[(x - 1) * n + (y - 1)] && reach[(y - 1) * n + (x - 1)]) {
                label[x] = label[y];
                break;
            }
        }
    }
    return classes_from_labels(label);
}

bool commutes(const Endofunction& f, const Endofunction& f2, const Table& table) {
    for (Element x = 1; x <= f.size(); ++x) {
        if (table[f(x) - 1] != f2(table[x - 1])) return false;
    }
    return true;
}

std::vector<Table> morphism_tables(const Endofunction& f, const Endofunction& f2) {
    std::vector<Table> out;
    Table table(f.size(), 1);
    const auto m = static_cast<Element>(f2.size());
    while (true) {
        if (commutes(f, f2, table)) out.push_back(table);
        std::size_t i = table.size();
        while (i > 0 && table[i - 1] == m) table[--i] = 1;
        if (i == 0) return out;
        ++table[i - 1];
    }
}

bool factors_through_identity(const Endofunction& dom, const Endofunction& cod, const Table& g,
                              std::size_t max_identity_size) {
    for (std::size_t k = 1; k <= max_identity_size; ++k) {
        const auto id = Endofunction::identity(k);
        const auto into = morphism_tables(dom, id);
        const auto out_of = morphism_tables(id, cod);
        for (const auto& a : into) {
            for (const auto& b : out_of) {
                bool equal = true;
                for (std::size_t x = 0; equal && x < g.size(); ++x) equal = b[a[x] - 1] == g[x];
                if (equal) return true;
            }
        }
    }
    return false;
}

Table winding_literal(const Endofunction& f) {
    const auto n = f.size();
    const auto steps = factorial(n);
    const auto core = periodic_points(f);
    Table out(n);
    for (Element x = 1; x <= n; ++x) {
        Element y = x;
        for (std::uint64_t t = 0; t < steps; ++t) y = f(y);
        // Step backwards along the cycle: the predecessor of y on the core.
        for (std::uint64_t t = 0; t < steps; ++t) {
            for (auto z : core) {
                if (f(z) == y) {
                    y = z;
                    break;
                }
            }
        }
        out[x - 1] = y;
    }
    return out;
}

bool is_forest_on_cycle(const Endofunction& f) {
    std::size_t nontrivial = 0;
    for (const auto& c : components_by_closure(f)) nontrivial += c.size() >= 2 ? 1 : 0;
    return nontrivial <= 1;
}

std::vector<std::vector<Endofunction>> disjoint_factorizations(const Endofunction& f, Disjointness mode,
                                                               ProductOrder order) {
    const auto n = f.size();
    std::vector<Endofunction> candidates;
    for (const auto& g : all_endofunctions(n)) {
        if (!g.is_identity() && is_forest_on_cycle(g)) candidates.push_back(g);
    }
    const auto closed_support = [n](const Endofunction& a) {
        std::vector<bool> in(n + 1, false);
        for (Element x = 1; x <= n; ++x) {
            if (a(x) != x) in[x] = in[a(x)] = true;
        }
        return in;
    };
    const auto disjoint = [&](const Endofunction& a, const Endofunction& b) {
        if (mode == Disjointness::pointwise) {
            for (Element x = 1; x <= n; ++x) {
                if (a(x) != x && b(x) != x) return false;
            }
            return true;
        }
        const auto sa = closed_support(a);
        const auto sb = closed_support(b);
        for (Element x = 1; x <= n; ++x) {
            if (sa[x] && sb[x]) return false;
        }
        return true;
    };

    std::vector<std::vector<Endofunction>> out;
    std::vector<Endofunction> chosen;
    std::function<void(std::size_t)> extend = [&](std::size_t start) {
        // Pointwise-disjoint maps need not commute, so look at every order.
        auto perm = chosen;
        bool any = false;
        bool all = true;
        do {
            auto product = Endofunction::identity(n);
            for (const auto& g : perm) product = compose(product, g);
            if (product == f) {
                any = true;
            } else {
                all = false;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (order == ProductOrder::some ? any : any && all) out.push_back(chosen);
        for (std::size_t i = start; i < candidates.size(); ++i) {
            if (std::all_of(chosen.begin(), chosen.end(),
                            [&](const Endofunction& g) { return disjoint(g, candidates[i]); })) {
                chosen.push_back(candidates[i]);
                extend(i + 1);
                chosen.pop_back();
            }
        }
    };
    extend(0);
    return out;
}

Endofunction figure_surrogate() {
    std::vector<Element> t(27);
    for (Element x = 1; x <= 6; ++x) t[x - 1] = x % 6 + 1;
    for (Element x = 7; x <= 10; ++x) t[x - 1] = x == 10 ? 7 : x + 1;
    t[10] = 1;
    for (Element x = 12; x <= 19; ++x) t[x - 1] = x - 1;
    for (Element x = 20; x <= 27; ++x) t[x - 1] = 7;
    return Endofunction(std::move(t));
}

std::vector<bool> reachability(const Endofunction& f) {
    const auto n = f.size();
    std::vector<bool> out(n * n, false);
    for (Element y = 1; y <= n; ++y) {
        Element x = y;
        // Walk until the orbit repeats; n steps cover every reachable point.
        for (std::size_t t = 0; t < n; ++t) {
            out[(x - 1) * n + (y - 1)] = true;
            x = f(x);
        }
    }
    return out;
}

}  // namespace endo::oracle
