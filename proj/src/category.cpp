#include "endo/category.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "endo/errors.hpp"
#include "endo/structure.hpp"

namespace endo {

namespace {

using Table = std::vector<Element>;

std::string table_text(std::span<const Element> table) {
    std::string out = "[";
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(table[i]);
    }
    return out + "]";
}

void check_hom_bound(std::size_t dom_size, std::size_t cod_size, std::size_t bound) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < dom_size; ++i) {
        if (count > bound / cod_size) {
            throw BoundExceeded("hom_set: " + std::to_string(cod_size) + "^" + std::to_string(dom_size) +
                                " tables exceed bound " + std::to_string(bound));
        }
        count *= cod_size;
    }
    if (count > bound) {
        throw BoundExceeded("hom_set: table count exceeds bound " + std::to_string(bound));
    }
}

bool commutes(const Endofunction& f, const Endofunction& f2, std::span<const Element> table) {
    for (Element x = 1; x <= f.size(); ++x) {
        if (table[f(x) - 1] != f2(table[x - 1])) return false;
    }
    return true;
}

// Component labels of the domain are passed in so repeated checks against
// the same domain share them.
bool trivial_table(const std::vector<std::size_t>& dom_labels, const Endofunction& cod,
                   std::span<const Element> table) {
    std::vector<Element> value(dom_labels.size(), 0);
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto y = table[i];
        if (cod(y) != y) return false;
        auto& v = value[dom_labels[i]];
        if (v == 0) {
            v = y;
        } else if (v != y) {
            return false;
        }
    }
    return true;
}

Table compose_tables(std::span<const Element> outer, std::span<const Element> inner) {
    Table out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i] - 1];
    return out;
}

std::vector<Element> position_in(const VertexSet& set, std::size_t n) {
    std::vector<Element> pos(n + 1, 0);
    for (std::size_t i = 0; i < set.size(); ++i) pos[set[i]] = static_cast<Element>(i + 1);
    return pos;
}

std::uint64_t core_order(const Endofunction& f, const VertexSet& core) {
    std::uint64_t order = 1;
    std::vector<bool> seen(f.size() + 1, false);
    for (auto x : core) {
        if (seen[x]) continue;
        std::uint64_t length = 0;
        for (auto y = x; !seen[y]; y = f(y)) {
            seen[y] = true;
            ++length;
        }
        order = std::lcm(order, length);
    }
    return order;
}

// Counts, for each composite table, how many morphisms produce it.
using Multiplicity = std::map<Table, std::size_t>;

}  // namespace

bool MapObject::is_torsion_free() const { return is_forest(f_); }

Morphism::Morphism(MapObject dom, MapObject cod, std::vector<Element> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
    if (!is_morphism(dom_, cod_, table_)) {
        throw std::invalid_argument("morphism: table " + table_text(table_) + " does not commute with the self-maps");
    }
}

Morphism Morphism::identity(const MapObject& obj) {
    const auto id = endo::identity(obj.size());
    return {obj, obj, Table(id.images().begin(), id.images().end())};
}

bool Morphism::is_injective() const {
    std::vector<bool> hit(cod_.size() + 1, false);
    for (auto y : table_) {
        if (hit[y]) return false;
        hit[y] = true;
    }
    return true;
}

bool Morphism::is_surjective() const {
    std::vector<bool> hit(cod_.size() + 1, false);
    std::size_t count = 0;
    for (auto y : table_) {
        if (!hit[y]) {
            hit[y] = true;
            ++count;
        }
    }
    return count == cod_.size();
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
    if (inner.cod() != outer.dom()) {
        throw std::invalid_argument("compose: codomain of inner morphism differs from domain of outer");
    }
    return {inner.dom(), outer.cod(), compose_tables(outer.table(), inner.table())};
}

Congruence::Congruence(std::size_t n, std::vector<VertexSet> classes)
    : n_(n), classes_(std::move(classes)), label_(n, n) {
    for (auto& c : classes_) {
        if (c.empty()) throw std::invalid_argument("congruence: empty class");
        std::sort(c.begin(), c.end());
    }
    std::sort(classes_.begin(), classes_.end(), [](const VertexSet& a, const VertexSet& b) { return a[0] < b[0]; });
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        for (auto x : classes_[i]) {
            if (x < 1 || x > n) throw std::invalid_argument("congruence: element outside [1, n]");
            if (label_[x - 1] != n) throw std::invalid_argument("congruence: classes overlap");
            label_[x - 1] = i;
        }
    }
    if (std::find(label_.begin(), label_.end(), n) != label_.end()) {
        throw std::invalid_argument("congruence: classes do not cover [1, n]");
    }
}

Congruence Congruence::equality(std::size_t n) {
    std::vector<VertexSet> classes;
    for (Element x = 1; x <= n; ++x) classes.push_back({x});
    return {n, std::move(classes)};
}

bool Congruence::compatible_with(const Endofunction& f) const {
    if (f.size() != n_) return false;
    for (const auto& c : classes_) {
        for (auto x : c) {
            if (class_of(f(x)) != class_of(f(c.front()))) return false;
        }
    }
    return true;
}

bool is_morphism(const MapObject& dom, const MapObject& cod, std::span<const Element> table) {
    if (table.size() != dom.size()) {
        throw std::invalid_argument("is_morphism: table has " + std::to_string(table.size()) + " entries, domain has " +
                                    std::to_string(dom.size()));
    }
    for (auto y : table) {
        if (y < 1 || y > cod.size()) {
            throw std::invalid_argument("is_morphism: entry " + std::to_string(y) + " outside the codomain");
        }
    }
    return commutes(dom.self_map(), cod.self_map(), table);
}

std::vector<std::vector<Element>> hom_tables(const MapObject& dom, const MapObject& cod, std::size_t bound) {
    check_hom_bound(dom.size(), cod.size(), bound);
    const auto& f = dom.self_map();
    const auto& f2 = cod.self_map();
    const auto n = dom.size();
    const auto m = static_cast<Element>(cod.size());
    std::vector<std::vector<Element>> out;
    Table table(n, 1);
    while (true) {
        if (commutes(f, f2, table)) out.push_back(table);
        std::size_t i = n;
        while (i > 0 && table[i - 1] == m) table[--i] = 1;
        if (i == 0) break;
        ++table[i - 1];
    }
    return out;
}

std::vector<Morphism> hom_set(const MapObject& dom, const MapObject& cod, std::size_t bound) {
    std::vector<Morphism> out;
    for (auto& table : hom_tables(dom, cod, bound)) out.emplace_back(dom, cod, std::move(table));
    return out;
}

bool is_trivial_morphism(const Morphism& g) {
    return trivial_table(component_labels(g.dom().self_map()), g.cod().self_map(), g.table());
}

Congruence cycle_congruence(const MapObject& obj) {
    const auto& f = obj.self_map();
    const auto core = cyclic_core(f);
    std::vector<bool> on_cycle(f.size() + 1, false);
    for (auto x : core) on_cycle[x] = true;
    std::vector<bool> seen(f.size() + 1, false);
    std::vector<VertexSet> classes;
    for (Element x = 1; x <= f.size(); ++x) {
        if (seen[x]) continue;
        VertexSet c;
        if (on_cycle[x]) {
            for (auto y = x; !seen[y]; y = f(y)) {
                seen[y] = true;
                c.push_back(y);
            }
        } else {
            seen[x] = true;
            c.push_back(x);
        }
        classes.push_back(std::move(c));
    }
    return {f.size(), std::move(classes)};
}

QuotientObject quotient(const MapObject& obj, const Congruence& cong) {
    const auto& f = obj.self_map();
    if (cong.size() != f.size() || !cong.compatible_with(f)) {
        throw std::invalid_argument("quotient: congruence is not compatible with the self-map");
    }
    const auto& classes = cong.classes();
    std::vector<Element> induced(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        induced[i] = static_cast<Element>(cong.class_of(f(classes[i].front())) + 1);
    }
    Table projection(f.size());
    for (Element x = 1; x <= f.size(); ++x) projection[x - 1] = static_cast<Element>(cong.class_of(x) + 1);
    MapObject q{Endofunction(std::move(induced))};
    return {q, Morphism(obj, q, std::move(projection))};
}

TorsionPart torsion_part(const MapObject& obj) {
    const auto& f = obj.self_map();
    const auto core = cyclic_core(f);
    const auto pos = position_in(core, f.size());
    std::vector<Element> restricted(core.size());
    for (std::size_t i = 0; i < core.size(); ++i) restricted[i] = pos[f(core[i])];
    MapObject t{Endofunction(std::move(restricted))};
    return {t, Morphism(t, obj, Table(core.begin(), core.end()))};
}

PreexactSequence preexact_sequence(const MapObject& obj) {
    return {torsion_part(obj).embedding, quotient(obj, cycle_congruence(obj)).projection};
}

UniversalCheck prekernel_check(const Morphism& k, const Morphism& g, std::size_t test_bound) {
    if (k.cod() != g.dom()) {
        throw std::invalid_argument("prekernel_check: codomain of k differs from domain of g");
    }
    UniversalCheck result;
    result.test_bound = test_bound;
    if (!is_trivial_morphism(compose(g, k))) {
        result.failure = "g . k = " + table_text(compose(g, k).table()) + " is not trivial";
        return result;
    }
    const auto& x = g.dom();
    for (const auto& y_map : all_endofunctions_up_to(test_bound)) {
        const MapObject y{y_map};
        const auto y_labels = component_labels(y_map);
        Multiplicity through_k;
        for (const auto& l2 : hom_tables(y, k.dom())) ++through_k[compose_tables(k.table(), l2)];
        ++result.objects_tested;
        for (const auto& l : hom_tables(y, x)) {
            if (!trivial_table(y_labels, g.cod().self_map(), compose_tables(g.table(), l))) continue;
            ++result.morphisms_tested;
            const auto it = through_k.find(l);
            const auto count = it == through_k.end() ? 0 : it->second;
            if (count != 1) {
                result.failure = "l = " + table_text(l) + " from " + table_text(y_map.images()) + " has " +
                                 std::to_string(count) + " factorizations through k";
                return result;
            }
        }
    }
    result.holds = true;
    return result;
}

UniversalCheck precokernel_check(const Morphism& g, const Morphism& p, std::size_t test_bound) {
    if (g.cod() != p.dom()) {
        throw std::invalid_argument("precokernel_check: codomain of g differs from domain of p");
    }
    UniversalCheck result;
    result.test_bound = test_bound;
    if (!is_trivial_morphism(compose(p, g))) {
        result.failure = "p . g = " + table_text(compose(p, g).table()) + " is not trivial";
        return result;
    }
    const auto g_labels = component_labels(g.dom().self_map());
    for (const auto& y_map : all_endofunctions_up_to(test_bound)) {
        const MapObject y{y_map};
        Multiplicity through_p;
        for (const auto& h2 : hom_tables(p.cod(), y)) ++through_p[compose_tables(h2, p.table())];
        ++result.objects_tested;
        for (const auto& h : hom_tables(g.cod(), y)) {
            if (!trivial_table(g_labels, y_map, compose_tables(h, g.table()))) continue;
            ++result.morphisms_tested;
            const auto it = through_p.find(h);
            const auto count = it == through_p.end() ? 0 : it->second;
            if (count != 1) {
                result.failure = "h = " + table_text(h) + " into " + table_text(y_map.images()) + " has " +
                                 std::to_string(count) + " factorizations through p";
                return result;
            }
        }
    }
    result.holds = true;
    return result;
}

Morphism functor_R(const Morphism& g) {
    const auto source = torsion_part(g.dom());
    const auto target = torsion_part(g.cod());
    const auto target_pos = position_in(cyclic_core(g.cod().self_map()), g.cod().size());
    Table table(source.object.size());
    for (Element i = 1; i <= table.size(); ++i) {
        const auto image = g(source.embedding(i));
        if (target_pos[image] == 0) {
            throw std::logic_error("functor_R: morphism maps a cyclic point off the cyclic core");
        }
        table[i - 1] = target_pos[image];
    }
    return {source.object, target.object, std::move(table)};
}

Morphism functor_C(const Morphism& g) {
    const auto source_cong = cycle_congruence(g.dom());
    const auto source = quotient(g.dom(), source_cong);
    const auto target = quotient(g.cod(), cycle_congruence(g.cod()));
    const auto& classes = source_cong.classes();
    Table table(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) table[i] = target.projection(g(classes[i].front()));
    return {source.object, target.object, std::move(table)};
}

std::uint64_t winding_exponent(const MapObject& obj) {
    const auto& f = obj.self_map();
    const auto levels = level_partition(f);
    const auto order = core_order(f, levels.levels.front());
    return (levels.height + order - 1) / order * order;
}

Morphism winding_morphism(const MapObject& obj) {
    const auto& f = obj.self_map();
    const auto core = torsion_part(obj);
    const auto k = winding_exponent(obj);
    const auto fk = power(f, k);
    const auto unwind = inverse(power(core.object.self_map(), k));
    const auto pos = position_in(cyclic_core(f), f.size());
    Table table(f.size());
    for (Element x = 1; x <= f.size(); ++x) table[x - 1] = unwind(pos[fk(x)]);
    return {obj, core.object, std::move(table)};
}

AdjunctionCheck adjunction_check(const MapObject& obj, const MapObject& target, AdjunctionSide side) {
    AdjunctionCheck result;
    const bool needs_torsion = side != AdjunctionSide::reflective_torsion_free;
    if (needs_torsion && !target.is_torsion()) {
        throw std::invalid_argument("adjunction_check: target is not a bijection object");
    }
    if (!needs_torsion && !target.is_torsion_free()) {
        throw std::invalid_argument("adjunction_check: target is not a forest object");
    }

    std::vector<Table> direct;
    Multiplicity factored;
    switch (side) {
        case AdjunctionSide::reflective_torsion: {
            const auto w = winding_morphism(obj);
            direct = hom_tables(obj, target);
            const auto through = hom_tables(w.cod(), target);
            result.factored_count = through.size();
            for (const auto& t : through) ++factored[compose_tables(t, w.table())];
            break;
        }
        case AdjunctionSide::coreflective_torsion: {
            const auto eps = torsion_part(obj).embedding;
            direct = hom_tables(target, obj);
            const auto through = hom_tables(target, eps.dom());
            result.factored_count = through.size();
            for (const auto& t : through) ++factored[compose_tables(eps.table(), t)];
            break;
        }
        case AdjunctionSide::reflective_torsion_free: {
            const auto pi = quotient(obj, cycle_congruence(obj)).projection;
            direct = hom_tables(obj, target);
            const auto through = hom_tables(pi.cod(), target);
            result.factored_count = through.size();
            for (const auto& t : through) ++factored[compose_tables(t, pi.table())];
            break;
        }
    }
    result.hom_count = direct.size();
    for (const auto& phi : direct) {
        const auto it = factored.find(phi);
        const auto count = it == factored.end() ? 0 : it->second;
        if (count != 1) {
            result.failure = table_text(phi) + " has " + std::to_string(count) + " factorizations";
            return result;
        }
    }
    if (result.hom_count != result.factored_count) {
        result.failure = "hom-set sizes differ: " + std::to_string(result.hom_count) + " vs " +
                         std::to_string(result.factored_count);
        return result;
    }
    result.holds = true;
    return result;
}

bool no_morphism_from_forests(const MapObject& target, std::size_t bound) {
    for (const auto& f : all_endofunctions_up_to(bound)) {
        if (is_forest(f) && !hom_tables(f, target).empty()) return false;
    }
    return true;
}

PretorsionCharacterization pretorsion_characterization(const MapObject& obj, std::size_t bound) {
    if (bound > max_characterization_bound) {
        throw BoundExceeded("pretorsion_characterization: bound " + std::to_string(bound) + " exceeds " +
                            std::to_string(max_characterization_bound));
    }
    PretorsionCharacterization out;
    out.bound = bound;
    out.torsion_test = true;
    out.torsion_free_test = true;
    const auto obj_labels = component_labels(obj.self_map());
    for (const auto& t : all_endofunctions_up_to(bound)) {
        if (out.torsion_test && is_forest(t)) {
            for (const auto& table : hom_tables(obj, t)) {
                if (!trivial_table(obj_labels, t, table)) {
                    out.torsion_test = false;
                    break;
                }
            }
        }
        if (out.torsion_free_test && t.is_bijection()) {
            const auto t_labels = component_labels(t);
            for (const auto& table : hom_tables(t, obj)) {
                if (!trivial_table(t_labels, obj.self_map(), table)) {
                    out.torsion_free_test = false;
                    break;
                }
            }
        }
    }
    if (out.torsion_test && out.torsion_free_test) {
        out.kind = PretorsionClass::trivial;
    } else if (out.torsion_test) {
        out.kind = PretorsionClass::torsion;
    } else if (out.torsion_free_test) {
        out.kind = PretorsionClass::torsion_free;
    } else {
        out.kind = PretorsionClass::neither;
    }
    return out;
}

std::string to_string(PretorsionClass kind) {
    switch (kind) {
        case PretorsionClass::torsion: return "torsion";
        case PretorsionClass::torsion_free: return "torsion-free";
        case PretorsionClass::trivial: return "trivial";
        case PretorsionClass::neither: return "neither";
    }
    return "neither";
}

}  // namespace endo
