#pragma once

/**
 * @file category.hpp
 * @brief The category of finite sets with a self-map.
 *
 * Objects are pairs (X, f) with X = {1..n}; a morphism g: (X, f) -> (X', f')
 * is a map with g . f = f' . g. Bijection objects form the torsion class and
 * forest objects the torsion-free class; identity objects are both.
 *
 * A morphism is trivial when it factors through an identity object, which
 * happens exactly when it is constant on connected components and lands on
 * fixed points.
 *
 * Every object sits in a sequence core --eps--> X --pi--> X/~ where the core
 * is the set of cyclic points and ~ collapses each directed cycle to a
 * point. The universal properties here are verified by brute force against
 * every test object up to a stated size bound.
 */

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "endo/endofunction.hpp"

namespace endo {

inline constexpr std::size_t default_hom_bound = 1'000'000;

class MapObject {
public:
    MapObject(Endofunction f) : f_(std::move(f)) {}  // NOLINT(google-explicit-constructor)

    const Endofunction& self_map() const noexcept { return f_; }
    std::size_t size() const noexcept { return f_.size(); }

    bool is_torsion() const { return f_.is_bijection(); }
    bool is_torsion_free() const;

    bool operator==(const MapObject&) const = default;

private:
    Endofunction f_;
};

class Morphism {
public:
    /// Throws std::invalid_argument if the table is malformed or the square
    /// does not commute.
    Morphism(MapObject dom, MapObject cod, std::vector<Element> table);

    static Morphism identity(const MapObject& obj);

    const MapObject& dom() const noexcept { return dom_; }
    const MapObject& cod() const noexcept { return cod_; }
    std::span<const Element> table() const noexcept { return table_; }

    Element operator()(Element x) const noexcept { return table_[x - 1]; }

    bool is_injective() const;
    bool is_surjective() const;

    bool operator==(const Morphism&) const = default;

private:
    MapObject dom_;
    MapObject cod_;
    std::vector<Element> table_;
};

/// outer . inner; throws std::invalid_argument unless cod(inner) == dom(outer).
Morphism compose(const Morphism& outer, const Morphism& inner);

/// Partition of {1..n} into classes, sorted by minimum element.
class Congruence {
public:
    /// Throws std::invalid_argument unless classes partition {1..n}.
    Congruence(std::size_t n, std::vector<VertexSet> classes);

    static Congruence equality(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    const std::vector<VertexSet>& classes() const noexcept { return classes_; }

    /// 0-based index of the class containing x.
    std::size_t class_of(Element x) const noexcept { return label_[x - 1]; }

    /// x ~ y implies f(x) ~ f(y).
    bool compatible_with(const Endofunction& f) const;

    bool operator==(const Congruence& other) const { return classes_ == other.classes_; }

private:
    std::size_t n_;
    std::vector<VertexSet> classes_;
    std::vector<std::size_t> label_;
};

struct QuotientObject {
    MapObject object;
    Morphism projection;
};

struct TorsionPart {
    MapObject object;
    Morphism embedding;
};

struct PreexactSequence {
    Morphism torsion;
    Morphism quotient;
};

/// Throws std::invalid_argument if the table has the wrong length or
/// entries outside the codomain.
bool is_morphism(const MapObject& dom, const MapObject& cod, std::span<const Element> table);

/// Every morphism dom -> cod, lexicographic by table. Throws BoundExceeded
/// if cod.size()^dom.size() > bound.
std::vector<Morphism> hom_set(const MapObject& dom, const MapObject& cod, std::size_t bound = default_hom_bound);

/// Tables of hom_set(dom, cod) without building Morphism values.
std::vector<std::vector<Element>> hom_tables(const MapObject& dom, const MapObject& cod,
                                             std::size_t bound = default_hom_bound);

bool is_trivial_morphism(const Morphism& g);

/// Classes are the directed cycles; off-cycle points are singletons.
Congruence cycle_congruence(const MapObject& obj);

/// Classes renumbered 1..k by ascending minimum. Throws
/// std::invalid_argument if cong is incompatible with obj.
QuotientObject quotient(const MapObject& obj, const Congruence& cong);

/// The cyclic core renumbered ascending, with its inclusion.
TorsionPart torsion_part(const MapObject& obj);

PreexactSequence preexact_sequence(const MapObject& obj);

/// Outcome of a bounded universal-property check.
struct UniversalCheck {
    bool holds = false;
    /// Test objects Y range over every object of size 1..test_bound.
    std::size_t test_bound = 0;
    std::size_t objects_tested = 0;
    std::size_t morphisms_tested = 0;
    /// Empty when holds.
    std::string failure;

    explicit operator bool() const noexcept { return holds; }
};

/// k: K -> X is a prekernel of g: X -> X' relative to test objects of size
/// at most test_bound. Throws std::invalid_argument if cod(k) != dom(g).
UniversalCheck prekernel_check(const Morphism& k, const Morphism& g, std::size_t test_bound);

/// p: X' -> P is a precokernel of g: X -> X' relative to test objects of
/// size at most test_bound.
UniversalCheck precokernel_check(const Morphism& g, const Morphism& p, std::size_t test_bound);

/// Restriction of g to the cyclic cores.
Morphism functor_R(const Morphism& g);

/// Map induced by g on the cycle-congruence quotients.
Morphism functor_C(const Morphism& g);

/// Least k >= height(f) that is a multiple of the order of f on its core.
std::uint64_t winding_exponent(const MapObject& obj);

/// x -> sigma^-k(f^k(x)) into the torsion part, sigma = f restricted to the
/// core and k = winding_exponent(obj).
Morphism winding_morphism(const MapObject& obj);

enum class AdjunctionSide {
    /// Unit w: X -> R(X), targets are bijection objects.
    reflective_torsion,
    /// Counit eps: R(X) -> X, sources are bijection objects.
    coreflective_torsion,
    /// Unit pi: X -> C(X), targets are forest objects.
    reflective_torsion_free,
};

struct AdjunctionCheck {
    bool holds = false;
    /// |Hom(obj, target)| (or |Hom(target, obj)| for the coreflective side).
    std::size_t hom_count = 0;
    /// Size of the hom-set through the unit or counit object.
    std::size_t factored_count = 0;
    std::string failure;

    explicit operator bool() const noexcept { return holds; }
};

/// Every morphism factors uniquely through the unit (or counit), and the two
/// hom-sets have equal size. Throws std::invalid_argument if target is not
/// in the subcategory the side requires.
AdjunctionCheck adjunction_check(const MapObject& obj, const MapObject& target, AdjunctionSide side);

/// True when no forest object of size <= bound maps into target.
bool no_morphism_from_forests(const MapObject& target, std::size_t bound);

enum class PretorsionClass { torsion, torsion_free, trivial, neither };

struct PretorsionCharacterization {
    PretorsionClass kind = PretorsionClass::neither;
    /// Hom(obj, F) is all trivial for every forest F of size <= bound.
    bool torsion_test = false;
    /// Hom(C, obj) is all trivial for every bijection C of size <= bound.
    bool torsion_free_test = false;
    std::size_t bound = 0;
};

inline constexpr std::size_t max_characterization_bound = 4;

/// Classifies obj purely through hom-set triviality. Throws BoundExceeded
/// if bound > max_characterization_bound.
PretorsionCharacterization pretorsion_characterization(const MapObject& obj, std::size_t bound);

std::string to_string(PretorsionClass kind);

}  // namespace endo
