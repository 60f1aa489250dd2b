#pragma once

/**
 * @file factorization.hpp
 * @brief Factorizations of endofunctions.
 *
 * Two canonical factorizations are provided:
 *  - one factor per nontrivial connected component (each factor a forest on
 *    a cycle, pairwise disjoint, hence commuting);
 *  - a word of moves followed by transpositions, where the moves carry the
 *    points off the cyclic core one level down and the transpositions
 *    realize the permutation of the core.
 *
 * Words are evaluated right to left: the last factor acts first.
 */

#include <cstddef>
#include <variant>
#include <vector>

#include "endo/endofunction.hpp"

namespace endo {

/// m(source, target): sends source to target and fixes everything else.
class Move {
public:
    /// Throws std::invalid_argument if source == target or either is out of
    /// [1, n].
    Move(std::size_t n, Element source, Element target);

    std::size_t size() const noexcept { return n_; }
    Element source() const noexcept { return source_; }
    Element target() const noexcept { return target_; }

    Endofunction to_endofunction() const;

    bool operator==(const Move&) const = default;

private:
    std::size_t n_;
    Element source_;
    Element target_;
};

/// (a b) with a < b after construction.
class Transposition {
public:
    Transposition(std::size_t n, Element a, Element b);

    std::size_t size() const noexcept { return n_; }
    Element first() const noexcept { return a_; }
    Element second() const noexcept { return b_; }

    Endofunction to_endofunction() const;

    bool operator==(const Transposition&) const = default;

private:
    std::size_t n_;
    Element a_;
    Element b_;
};

using Factor = std::variant<Move, Transposition>;

Endofunction to_endofunction(const Factor& factor);

struct GeneratorWord {
    std::size_t n = 0;
    std::vector<Factor> factors;
    /// Size of the cyclic core.
    std::size_t core_size = 0;
    std::size_t move_count = 0;
    std::size_t transposition_count = 0;
};

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

inline Sign operator*(Sign a, Sign b) { return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b)); }
inline int to_int(Sign s) { return static_cast<int>(s); }

/// One factor per connected component with at least two vertices, ordered
/// by the component's minimum element. The identity gives an empty list.
std::vector<Endofunction> forest_on_cycle_factors(const Endofunction& f);

/// Every point is fixed by f or by g. Throws std::invalid_argument on size
/// mismatch.
///
/// This pointwise notion does not imply commuting: m(1,2) = [2,2] and
/// m(2,1) = [1,1] are disjoint, yet composing them in the two orders gives
/// [2,2] and [1,1].
bool are_disjoint(const Endofunction& f, const Endofunction& g);

/// The closed supports {x, f(x) : f(x) != x} of f and g do not meet.
/// Implies are_disjoint, and such maps commute.
bool are_support_disjoint(const Endofunction& f, const Endofunction& g);

/// Moves by level from the top level down to level 1 (sources ascending
/// within a level), then the core permutation split into transpositions:
/// cycle (c1 c2 ... ck) with c1 minimal becomes (c1 ck)(c1 ck-1)...(c1 c2),
/// cycles by ascending minimum.
GeneratorWord moves_transpositions(const Endofunction& f);

/// Right-to-left product of the factors; an empty word is the identity.
/// Throws std::invalid_argument if a factor's size differs from n.
Endofunction evaluate_word(std::size_t n, const std::vector<Factor>& factors);
Endofunction evaluate_word(const GeneratorWord& word);

/// Product of the moves of the word (the non-permutation part).
Endofunction moves_part(const GeneratorWord& word);
/// Product of the transpositions of the word (the core permutation).
Endofunction permutation_part(const GeneratorWord& word);

/// 0 on non-injective maps, otherwise the parity of the permutation.
Sign sign(const Endofunction& f);

}  // namespace endo
