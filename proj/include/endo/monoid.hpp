#pragma once

/**
 * @file monoid.hpp
 * @brief The full transformation monoid M_n under composition.
 *
 * M_n splits as the symmetric group S_n (units) and the ideal I_n of
 * non-injective maps. I'_n is I_n with the identity adjoined; S_n acts on
 * it by conjugation, and the semidirect product I'_n x| S_n maps onto M_n
 * via (g, tau) -> g . tau.
 */

#include <cstddef>
#include <vector>

#include "endo/endofunction.hpp"
#include "endo/factorization.hpp"

namespace endo {

inline constexpr std::size_t default_enumeration_bound = 5;

struct MonoidEnumeration {
    std::size_t n = 0;
    std::vector<Endofunction> all;
    std::vector<Endofunction> units;
    std::vector<Endofunction> ideal;
};

/// Throws BoundExceeded if n > bound.
MonoidEnumeration enumerate(std::size_t n, std::size_t bound = default_enumeration_bound);

/// All n(n-1) moves m(x, y), ordered by (source, target).
std::vector<Move> all_moves(std::size_t n);

/// Even permutations of {1..n}, lexicographic.
std::vector<Endofunction> alternating_group(std::size_t n, std::size_t bound = default_enumeration_bound);

/// m(sigma(source), sigma(target)), which equals sigma . mv . sigma^-1.
/// Throws std::invalid_argument if sigma is not a bijection.
Move conjugate_move(const Endofunction& sigma, const Move& mv);

/// (g, tau) with g in I'_n and tau in S_n.
class SemidirectElement {
public:
    /// Throws std::invalid_argument on size mismatch, injective non-identity
    /// g, or non-bijective tau.
    SemidirectElement(Endofunction g, Endofunction tau);

    static SemidirectElement one(std::size_t n);

    const Endofunction& g() const noexcept { return g_; }
    const Endofunction& tau() const noexcept { return tau_; }
    std::size_t size() const noexcept { return g_.size(); }

    bool operator==(const SemidirectElement&) const = default;

private:
    Endofunction g_;
    Endofunction tau_;
};

/// (g, tau)(g', tau') = (g tau g' tau^-1, tau tau').
SemidirectElement semidirect_compose(const SemidirectElement& x, const SemidirectElement& y);

Endofunction psi(const SemidirectElement& x);

/// Every (g, tau) with g tau = f. Throws BoundExceeded if f.size() > bound.
std::vector<SemidirectElement> psi_fiber(const Endofunction& f, std::size_t bound = default_enumeration_bound);

/// Least composition-closed set containing the generators (no identity
/// adjoined), sorted. Worklist over a hash set. Throws BoundExceeded if
/// n > bound, std::invalid_argument on mixed sizes.
std::vector<Endofunction> closure(const std::vector<Endofunction>& generators,
                                  std::size_t bound = default_enumeration_bound);

/// ((g, a), t) in (I'_n x| A_n) x| <(1 2)>, n >= 2.
class NestedSemidirectElement {
public:
    NestedSemidirectElement(Endofunction g, Endofunction a, Endofunction t);

    static NestedSemidirectElement one(std::size_t n);

    const Endofunction& g() const noexcept { return g_; }
    const Endofunction& a() const noexcept { return a_; }
    const Endofunction& t() const noexcept { return t_; }

    bool operator==(const NestedSemidirectElement&) const = default;

private:
    Endofunction g_;
    Endofunction a_;
    Endofunction t_;
};

/// The transposition (1 2) on {1..n}.
Endofunction swap_first_two(std::size_t n);

NestedSemidirectElement nested_compose(const NestedSemidirectElement& x, const NestedSemidirectElement& y);

/// g . a . t
Endofunction nested_project(const NestedSemidirectElement& x);

/// iota(g) * alpha(a) * tau(t): 0 for g in I_n, and -1 exactly when t is
/// the transposition.
Sign nested_sign(const NestedSemidirectElement& x);

/// Exhaustive search over all self-maps of M_n for idempotent monoid
/// endomorphisms. Each result is an image table over indices into
/// all_endofunctions(n). Only n <= 2 is feasible; larger n throws
/// BoundExceeded.
std::vector<std::vector<std::size_t>> idempotent_endomorphisms(std::size_t n);

/// The idempotent endomorphisms whose image is exactly S_n.
std::vector<std::vector<std::size_t>> idempotent_endomorphisms_onto_units(std::size_t n);

}  // namespace endo
