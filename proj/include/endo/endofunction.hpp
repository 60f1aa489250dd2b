#pragma once

/**
 * @file endofunction.hpp
 * @brief Self-maps of the finite set {1, ..., n}.
 *
 * An Endofunction is an immutable image table: entry i holds f(i). Elements
 * are 1-indexed everywhere, including serialization.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace endo {

using Element = std::uint32_t;

/// Sorted ascending list of elements.
using VertexSet = std::vector<Element>;

class Endofunction {
public:
    /// Throws std::invalid_argument unless images is nonempty with every
    /// entry in [1, images.size()].
    explicit Endofunction(std::vector<Element> images);
    Endofunction(std::initializer_list<Element> images);

    static Endofunction identity(std::size_t n);

    std::size_t size() const noexcept { return images_.size(); }

    /// f(x) for x in [1, n]. Unchecked.
    Element operator()(Element x) const noexcept { return images_[x - 1]; }

    /// Bounds-checked f(x); throws std::out_of_range.
    Element at(Element x) const;

    std::span<const Element> images() const noexcept { return images_; }

    bool is_bijection() const;
    bool is_identity() const;

    /// Set of values f(x); sorted ascending.
    VertexSet image() const;

    bool operator==(const Endofunction&) const = default;
    auto operator<=>(const Endofunction&) const = default;

private:
    struct Unchecked {};
    Endofunction(Unchecked, std::vector<Element> images) : images_(std::move(images)) {}

    friend Endofunction compose(const Endofunction&, const Endofunction&);
    friend Endofunction inverse(const Endofunction&);

    std::vector<Element> images_;
};

enum class Classification { bijection, non_injective };

/// Tail length and cycle length of the forward orbit of a point.
struct OrbitInfo {
    std::size_t tail = 0;
    std::size_t period = 1;

    bool operator==(const OrbitInfo&) const = default;
};

inline Endofunction identity(std::size_t n) { return Endofunction::identity(n); }

/// (outer . inner)(x) = outer(inner(x)). Throws std::invalid_argument on
/// size mismatch.
Endofunction compose(const Endofunction& outer, const Endofunction& inner);

/// f^k by repeated squaring; f^0 is the identity.
Endofunction power(const Endofunction& f, std::uint64_t k);

/// f^(n!) where n = f.size(). For n > 20 an equivalent exponent is used:
/// any multiple of the cycle-length lcm that is at least n.
Endofunction factorial_power(const Endofunction& f);

/// Inverse of a bijection; throws std::invalid_argument otherwise.
Endofunction inverse(const Endofunction& sigma);

Classification classify(const Endofunction& f);

/// Throws std::out_of_range if x is not in [1, n].
OrbitInfo orbit_info(const Endofunction& f, Element x);

/// n! for n <= 20; throws std::overflow_error above.
std::uint64_t factorial(std::size_t n);

/// Calls visit on every endofunction of size n in lexicographic order of
/// image tables.
void for_each_endofunction(std::size_t n, const std::function<void(const Endofunction&)>& visit);

/// All n^n endofunctions in lexicographic order.
std::vector<Endofunction> all_endofunctions(std::size_t n);

/// All endofunctions of sizes 1..max_size, grouped by size.
std::vector<Endofunction> all_endofunctions_up_to(std::size_t max_size);

struct EndofunctionHash {
    std::size_t operator()(const Endofunction& f) const noexcept;
};

}  // namespace endo
