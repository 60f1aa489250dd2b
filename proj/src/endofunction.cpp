#include "endo/endofunction.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace endo {

Endofunction::Endofunction(std::vector<Element> images) : images_(std::move(images)) {
    if (images_.empty()) {
        throw std::invalid_argument("endofunction needs n >= 1");
    }
    const auto n = images_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (images_[i] < 1 || images_[i] > n) {
            throw std::invalid_argument("image of " + std::to_string(i + 1) + " is " +
                                        std::to_string(images_[i]) + ", outside [1, " + std::to_string(n) +
                                        "]");
        }
    }
}

Endofunction::Endofunction(std::initializer_list<Element> images)
    : Endofunction(std::vector<Element>(images)) {}

Endofunction Endofunction::identity(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("identity needs n >= 1");
    }
    std::vector<Element> images(n);
    std::iota(images.begin(), images.end(), Element{1});
    return Endofunction(Unchecked{}, std::move(images));
}

Element Endofunction::at(Element x) const {
    if (x < 1 || x > size()) {
        throw std::out_of_range("element " + std::to_string(x) + " outside [1, " + std::to_string(size()) + "]");
    }
    return images_[x - 1];
}

bool Endofunction::is_bijection() const {
    std::vector<bool> hit(size() + 1, false);
    for (auto y : images_) {
        if (hit[y]) return false;
        hit[y] = true;
    }
    return true;
}

bool Endofunction::is_identity() const {
    for (std::size_t i = 0; i < size(); ++i) {
        if (images_[i] != i + 1) return false;
    }
    return true;
}

VertexSet Endofunction::image() const {
    VertexSet out(images_.begin(), images_.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Endofunction compose(const Endofunction& outer, const Endofunction& inner) {
    if (outer.size() != inner.size()) {
        throw std::invalid_argument("compose: size mismatch " + std::to_string(outer.size()) + " vs " +
                                    std::to_string(inner.size()));
    }
    std::vector<Element> images(inner.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        images[i] = outer.images_[inner.images_[i] - 1];
    }
    return Endofunction(Endofunction::Unchecked{}, std::move(images));
}

Endofunction power(const Endofunction& f, std::uint64_t k) {
    auto result = Endofunction::identity(f.size());
    auto base = f;
    while (k > 0) {
        if (k & 1U) result = compose(base, result);
        k >>= 1U;
        if (k > 0) base = compose(base, base);
    }
    return result;
}

Endofunction factorial_power(const Endofunction& f) {
    const auto n = f.size();
    if (n <= 20) {
        return power(f, factorial(n));
    }
    // n! is a multiple of every period and exceeds every tail.
    std::vector<Element> images(n);
    for (Element x = 1; x <= n; ++x) {
        const auto info = orbit_info(f, x);
        const auto steps = (info.tail + info.period - 1) / info.period * info.period;
        Element y = x;
        for (std::size_t t = 0; t < steps; ++t) y = f(y);
        images[x - 1] = y;
    }
    return Endofunction(std::move(images));
}

Endofunction inverse(const Endofunction& sigma) {
    if (!sigma.is_bijection()) {
        throw std::invalid_argument("inverse: map is not a bijection");
    }
    std::vector<Element> images(sigma.size());
    for (Element x = 1; x <= sigma.size(); ++x) {
        images[sigma(x) - 1] = x;
    }
    return Endofunction(Endofunction::Unchecked{}, std::move(images));
}

Classification classify(const Endofunction& f) {
    return f.is_bijection() ? Classification::bijection : Classification::non_injective;
}

OrbitInfo orbit_info(const Endofunction& f, Element x) {
    f.at(x);
    // first_seen[y] = step at which y was first reached, 0 meaning unseen.
    std::vector<std::size_t> first_seen(f.size() + 1, 0);
    std::size_t step = 1;
    Element y = x;
    while (first_seen[y] == 0) {
        first_seen[y] = step++;
        y = f(y);
    }
    OrbitInfo info;
    info.tail = first_seen[y] - 1;
    info.period = step - first_seen[y];
    return info;
}

std::uint64_t factorial(std::size_t n) {
    if (n > 20) {
        throw std::overflow_error("factorial: " + std::to_string(n) + "! does not fit in 64 bits");
    }
    std::uint64_t out = 1;
    for (std::size_t i = 2; i <= n; ++i) out *= i;
    return out;
}

void for_each_endofunction(std::size_t n, const std::function<void(const Endofunction&)>& visit) {
    if (n == 0) {
        throw std::invalid_argument("for_each_endofunction needs n >= 1");
    }
    std::vector<Element> images(n, 1);
    while (true) {
        visit(Endofunction(images));
        std::size_t i = n;
        while (i > 0 && images[i - 1] == n) {
            images[i - 1] = 1;
            --i;
        }
        if (i == 0) return;
        ++images[i - 1];
    }
}

std::vector<Endofunction> all_endofunctions(std::size_t n) {
    std::vector<Endofunction> out;
    for_each_endofunction(n, [&](const Endofunction& f) { out.push_back(f); });
    return out;
}

std::vector<Endofunction> all_endofunctions_up_to(std::size_t max_size) {
    std::vector<Endofunction> out;
    for (std::size_t n = 1; n <= max_size; ++n) {
        for_each_endofunction(n, [&](const Endofunction& f) { out.push_back(f); });
    }
    return out;
}

std::size_t EndofunctionHash::operator()(const Endofunction& f) const noexcept {
    // FNV-1a over the image table.
    std::size_t h = 14695981039346656037ULL;
    for (auto y : f.images()) {
        h ^= y;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace endo
