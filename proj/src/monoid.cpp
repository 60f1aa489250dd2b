#include "endo/monoid.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "endo/errors.hpp"

namespace endo {

namespace {

void check_bound(std::size_t n, std::size_t bound, const char* what) {
    if (n > bound) {
        throw BoundExceeded(std::string(what) + ": n = " + std::to_string(n) + " exceeds bound " +
                            std::to_string(bound));
    }
}

bool in_extended_ideal(const Endofunction& g) { return g.is_identity() || !g.is_bijection(); }

Endofunction conjugate(const Endofunction& tau, const Endofunction& g) {
    return compose(compose(tau, g), inverse(tau));
}

}  // namespace

MonoidEnumeration enumerate(std::size_t n, std::size_t bound) {
    check_bound(n, bound, "enumerate");
    MonoidEnumeration out;
    out.n = n;
    out.all = all_endofunctions(n);
    for (const auto& f : out.all) {
        (f.is_bijection() ? out.units : out.ideal).push_back(f);
    }
    return out;
}

std::vector<Move> all_moves(std::size_t n) {
    std::vector<Move> out;
    for (Element x = 1; x <= n; ++x) {
        for (Element y = 1; y <= n; ++y) {
            if (x != y) out.emplace_back(n, x, y);
        }
    }
    return out;
}

std::vector<Endofunction> alternating_group(std::size_t n, std::size_t bound) {
    std::vector<Endofunction> out;
    for (const auto& f : enumerate(n, bound).units) {
        if (sign(f) == Sign::positive) out.push_back(f);
    }
    return out;
}

Move conjugate_move(const Endofunction& sigma, const Move& mv) {
    if (!sigma.is_bijection()) {
        throw std::invalid_argument("conjugate_move: sigma is not a bijection");
    }
    if (sigma.size() != mv.size()) {
        throw std::invalid_argument("conjugate_move: size mismatch");
    }
    return Move(mv.size(), sigma(mv.source()), sigma(mv.target()));
}

SemidirectElement::SemidirectElement(Endofunction g, Endofunction tau) : g_(std::move(g)), tau_(std::move(tau)) {
    if (g_.size() != tau_.size()) {
        throw std::invalid_argument("semidirect element: size mismatch");
    }
    if (!in_extended_ideal(g_)) {
        throw std::invalid_argument("semidirect element: g is a non-identity bijection");
    }
    if (!tau_.is_bijection()) {
        throw std::invalid_argument("semidirect element: tau is not a bijection");
    }
}

SemidirectElement SemidirectElement::one(std::size_t n) { return {identity(n), identity(n)}; }

SemidirectElement semidirect_compose(const SemidirectElement& x, const SemidirectElement& y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("semidirect_compose: size mismatch");
    }
    return {compose(x.g(), conjugate(x.tau(), y.g())), compose(x.tau(), y.tau())};
}

Endofunction psi(const SemidirectElement& x) { return compose(x.g(), x.tau()); }

std::vector<SemidirectElement> psi_fiber(const Endofunction& f, std::size_t bound) {
    const auto monoid = enumerate(f.size(), bound);
    std::vector<SemidirectElement> out;
    for (const auto& tau : monoid.units) {
        // g tau = f forces g = f tau^-1.
        auto g = compose(f, inverse(tau));
        if (in_extended_ideal(g)) out.emplace_back(std::move(g), tau);
    }
    return out;
}

std::vector<Endofunction> closure(const std::vector<Endofunction>& generators, std::size_t bound) {
    if (generators.empty()) return {};
    const auto n = generators.front().size();
    check_bound(n, bound, "closure");
    for (const auto& g : generators) {
        if (g.size() != n) throw std::invalid_argument("closure: generators of mixed sizes");
    }
    std::unordered_set<Endofunction, EndofunctionHash> seen;
    std::vector<Endofunction> worklist;
    for (const auto& g : generators) {
        if (seen.insert(g).second) worklist.push_back(g);
    }
    // Every product of generators is reached by right-multiplying by one
    // generator at a time.
    while (!worklist.empty()) {
        const auto x = worklist.back();
        worklist.pop_back();
        for (const auto& g : generators) {
            auto product = compose(x, g);
            if (seen.insert(product).second) worklist.push_back(std::move(product));
        }
    }
    std::vector<Endofunction> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

Endofunction swap_first_two(std::size_t n) {
    if (n < 2) throw std::invalid_argument("swap_first_two: needs n >= 2");
    return Transposition(n, 1, 2).to_endofunction();
}

NestedSemidirectElement::NestedSemidirectElement(Endofunction g, Endofunction a, Endofunction t)
    : g_(std::move(g)), a_(std::move(a)), t_(std::move(t)) {
    if (g_.size() != a_.size() || a_.size() != t_.size()) {
        throw std::invalid_argument("nested semidirect element: size mismatch");
    }
    if (g_.size() < 2) {
        throw std::invalid_argument("nested semidirect element: needs n >= 2");
    }
    if (!in_extended_ideal(g_)) {
        throw std::invalid_argument("nested semidirect element: g is a non-identity bijection");
    }
    if (sign(a_) != Sign::positive) {
        throw std::invalid_argument("nested semidirect element: a is not an even permutation");
    }
    if (!t_.is_identity() && t_ != swap_first_two(t_.size())) {
        throw std::invalid_argument("nested semidirect element: t is neither the identity nor (1 2)");
    }
}

NestedSemidirectElement NestedSemidirectElement::one(std::size_t n) { return {identity(n), identity(n), identity(n)}; }

NestedSemidirectElement nested_compose(const NestedSemidirectElement& x, const NestedSemidirectElement& y) {
    // t acts on (g', a') componentwise by conjugation, then the inner
    // product is the semidirect law of I'_n x| A_n.
    const auto g2 = conjugate(x.t(), y.g());
    const auto a2 = conjugate(x.t(), y.a());
    return {compose(x.g(), conjugate(x.a(), g2)), compose(x.a(), a2), compose(x.t(), y.t())};
}

Endofunction nested_project(const NestedSemidirectElement& x) { return compose(x.g(), compose(x.a(), x.t())); }

Sign nested_sign(const NestedSemidirectElement& x) {
    const Sign iota = x.g().is_identity() ? Sign::positive : Sign::zero;
    const Sign alpha = Sign::positive;
    const Sign tau = x.t().is_identity() ? Sign::positive : Sign::negative;
    return iota * alpha * tau;
}

std::vector<std::vector<std::size_t>> idempotent_endomorphisms(std::size_t n) {
    check_bound(n, 2, "idempotent_endomorphisms");
    const auto elements = all_endofunctions(n);
    const auto count = elements.size();
    std::map<Endofunction, std::size_t> index;
    for (std::size_t i = 0; i < count; ++i) index.emplace(elements[i], i);

    std::vector<std::vector<std::size_t>> product(count, std::vector<std::size_t>(count));
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) product[a][b] = index.at(compose(elements[a], elements[b]));
    }
    const auto one = index.at(identity(n));

    std::vector<std::vector<std::size_t>> found;
    std::vector<std::size_t> phi(count, 0);
    while (true) {
        bool ok = phi[one] == one;
        for (std::size_t a = 0; ok && a < count; ++a) {
            ok = phi[phi[a]] == phi[a];
            for (std::size_t b = 0; ok && b < count; ++b) ok = phi[product[a][b]] == product[phi[a]][phi[b]];
        }
        if (ok) found.push_back(phi);
        std::size_t i = count;
        while (i > 0 && phi[i - 1] == count - 1) phi[--i] = 0;
        if (i == 0) break;
        ++phi[i - 1];
    }
    return found;
}

std::vector<std::vector<std::size_t>> idempotent_endomorphisms_onto_units(std::size_t n) {
    const auto elements = all_endofunctions(n);
    std::vector<std::size_t> units;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i].is_bijection()) units.push_back(i);
    }
    std::vector<std::vector<std::size_t>> out;
    for (auto& phi : idempotent_endomorphisms(n)) {
        auto image = phi;
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        if (image == units) out.push_back(std::move(phi));
    }
    return out;
}

}  // namespace endo
