#include "endo/factorization.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "endo/structure.hpp"

namespace endo {

namespace {

void check_element(std::size_t n, Element x, const char* what) {
    if (x < 1 || x > n) {
        throw std::invalid_argument(std::string(what) + ": element " + std::to_string(x) + " outside [1, " +
                                    std::to_string(n) + "]");
    }
}

}  // namespace

Move::Move(std::size_t n, Element source, Element target) : n_(n), source_(source), target_(target) {
    check_element(n, source, "move");
    check_element(n, target, "move");
    if (source == target) {
        throw std::invalid_argument("move: source and target coincide");
    }
}

Endofunction Move::to_endofunction() const {
    std::vector<Element> images(n_);
    for (Element x = 1; x <= n_; ++x) images[x - 1] = x;
    images[source_ - 1] = target_;
    return Endofunction(std::move(images));
}

Transposition::Transposition(std::size_t n, Element a, Element b)
    : n_(n), a_(std::min(a, b)), b_(std::max(a, b)) {
    check_element(n, a, "transposition");
    check_element(n, b, "transposition");
    if (a == b) {
        throw std::invalid_argument("transposition: elements coincide");
    }
}

Endofunction Transposition::to_endofunction() const {
    std::vector<Element> images(n_);
    for (Element x = 1; x <= n_; ++x) images[x - 1] = x;
    images[a_ - 1] = b_;
    images[b_ - 1] = a_;
    return Endofunction(std::move(images));
}

Endofunction to_endofunction(const Factor& factor) {
    return std::visit([](const auto& g) { return g.to_endofunction(); }, factor);
}

std::vector<Endofunction> forest_on_cycle_factors(const Endofunction& f) {
    std::vector<Endofunction> out;
    for (const auto& component : components(f).components) {
        if (component.size() < 2) continue;
        std::vector<Element> images(f.size());
        for (Element x = 1; x <= f.size(); ++x) images[x - 1] = x;
        for (auto x : component) images[x - 1] = f(x);
        out.emplace_back(std::move(images));
    }
    return out;
}

bool are_disjoint(const Endofunction& f, const Endofunction& g) {
    if (f.size() != g.size()) {
        throw std::invalid_argument("are_disjoint: size mismatch");
    }
    for (Element x = 1; x <= f.size(); ++x) {
        if (f(x) != x && g(x) != x) return false;
    }
    return true;
}

bool are_support_disjoint(const Endofunction& f, const Endofunction& g) {
    if (f.size() != g.size()) {
        throw std::invalid_argument("are_support_disjoint: size mismatch");
    }
    std::vector<bool> in_f(f.size() + 1, false);
    for (Element x = 1; x <= f.size(); ++x) {
        if (f(x) != x) in_f[x] = in_f[f(x)] = true;
    }
    for (Element x = 1; x <= g.size(); ++x) {
        if (g(x) != x && (in_f[x] || in_f[g(x)])) return false;
    }
    return true;
}

GeneratorWord moves_transpositions(const Endofunction& f) {
    const auto n = f.size();
    const auto levels = level_partition(f);
    GeneratorWord word;
    word.n = n;
    word.core_size = levels.levels.front().size();

    for (auto level = levels.levels.size(); level-- > 1;) {
        for (auto x : levels.levels[level]) word.factors.emplace_back(Move(n, x, f(x)));
    }
    word.move_count = word.factors.size();

    std::vector<bool> seen(n + 1, false);
    for (auto start : levels.levels.front()) {
        if (seen[start]) continue;
        std::vector<Element> cycle;
        for (auto y = start; !seen[y]; y = f(y)) {
            seen[y] = true;
            cycle.push_back(y);
        }
        for (auto k = cycle.size(); k-- > 1;) word.factors.emplace_back(Transposition(n, cycle.front(), cycle[k]));
    }
    word.transposition_count = word.factors.size() - word.move_count;
    return word;
}

Endofunction evaluate_word(std::size_t n, const std::vector<Factor>& factors) {
    auto result = Endofunction::identity(n);
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        const auto g = to_endofunction(*it);
        if (g.size() != n) {
            throw std::invalid_argument("evaluate_word: factor of size " + std::to_string(g.size()) +
                                        " in a word over n = " + std::to_string(n));
        }
        result = compose(g, result);
    }
    return result;
}

Endofunction evaluate_word(const GeneratorWord& word) { return evaluate_word(word.n, word.factors); }

Endofunction moves_part(const GeneratorWord& word) {
    std::vector<Factor> moves;
    for (const auto& factor : word.factors) {
        if (std::holds_alternative<Move>(factor)) moves.push_back(factor);
    }
    return evaluate_word(word.n, moves);
}

Endofunction permutation_part(const GeneratorWord& word) {
    std::vector<Factor> transpositions;
    for (const auto& factor : word.factors) {
        if (std::holds_alternative<Transposition>(factor)) transpositions.push_back(factor);
    }
    return evaluate_word(word.n, transpositions);
}

Sign sign(const Endofunction& f) {
    if (!f.is_bijection()) return Sign::zero;
    std::size_t cycles = 0;
    std::vector<bool> seen(f.size() + 1, false);
    for (Element x = 1; x <= f.size(); ++x) {
        if (seen[x]) continue;
        ++cycles;
        for (auto y = x; !seen[y]; y = f(y)) seen[y] = true;
    }
    return (f.size() - cycles) % 2 == 0 ? Sign::positive : Sign::negative;
}

}  // namespace endo
