#include "endo/cli/text.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "endo/errors.hpp"
#include "endo/structure.hpp"

namespace endo::cli {

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    bool accept(char c) {
        if (peek() != c) return false;
        advance();
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(fmt::format("expected '{}', found {}", c, describe_next()));
    }

    bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    /// Position of the next character, for diagnostics raised later.
    struct Mark {
        std::size_t line;
        std::size_t column;
    };
    Mark mark() const { return {line_, column_}; }

    std::size_t read_number() {
        if (!at_digit()) fail(fmt::format("expected a number, found {}", describe_next()));
        const auto start = mark();
        std::size_t value = 0;
        while (at_digit()) {
            value = value * 10 + static_cast<std::size_t>(peek() - '0');
            if (value > max_parse_size) throw ParseError("number too large", start.line, start.column);
            advance();
        }
        return value;
    }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, column_); }

    std::string describe_next() const {
        if (at_end()) return "end of input";
        return fmt::format("'{}'", peek());
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

[[noreturn]] void fail_at(Scanner::Mark at, const std::string& message) {
    throw ParseError(message, at.line, at.column);
}

Endofunction parse_table(Scanner& in, std::size_t n) {
    std::vector<Element> table;
    while (true) {
        in.skip_space();
        if (in.at_end()) break;
        const auto at = in.mark();
        const auto value = in.read_number();
        if (!in.at_end() && !std::isspace(static_cast<unsigned char>(in.peek()))) {
            in.fail(fmt::format("unexpected {} after image", in.describe_next()));
        }
        if (value < 1 || value > n) fail_at(at, fmt::format("image {} out of range 1..{}", value, n));
        if (table.size() == n) fail_at(at, fmt::format("more than {} images", n));
        table.push_back(static_cast<Element>(value));
    }
    if (table.size() != n) in.fail(fmt::format("expected {} images, found {}", n, table.size()));
    return Endofunction(std::move(table));
}

struct Assignment {
    std::size_t source;
    std::size_t target;
    Scanner::Mark at;
};

Endofunction parse_cycles(Scanner& in, std::optional<std::size_t> declared) {
    std::vector<Assignment> assignments;
    std::size_t largest = 0;
    const auto point = [&](Scanner::Mark at, std::size_t value) {
        if (value < 1) fail_at(at, "point 0 out of range (points start at 1)");
        if (declared && value > *declared) fail_at(at, fmt::format("point {} out of range 1..{}", value, *declared));
        largest = std::max(largest, value);
        return value;
    };

    in.skip_space();
    if (in.at_end()) in.fail("expected '('");
    while (!in.at_end()) {
        in.expect('(');
        in.skip_space();
        auto at = in.mark();
        const auto first = point(at, in.read_number());
        in.skip_space();
        if (in.accept('-')) {
            in.expect('>');
            in.skip_space();
            const auto target_at = in.mark();
            const auto target = point(target_at, in.read_number());
            assignments.push_back({first, target, at});
            in.skip_space();
            in.expect(')');
        } else {
            std::vector<std::pair<std::size_t, Scanner::Mark>> cycle{{first, at}};
            while (!in.accept(')')) {
                if (!in.at_digit()) in.fail(fmt::format("expected a number or ')', found {}", in.describe_next()));
                at = in.mark();
                cycle.emplace_back(point(at, in.read_number()), at);
                in.skip_space();
            }
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                assignments.push_back({cycle[i].first, cycle[(i + 1) % cycle.size()].first, cycle[i].second});
            }
        }
        in.skip_space();
    }

    const auto n = declared.value_or(largest);
    std::vector<Element> table(n, 0);
    for (const auto& a : assignments) {
        if (table[a.source - 1] != 0) fail_at(a.at, fmt::format("point {} assigned twice", a.source));
        table[a.source - 1] = static_cast<Element>(a.target);
    }
    for (Element x = 1; x <= n; ++x) {
        if (table[x - 1] == 0) table[x - 1] = x;
    }
    return Endofunction(std::move(table));
}

}  // namespace

Endofunction parse_endofunction(std::string_view text) {
    Scanner in(text);
    in.skip_space();
    std::optional<std::size_t> declared;
    if (in.at_digit()) {
        const auto at = in.mark();
        declared = in.read_number();
        in.skip_space();
        in.expect(':');
        if (*declared == 0) fail_at(at, "size must be at least 1");
    } else if (in.peek() != '(') {
        in.fail(fmt::format("expected 'n:' or '(', found {}", in.describe_next()));
    }
    in.skip_space();
    if (in.peek() == '(') return parse_cycles(in, declared);
    return parse_table(in, *declared);
}

std::string to_table_text(const Endofunction& f) {
    return fmt::format("{}: {}", f.size(), fmt::join(f.images(), " "));
}

std::string to_cycle_text(const Endofunction& f) {
    const auto n = f.size();
    const auto core = cyclic_core(f);
    std::vector<bool> on_core(n + 1, false);
    for (auto x : core) on_core[x] = true;

    std::string out;
    bool mentions_n = false;
    std::vector<bool> seen(n + 1, false);
    for (auto start : core) {
        if (seen[start] || f(start) == start) continue;
        std::vector<Element> cycle;
        for (Element x = start; !seen[x]; x = f(x)) {
            seen[x] = true;
            cycle.push_back(x);
            mentions_n = mentions_n || x == n;
        }
        out += fmt::format("({})", fmt::join(cycle, " "));
    }
    for (Element x = 1; x <= n; ++x) {
        if (on_core[x]) continue;
        out += fmt::format("({}->{})", x, f(x));
        mentions_n = mentions_n || x == n || f(x) == n;
    }
    if (!mentions_n) out += fmt::format("({})", n);
    return out;
}

std::string to_string(const Factor& factor) {
    if (const auto* mv = std::get_if<Move>(&factor)) return fmt::format("m({},{})", mv->source(), mv->target());
    const auto& t = std::get<Transposition>(factor);
    return fmt::format("({} {})", t.first(), t.second());
}

std::string to_string(const GeneratorWord& word) {
    if (word.factors.empty()) return "id";
    std::vector<std::string> parts;
    for (const auto& factor : word.factors) parts.push_back(to_string(factor));
    return fmt::format("{}", fmt::join(parts, " "));
}

}  // namespace endo::cli
