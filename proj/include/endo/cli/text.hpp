#pragma once

/**
 * @file text.hpp
 * @brief Reading and writing endofunctions as text.
 *
 * Two grammars are accepted:
 *
 *   table form   "4: 2 3 1 1"       images of 1..n in order
 *   cycle form   "(1 2 3)(4->1)"    cycles and single assignments a->b;
 *                                   points never mentioned are fixed
 *
 * The cycle form may carry an "n:" prefix. Without one, n is the largest
 * point mentioned. Whitespace, including newlines, may separate tokens.
 */

#include <cstddef>
#include <string>
#include <string_view>

#include "endo/endofunction.hpp"
#include "endo/factorization.hpp"

namespace endo::cli {

/// Largest n the parser will allocate for.
inline constexpr std::size_t max_parse_size = 1'000'000;

/// Throws ParseError with a line/column position on malformed syntax, an
/// out-of-range point or a point assigned twice.
Endofunction parse_endofunction(std::string_view text);

/// "n: i1 i2 ... in"
std::string to_table_text(const Endofunction& f);

/// Cycles from their least point, ordered by that point, then a->b for
/// every point off the core in ascending order. A trailing "(n)" is added
/// when n itself would otherwise go unmentioned.
std::string to_cycle_text(const Endofunction& f);

/// "m(3,2)" or "(1 4)".
std::string to_string(const Factor& factor);

/// Factors separated by single spaces, "id" for the empty word.
std::string to_string(const GeneratorWord& word);

}  // namespace endo::cli
