#pragma once

/**
 * @file verify.hpp
 * @brief Exhaustive property sweeps over all small endofunctions.
 *
 * Each property runs over every object of size 1..bound. Sweeps over pairs
 * or triples of objects, and the universal-property checks, use a smaller
 * cap; the cap actually used is reported with each result.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace endo::cli {

enum class Suite { all, factorization, monoid, pretorsion, bridges };

std::optional<Suite> parse_suite(std::string_view name);
std::string to_string(Suite suite);

inline constexpr std::size_t default_verify_bound = 4;
/// Bounds above this need allow_large_bound.
inline constexpr std::size_t max_verify_bound = 5;

struct VerifyOptions {
    std::size_t bound = default_verify_bound;
    Suite suite = Suite::all;
    bool allow_large_bound = false;
    /// Adds a property that is false by construction, to show a failure
    /// reaches the exit status.
    bool inject_fault = false;
};

struct PropertyResult {
    std::string suite;
    std::string name;
    bool passed = false;
    /// Largest object size the sweep actually covered.
    std::size_t size_limit = 0;
    /// The property is about one fixed input of size size_limit.
    bool fixed_input = false;
    std::size_t instances = 0;
    double seconds = 0;
    /// Smallest failing input, in table form, when !passed.
    std::string witness;
};

struct VerifyReport {
    std::size_t bound = 0;
    std::vector<PropertyResult> results;

    bool passed() const;
};

/// Throws BoundExceeded if bound > max_verify_bound without
/// allow_large_bound, std::invalid_argument if bound is 0.
VerifyReport run_verify(const VerifyOptions& options);

/// Exit status: 0 when every property holds, 1 otherwise.
int exit_status(const VerifyReport& report);

std::string to_text(const VerifyReport& report);
nlohmann::ordered_json to_json(const VerifyReport& report);

}  // namespace endo::cli
