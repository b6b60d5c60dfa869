#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kirchcert {

// Outcome of one verification run, in a form the CLI can serialize without
// further computation.  Every field that carries a number stores it as an
// exact decimal/rational string; params preserves insertion order so that
// serialization is deterministic.
struct VerificationReport {
    std::string claim;                                        // stable identifier of the claim checked
    std::vector<std::pair<std::string, std::string>> params;  // ordered key/value pairs
    std::string mode;                                         // "symbolic", "evaluation", ...
    std::uint64_t seed = 0;
    int trials = 0;  // 0 when the check is purely symbolic
    bool verdict = false;
    std::vector<std::string> notes;             // human-readable observations
    std::optional<std::string> failure_bound;   // exact probability bound "p/q" for sampled checks
    std::optional<std::string> witness;         // exact counterexample data when verdict is false

    void add_param(std::string key, std::string value) {
        params.emplace_back(std::move(key), std::move(value));
    }
};

}  // namespace kirchcert
