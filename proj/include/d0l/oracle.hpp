#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "d0l/morphism.hpp"

namespace d0l::oracle {

// Brute force over materialized iterates. Independent of the analysis
// pipeline: it only expands the system and scans the words.

struct OracleParams {
    std::size_t depth = 12;            // N: iterates phi^0 .. phi^N are scanned
    std::size_t max_len = 8;           // L: longest factor / period tracked
    std::size_t power_threshold = 3;   // K
    std::size_t length_cap = 1'000'000;

    void validate() const;
};

/// Largest power reached by each primitive word of length <= max_len,
/// for powers of at least 2.
using PowerProfile = std::map<Word, std::size_t>;

/// phi^0(axiom) .. phi^depth(axiom). Throws ResourceError past length_cap.
std::vector<Word> iterates(const D0LSystem& system, std::size_t depth, std::size_t length_cap);

/// Largest n <= max_depth such that phi^0(axiom) .. phi^n(axiom) all fit in
/// length_cap letters.
std::size_t affordable_depth(const D0LSystem& system, std::size_t length_cap, std::size_t max_depth);

std::set<Word> factors_up_to(const D0LSystem& system, const OracleParams& params);

std::size_t max_power(const D0LSystem& system, const Word& v, const OracleParams& params);
std::size_t max_power_in(const Word& text, const Word& v);

PowerProfile power_profile(const Word& text, std::size_t max_len);
PowerProfile power_profile(const D0LSystem& system, const OracleParams& params);

/// Canonical primitive words whose power reaches the threshold at depth N and
/// exceeds what depths ceil(N/2) and ceil(3N/4) reached.
std::set<Word> observed_classes(const D0LSystem& system, const OracleParams& params);

struct CrossCheck {
    std::vector<Word> unreported;   // observed by the oracle, missing from the report
    std::vector<Word> unconfirmed;  // reported, short enough to observe, but not observed

    bool agree() const { return unreported.empty() && unconfirmed.empty(); }
};

/// Two-sided comparison of canonical class representatives; reported classes
/// longer than max_len are outside the oracle's reach and ignored.
CrossCheck cross_check(const std::vector<Word>& reported, const std::set<Word>& observed, std::size_t max_len);

}  // namespace d0l::oracle
