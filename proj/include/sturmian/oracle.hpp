#pragma once

#include <set>
#include <string_view>
#include <vector>

#include "sturmian/word.hpp"

namespace sturmian {
namespace oracle {

// Brute-force ground truth. Everything here scans material text; the
// closed-form engine is always tested against this module, never the other
// way around.

struct ScanReport {
    Word subject;
    std::size_t prefix_len = 0;
    std::vector<std::size_t> positions;
};

/// All start positions of needle in hay, overlapping occurrences included.
std::vector<std::size_t> scan_positions(std::string_view hay, std::string_view needle);

ScanReport scan_occurrences(const Word& prefix, const Word& u);

/// The exact set of length-m factors of the prefix. The caller must choose
/// a prefix long enough for the set to equal Omega_m(c_alpha).
std::set<Word> factors_of_length(const Word& prefix, std::size_t m);

/// All distinct palindromic factors of the prefix with length <= maxlen.
std::set<Word> palindromic_factors(const Word& prefix, std::size_t maxlen);

/// Distinct occurrence-to-next-occurrence segments of u in the prefix.
/// Requires u to occur at least 3 times.
std::set<Word> return_words_scan(const Word& prefix, const Word& u);

} // namespace oracle
} // namespace sturmian
