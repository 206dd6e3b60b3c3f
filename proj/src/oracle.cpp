#include "sturmian/oracle.hpp"

namespace sturmian {
namespace oracle {

std::vector<std::size_t> scan_positions(std::string_view hay, std::string_view needle) {
    std::vector<std::size_t> positions;
    if (needle.empty() || needle.size() > hay.size()) return positions;
    std::size_t pos = hay.find(needle);
    while (pos != std::string_view::npos) {
        positions.push_back(pos);
        pos = hay.find(needle, pos + 1);
    }
    return positions;
}

ScanReport scan_occurrences(const Word& prefix, const Word& u) {
    if (u.empty())
        throw InvalidWord("cannot scan for the empty word");
    return {u, prefix.size(), scan_positions(prefix.view(), u.view())};
}

std::set<Word> factors_of_length(const Word& prefix, std::size_t m) {
    if (m > prefix.size())
        throw InsufficientPrefix("prefix shorter than requested factor length");
    std::set<Word> out;
    if (m == 0) {
        out.insert(Word());
        return out;
    }
    for (std::size_t i = 0; i + m <= prefix.size(); ++i) out.insert(prefix.sub(i, m));
    return out;
}

std::set<Word> palindromic_factors(const Word& prefix, std::size_t maxlen) {
    std::set<Word> out;
    const std::string_view text = prefix.view();
    // Expand around each center; Sturmian words have at most two palindromic
    // factors per length, so the set stays tiny even for long prefixes.
    for (std::size_t center = 0; center < 2 * text.size(); ++center) {
        std::size_t lo = center / 2;
        std::size_t hi = (center % 2 == 0) ? lo : lo + 1;
        while (hi < text.size() && hi - lo + 1 <= maxlen && text[lo] == text[hi]) {
            out.insert(prefix.sub(lo, hi - lo + 1));
            if (lo == 0) break;
            --lo;
            ++hi;
        }
    }
    return out;
}

std::set<Word> return_words_scan(const Word& prefix, const Word& u) {
    const auto positions = scan_positions(prefix.view(), u.view());
    if (positions.size() < 3)
        throw InsufficientPrefix("need at least 3 occurrences to read return words");
    std::set<Word> out;
    for (std::size_t i = 0; i + 1 < positions.size(); ++i)
        out.insert(prefix.sub(positions[i], positions[i + 1] - positions[i]));
    return out;
}

} // namespace oracle
} // namespace sturmian
