#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sturmian/slope.hpp"
#include "sturmian/standard_words.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

enum class PalFamily { FormU, FormUBar, PowerA };

/// Structural certificate for a palindromic factor u of c_alpha:
///   FormU:    u = v U_{n,k} v~    with v a proper suffix of v_{n-2},
///             0 <= k <= d_{n+1}-2 (plus the w_0 = b anchor at n=1, k=0);
///   FormUBar: u = v UBar_{n,k} v~ with v a proper suffix of w_{n-1},
///             0 <= k <= d_{n+1}-1;
///   PowerA:   u = a^k with 1 <= k <= d_1 - 1 (a^{d_1} and a^{d_1+1} get
///             singular certificates instead).
struct StructuralForm {
    PalFamily family;
    std::int64_t n = 0;
    std::int64_t k = 0;
    Word wing;
    std::size_t core_len = 0;

    bool operator==(const StructuralForm&) const = default;
};

/// Which clause of the five-form band classification a palindromic factor u
/// with q_n < |u| <= q_{n+1} satisfies:
///   1: u = v w_n v~      (v suffix of v_{n-1}, |v| <= (q_{n+1}-q_n)/2)
///   2: u = v v_{n-1} v~  (v suffix of w_n, |v| <= q_n/2)
///   3: u = v U_{n,k} v~  (v proper suffix of v_{n-2}, k <= d_{n+1}-2)
///   4: u = v UBar_{n,k} v~ (v proper suffix of w_{n-1}, k <= d_{n+1}-1)
///   5: u = w_{n+1}
struct BandForm {
    std::int64_t band_n = 0;
    int case_no = 0;
};

/// Canonical certificate for a palindromic factor: minimal n, FormU before
/// FormUBar, maximal core. Throws NotAPalindrome / NotAFactor.
/// Requires a slope with a_1 >= 2.
StructuralForm classify(const Slope& s, const Word& u);

/// Rebuild the word a certificate describes.
Word reconstruct(const Slope& s, const StructuralForm& f);

/// Band classification for a palindromic factor with |u| > q_0 = 1.
/// Cases are tested in the order 5, 1, 2, 3, 4; the first match wins.
BandForm band_form(const Slope& s, const Word& u);

/// All distinct palindromic factors of c_alpha with length <= max_len,
/// generated from the (n, k, wing) parameter space and paired with their
/// canonical certificates; sorted by (length, lexicographic).
std::vector<std::pair<Word, StructuralForm>> enumerate_palindromic_factors(const Slope& s,
                                                                           std::size_t max_len);

namespace detail {
/// Throws InvalidSlope unless a_1 >= 2 (the d_1 >= 1 setting the singular
/// machinery is stated for; a_1 = 1 slopes are served through the
/// occurrence dispatcher via complement + letter exchange).
void require_d1_positive(const Slope& s);
} // namespace detail

} // namespace sturmian
