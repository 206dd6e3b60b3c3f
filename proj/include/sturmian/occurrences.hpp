#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "sturmian/bigint.hpp"
#include "sturmian/palindromes.hpp"
#include "sturmian/slope.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

/// Closed-form description of where a factor occurs: the first position
/// plus a gap stream. Letter a of the gap slope maps to gap_a, letter b to
/// gap_b; occ_{i+1} = occ_i + P_i. The two gap values are the two
/// return-word lengths, and min(gap) < |subject| exactly when the subject
/// has overlapping occurrences.
struct OccurrenceSequence {
    Word subject;
    BigInt occ_first;
    Slope gap_slope;
    BigInt gap_a;
    BigInt gap_b;

    /// The first `count` occurrence positions.
    std::vector<BigInt> positions(std::size_t count) const;
};

/// Occurrences of a palindromic factor (Cor 5.3-style closed forms keyed by
/// the structural certificate). Requires a_1 >= 2.
OccurrenceSequence palindrome_occurrences(const Slope& s, const Word& u);
OccurrenceSequence occurrences_for_certificate(const Slope& s, const Word& u,
                                               const StructuralForm& f);

/// Occurrences of the singular word w_n (n >= 0): occ_1 = q_{n+1} - 1,
/// gaps {q_{n+1}, q_{n+1}+q_n}, gap slope alpha_{n+1}.
OccurrenceSequence singular_w_occurrences(const Slope& s, std::int64_t n);

/// Occurrences of the adjoining singular word v_n (n >= -1): the head is
/// the product v_{-1} ... v_{n-1}, gaps {q_{n+2}, q_{n+1}}, gap slope
/// alpha_{n+2,1}.
OccurrenceSequence singular_v_occurrences(const Slope& s, std::int64_t n);

/// Occurrences of the conjugate C_k(s_n) (n >= 1, 0 <= k <= q_n - 1):
/// occ_1 = k; gaps {q_n, q_{n-1}} with gap slope alpha_{n,1} when
/// k <= q_{n-1}-2, else {q_n, q_n+q_{n-1}} with gap slope alpha_n.
OccurrenceSequence conjugate_occurrences(const Slope& s, std::int64_t n, std::int64_t k);

enum class Method { Closed, Oracle };

/// A full occurrence query answer. `sequence` is present for closed-form
/// routes; oracle fallbacks report the scanned gap values instead.
struct OccurrenceQuery {
    Word subject;
    Method method = Method::Closed;
    BigInt occ_first;
    BigInt gap_a;
    BigInt gap_b;
    std::optional<Slope> gap_slope;
    std::vector<BigInt> positions;
};

/// Dispatcher: palindromic factors, conjugates of s_n, and singular words
/// get closed forms; anything else is scanned. Slopes with a_1 = 1 are
/// served through the complement + letter exchange (positions are
/// exchange-invariant). Throws NotAFactor.
OccurrenceQuery query_occurrences(const Slope& s, const Word& u, std::size_t count);

/// First `count` positions of u in c_alpha.
std::vector<BigInt> factor_occurrences(const Slope& s, const Word& u, std::size_t count);

/// The two return words of a factor, read off the occurrence sequence:
/// `first` is the segment from occ_1 to occ_2, `second` the other one.
struct ReturnWords {
    Word first;
    Word second;
};
ReturnWords return_words(const Slope& s, const Word& u);

/// The derived word with respect to u: the two return words plus the label
/// stream saying which one occurs at each step. word_a corresponds to
/// letter a of the gap slope (gap value gap_a).
struct DerivedWord {
    Word word_a;
    Word word_b;
    Word labels; // over {a,b}; letter i says which return word follows occ_i
};
DerivedWord derived_word(const Slope& s, const Word& u, std::size_t count);

/// Overlap factors of u: one word of length |u| - g for every return-word
/// length g < |u|. Empty set iff u has no overlapping occurrences.
std::set<Word> overlap_factors(const Slope& s, const Word& u);

/// c_alpha sliced at the occurrences of a factor. Replaying
/// head + (subject, gap)* reproduces a prefix of c_alpha exactly; negative
/// gaps are the overlaps between adjacent occurrences.
struct DecompositionItem {
    BigInt position;
    SignedWord gap; // to the next occurrence
};
struct Decomposition {
    Word subject;
    Word head; // z_0: everything before the first occurrence
    std::vector<DecompositionItem> items;
};

/// All occurrences with start < prefix_len, each with its gap word.
Decomposition decompose(const Slope& s, const Word& u, std::size_t prefix_len);

/// head + sum(subject + gap): the exact c_alpha prefix the decomposition
/// describes (ends at the occurrence after the last listed one).
Word replay(const Decomposition& d);

enum class DecompositionStyle { Inline, Annotated };
std::string render_decomposition(const Decomposition& d, DecompositionStyle style);

/// Three substitution decompositions of c_alpha: head + characteristic
/// stream of `base` over {image_a, image_b}.
///   view 0: c_{alpha_{n,1}} over {s_n, s_{n-1}}, head eps;
///   view 1: c_{alpha_{n+1,1}} over {v_{n-1} w_n, w_{n-1} v_{n-2}},
///           head v_{-1} ... v_{n-2};
///   view 2: c_{alpha_{2n+1}} over {w_{2n} v_{2n-1}, w_{2n} w_{2n+1}},
///           head v_{-1} ... v_{2n-1}.
struct SubstitutionView {
    Word head;
    Slope base;
    Word image_a;
    Word image_b;

    Word expand(std::size_t len) const;
};
std::array<SubstitutionView, 3> substitution_views(const Slope& s, std::int64_t n);

/// A prefix length from the uniform-recurrence bound that is guaranteed to
/// contain an occurrence of every factor of the given length.
std::size_t recommended_prefix_len(const Slope& s, std::size_t factor_len);

} // namespace sturmian
