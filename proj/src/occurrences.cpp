#include "sturmian/occurrences.hpp"

#include <algorithm>

#include "sturmian/oracle.hpp"
#include "sturmian/standard_words.hpp"
#include "sturmian/stream.hpp"

namespace sturmian {

namespace {

BigInt exact_half(const BigInt& v) {
    if (v < 0 || v % 2 != 0)
        throw Error("occurrence formula produced a non-even numerator: " + v.str());
    return v / 2;
}

// Product v_{-1} v_0 ... v_{upto}; the head of the singular decompositions.
Word v_product(const Slope& s, std::int64_t upto) {
    Word out;
    for (std::int64_t j = -1; j <= upto; ++j) out += singular_v(s, j);
    return out;
}

struct NormalizedQuery {
    Slope slope;  // slope with a_1 >= 2
    Word subject; // letter-exchanged when the original had a_1 = 1
};

NormalizedQuery normalize(const Slope& s, const Word& u) {
    if (s.digit(1) == 1) return {s.complement(), exchange(u)};
    return {s, u};
}

} // namespace

std::vector<BigInt> OccurrenceSequence::positions(std::size_t count) const {
    std::vector<BigInt> out;
    if (count == 0) return out;
    out.reserve(count);
    out.push_back(occ_first);
    if (count == 1) return out;
    const Word gaps = c_prefix(gap_slope, count - 1);
    for (std::size_t i = 0; i + 1 < count; ++i)
        out.push_back(out.back() + (gaps.at(i) == Letter::A ? gap_a : gap_b));
    return out;
}

OccurrenceSequence occurrences_for_certificate(const Slope& s, const Word& u,
                                               const StructuralForm& f) {
    detail::require_d1_positive(s);
    const BigInt len(u.size());
    switch (f.family) {
        case PalFamily::PowerA: {
            // u = a^k: first at 0, gaps {1, k+1}, stream c_{alpha_{0,-k}}.
            return {u, BigInt(0), s.shifted(0, -f.k), BigInt(1), BigInt(f.k + 1)};
        }
        case PalFamily::FormU: {
            const BigInt q_n = s.q(f.n), q_prev = s.q(f.n - 1);
            BigInt occ = exact_half((f.k + 2) * q_n + q_prev - len - 2);
            return {u, std::move(occ), s.shifted(f.n, -f.k), q_n, (f.k + 1) * q_n + q_prev};
        }
        case PalFamily::FormUBar: {
            const BigInt q_n = s.q(f.n), q_prev = s.q(f.n - 1);
            BigInt occ = exact_half((f.k + 1) * q_n + q_prev - len - 2);
            return {u, std::move(occ), s.shifted(f.n, 1 - f.k), q_n, f.k * q_n + q_prev};
        }
    }
    throw Error("unknown palindrome family");
}

OccurrenceSequence palindrome_occurrences(const Slope& s, const Word& u) {
    return occurrences_for_certificate(s, u, classify(s, u));
}

OccurrenceSequence singular_w_occurrences(const Slope& s, std::int64_t n) {
    detail::require_d1_positive(s);
    if (n < 0)
        throw IndexOutOfRange("w_n occurrences require n >= 0");
    const BigInt q_n = s.q(n), q_next = s.q(n + 1);
    return {singular_w(s, n), q_next - 1, s.shifted(n + 1, 0), q_next, q_next + q_n};
}

OccurrenceSequence singular_v_occurrences(const Slope& s, std::int64_t n) {
    detail::require_d1_positive(s);
    if (n < -1)
        throw IndexOutOfRange("v_n occurrences require n >= -1");
    // Head length by word algebra rather than a separate closed formula.
    const Word head = v_product(s, n - 1);
    return {singular_v(s, n), BigInt(head.size()), s.shifted(n + 2, 1), s.q(n + 2), s.q(n + 1)};
}

OccurrenceSequence conjugate_occurrences(const Slope& s, std::int64_t n, std::int64_t k) {
    detail::require_d1_positive(s);
    if (n < 1)
        throw IndexOutOfRange("conjugate occurrences require n >= 1");
    const BigInt q_n = s.q(n), q_prev = s.q(n - 1);
    if (k < 0 || BigInt(k) > q_n - 1)
        throw KOutOfRange("conjugate index must satisfy 0 <= k <= q_n - 1");
    const Word subject = conjugate(standard_word(s, n), k);
    if (BigInt(k) <= q_prev - 2)
        return {subject, BigInt(k), s.shifted(n, 1), q_n, q_prev};
    return {subject, BigInt(k), s.shifted(n, 0), q_n, q_n + q_prev};
}

namespace {

// Closed-form route for a normalized (a_1 >= 2) query; nullopt if the
// subject has no closed form in the paper. A palindrome that fails to
// classify is not a factor at all (the structural description is an iff),
// so NotAFactor propagates from here.
std::optional<OccurrenceSequence> closed_route(const Slope& s, const Word& u) {
    if (u.is_palindrome()) return palindrome_occurrences(s, u);

    // Factors of length q_n are exactly the q_n conjugates of s_n plus w_n.
    const auto len = BigInt(u.size());
    for (std::int64_t n = 1; s.q(n) <= len; ++n) {
        if (s.q(n) != len) continue;
        const Word doubled = standard_word(s, n) + standard_word(s, n);
        const auto at = doubled.view().find(u.view());
        if (at != std::string::npos && at < u.size())
            return conjugate_occurrences(s, n, static_cast<std::int64_t>(at));
        if (u == singular_w(s, n)) return singular_w_occurrences(s, n); // palindromic; unreachable
        throw NotAFactor("'" + u.str() + "' has length q_n but is not a factor");
    }
    for (std::int64_t n = -1; s.q(n) <= len; ++n)
        if (s.q(n + 2) - s.q(n + 1) == len && u == singular_v(s, n))
            return singular_v_occurrences(s, n); // palindromic; unreachable
    return std::nullopt;
}

std::vector<BigInt> scan_first(const Slope& s, const Word& u, std::size_t count) {
    // Grow the prefix until `count` occurrences are visible (or the word is
    // shown not to be a factor at all via the recurrence bound).
    std::size_t len = recommended_prefix_len(s, u.size());
    auto positions = oracle::scan_positions(c_prefix(s, len).view(), u.view());
    if (positions.empty())
        throw NotAFactor("'" + u.str() + "' is not a factor of the characteristic word");
    while (positions.size() < count) {
        len *= 2;
        positions = oracle::scan_positions(c_prefix(s, len).view(), u.view());
    }
    std::vector<BigInt> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count && i < positions.size(); ++i)
        out.push_back(BigInt(positions[i]));
    return out;
}

} // namespace

std::size_t recommended_prefix_len(const Slope& s, std::size_t factor_len) {
    // Uniform recurrence: every factor of length m <= q_n occurs in every
    // window of length q_{n+2} + q_{n+1}; add slack for the window itself.
    std::int64_t n = 0;
    while (s.q(n) < static_cast<std::int64_t>(std::max<std::size_t>(factor_len, 1))) ++n;
    return to_index(s.q(n + 2) + s.q(n + 1) + BigInt(factor_len));
}

OccurrenceQuery query_occurrences(const Slope& s, const Word& u, std::size_t count) {
    if (u.empty())
        throw InvalidWord("occurrence queries need a non-empty word");
    const NormalizedQuery nq = normalize(s, u);

    if (auto seq = closed_route(nq.slope, nq.subject)) {
        OccurrenceQuery out;
        out.subject = u;
        out.method = Method::Closed;
        out.occ_first = seq->occ_first;
        out.gap_a = seq->gap_a;
        out.gap_b = seq->gap_b;
        out.gap_slope = seq->gap_slope;
        out.positions = seq->positions(count);
        return out;
    }

    // Oracle fallback. Scan enough occurrences to expose both return-word
    // lengths (both gap values appear within bounded distance).
    std::size_t want = std::max<std::size_t>(count, 3) + 1;
    std::vector<BigInt> positions;
    std::vector<BigInt> gaps;
    for (;;) {
        positions = scan_first(nq.slope, nq.subject, want);
        gaps.clear();
        for (std::size_t i = 0; i + 1 < positions.size() && gaps.size() < 2; ++i) {
            BigInt g = positions[i + 1] - positions[i];
            if (std::find(gaps.begin(), gaps.end(), g) == gaps.end()) gaps.push_back(std::move(g));
        }
        if (gaps.size() == 2) break;
        want *= 2;
    }
    OccurrenceQuery out;
    out.subject = u;
    out.method = Method::Oracle;
    out.occ_first = positions.front();
    out.gap_a = gaps[0]; // first-seen order; no letter convention without a gap slope
    out.gap_b = gaps[1];
    positions.resize(std::min<std::size_t>(positions.size(), count));
    out.positions = std::move(positions);
    return out;
}

std::vector<BigInt> factor_occurrences(const Slope& s, const Word& u, std::size_t count) {
    return query_occurrences(s, u, count).positions;
}

namespace {

// Occurrence positions plus the material prefix needed to slice segments.
struct Sliced {
    std::vector<BigInt> positions;
    Word prefix; // at least up to the last position + |u| + following gap
};

Sliced slice_positions(const Slope& s, const Word& u, std::size_t count) {
    auto q = query_occurrences(s, u, count + 1);
    if (q.positions.size() < count + 1)
        throw InsufficientPrefix("not enough occurrences of '" + u.str() + "'");
    const std::size_t need = to_index(q.positions.back()) + u.size();
    return {std::move(q.positions), c_prefix(s, need)};
}

} // namespace

ReturnWords return_words(const Slope& s, const Word& u) {
    // Both return words appear among the first few gaps: the gap stream is
    // itself characteristic, so both letters occur within its first
    // a_1 + 1 letters.
    std::size_t count = 8;
    for (;;) {
        Sliced sl = slice_positions(s, u, count);
        const BigInt first_gap = sl.positions[1] - sl.positions[0];
        const Word first =
            sl.prefix.sub(to_index(sl.positions[0]), to_index(first_gap));
        for (std::size_t i = 1; i + 1 < sl.positions.size(); ++i) {
            if (sl.positions[i + 1] - sl.positions[i] != first_gap) {
                const Word second = sl.prefix.sub(
                    to_index(sl.positions[i]), to_index(sl.positions[i + 1] - sl.positions[i]));
                return {first, second};
            }
        }
        count *= 4;
    }
}

DerivedWord derived_word(const Slope& s, const Word& u, std::size_t count) {
    const ReturnWords rw = return_words(s, u);
    const auto q = query_occurrences(s, u, count + 1);
    const Word& word_a = (BigInt(rw.first.size()) == q.gap_a) ? rw.first : rw.second;
    const Word& word_b = (BigInt(rw.first.size()) == q.gap_a) ? rw.second : rw.first;
    std::string labels;
    labels.reserve(count);
    for (std::size_t i = 0; i + 1 < q.positions.size(); ++i)
        labels.push_back(q.positions[i + 1] - q.positions[i] == q.gap_a ? 'a' : 'b');
    return {word_a, word_b, Word::parse(labels)};
}

std::set<Word> overlap_factors(const Slope& s, const Word& u) {
    // The two gap values are the two return-word lengths; a gap g shorter
    // than the subject yields the overlap u[g..).
    const auto q = query_occurrences(s, u, 0);
    std::set<Word> out;
    for (const BigInt& g : {q.gap_a, q.gap_b})
        if (g < BigInt(u.size()))
            out.insert(u.sub(to_index(g), u.size() - to_index(g)));
    return out;
}

Decomposition decompose(const Slope& s, const Word& u, std::size_t prefix_len) {
    if (u.empty())
        throw InvalidWord("cannot decompose with respect to the empty word");
    // Collect all occurrences below prefix_len, plus one to close the last gap.
    std::size_t count = 4;
    std::vector<BigInt> positions;
    for (;;) {
        positions = factor_occurrences(s, u, count);
        if (positions.size() >= 2 && positions[positions.size() - 2] >= BigInt(prefix_len))
            break;
        count *= 2;
    }
    std::size_t m = 0;
    while (m < positions.size() && positions[m] < BigInt(prefix_len)) ++m;
    if (m == 0)
        throw InsufficientPrefix("no occurrence of '" + u.str() + "' starts below " +
                                 std::to_string(prefix_len));
    // Keep m occurrences and the (m+1)-th as the final gap target.
    const std::size_t last_needed = to_index(positions[m]) + u.size();
    const Word prefix = c_prefix(s, last_needed);

    Decomposition d;
    d.subject = u;
    d.head = prefix.sub(0, to_index(positions[0]));
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t here = to_index(positions[i]);
        const std::size_t next = to_index(positions[i + 1]);
        DecompositionItem item;
        item.position = positions[i];
        if (next >= here + u.size())
            item.gap = {prefix.sub(here + u.size(), next - here - u.size()), false};
        else
            item.gap = {prefix.sub(next, here + u.size() - next), true};
        d.items.push_back(std::move(item));
    }
    return d;
}

Word replay(const Decomposition& d) {
    std::string text = d.head.str();
    for (const auto& item : d.items) {
        text += d.subject.str();
        if (item.gap.negative) {
            if (item.gap.body.size() > text.size())
                throw Error("overlap gap longer than the replayed text");
            text.resize(text.size() - item.gap.body.size());
        } else {
            text += item.gap.body.str();
        }
    }
    return Word::parse(text);
}

std::string render_decomposition(const Decomposition& d, DecompositionStyle style) {
    const Word text = replay(d);
    if (style == DecompositionStyle::Annotated) {
        std::string markers(text.size(), ' ');
        for (const auto& item : d.items) markers[to_index(item.position)] = '^';
        while (!markers.empty() && markers.back() == ' ') markers.pop_back();
        return text.str() + "\n" + markers;
    }
    // Inline: '(' before each occurrence, ')' after it; overlaps nest.
    std::vector<std::size_t> opens, closes;
    for (const auto& item : d.items) {
        opens.push_back(to_index(item.position));
        closes.push_back(to_index(item.position) + d.subject.size());
    }
    std::string out;
    std::size_t oi = 0, ci = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        while (ci < closes.size() && closes[ci] == i) {
            out += ')';
            ++ci;
        }
        while (oi < opens.size() && opens[oi] == i) {
            out += '(';
            ++oi;
        }
        if (i < text.size()) out += to_char(text.at(i));
    }
    return out;
}

std::array<SubstitutionView, 3> substitution_views(const Slope& s, std::int64_t n) {
    detail::require_d1_positive(s);
    if (n < 1)
        throw IndexOutOfRange("substitution views require n >= 1");
    SubstitutionView standard{Word(), s.shifted(n, 1), standard_word(s, n),
                              standard_word(s, n - 1)};
    SubstitutionView paired{v_product(s, n - 2), s.shifted(n + 1, 1),
                            singular_v(s, n - 1) + singular_w(s, n),
                            singular_w(s, n - 1) + singular_v(s, n - 2)};
    SubstitutionView returns{v_product(s, 2 * n - 1), s.shifted(2 * n + 1, 0),
                             singular_w(s, 2 * n) + singular_v(s, 2 * n - 1),
                             singular_w(s, 2 * n) + singular_w(s, 2 * n + 1)};
    return {std::move(standard), std::move(paired), std::move(returns)};
}

Word SubstitutionView::expand(std::size_t len) const {
    if (head.size() >= len) return head.take(len);
    return head + WordStream::characteristic(base)
                      .substituted(image_a, image_b)
                      .take(len - head.size());
}

} // namespace sturmian
