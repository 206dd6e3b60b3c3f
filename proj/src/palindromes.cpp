#include "sturmian/palindromes.hpp"

#include <algorithm>
#include <optional>

namespace sturmian {

namespace detail {

void require_d1_positive(const Slope& s) {
    if (s.digit(1) < 2)
        throw InvalidSlope("this operation requires a_1 >= 2; slopes with a_1 = 1 are "
                           "served via complement + letter exchange");
}

} // namespace detail

namespace {

// u = wing . core . wing~ where the forced wing length is (|u|-|core|)/2.
// Returns the wing when the split works out, nullopt otherwise.
std::optional<Word> split_wing(const Word& u, const Word& core) {
    if (core.size() > u.size() || (u.size() - core.size()) % 2 != 0) return std::nullopt;
    const std::size_t wl = (u.size() - core.size()) / 2;
    const Word wing = u.sub(0, wl);
    if (u.sub(wl, core.size()) != core) return std::nullopt;
    if (u.sub(wl + core.size(), wl) != wing.reversed()) return std::nullopt;
    return wing;
}

std::optional<StructuralForm> match_form_u(const Slope& s, const Word& u, std::int64_t n) {
    const Word anchor = singular_v(s, n - 2); // wings are proper suffixes of v_{n-2}
    const Word unit = singular_w(s, n - 1) + anchor;
    const std::int64_t k_max = s.directive(n + 1) - 2;
    for (std::int64_t k = k_max; k >= 0; --k) {
        const Word core = (unit.repeated(k)) + singular_w(s, n - 1);
        if (core.size() > u.size()) continue;
        if (auto wing = split_wing(u, core)) {
            if (wing->is_proper_suffix_of(anchor))
                return StructuralForm{PalFamily::FormU, n, k, *wing, core.size()};
        }
    }
    return std::nullopt;
}

std::optional<StructuralForm> match_form_ubar(const Slope& s, const Word& u, std::int64_t n) {
    const Word anchor = singular_w(s, n - 1); // wings are proper suffixes of w_{n-1}
    const Word v = singular_v(s, n - 2);
    const Word unit = v + anchor;
    const std::int64_t k_max = s.directive(n + 1) - 1;
    for (std::int64_t k = k_max; k >= 0; --k) {
        const Word core = (unit.repeated(k)) + v;
        if (core.size() > u.size()) continue;
        if (auto wing = split_wing(u, core)) {
            if (wing->is_proper_suffix_of(anchor))
                return StructuralForm{PalFamily::FormUBar, n, k, *wing, core.size()};
        }
    }
    return std::nullopt;
}

} // namespace

StructuralForm classify(const Slope& s, const Word& u) {
    detail::require_d1_positive(s);
    if (u.empty())
        throw InvalidWord("cannot classify the empty word");
    if (!u.is_palindrome())
        throw NotAPalindrome("'" + u.str() + "' is not a palindrome");

    // b = w_0 = U_{1,0} sits outside the k-range of level 1 when d_2 = 1,
    // so it is anchored explicitly.
    if (u == Word(Letter::B))
        return {PalFamily::FormU, 1, 0, Word(), 1};

    const auto len = static_cast<std::int64_t>(u.size());
    for (std::int64_t n = 0;; ++n) {
        if (n >= 2 && s.q(n - 2) > len) break; // every level-n core is >= q_{n-2} long
        if (s.q(n - 1) <= len) {
            if (auto f = match_form_u(s, u, n)) return *f;
        }
        if (s.q(n) - s.q(n - 1) <= len) {
            if (auto f = match_form_ubar(s, u, n)) {
                // Level-0 matches are the a^k family.
                if (n == 0) return {PalFamily::PowerA, 0, f->k, Word(), f->core_len};
                return *f;
            }
        }
    }
    throw NotAFactor("'" + u.str() + "' is not a factor of the characteristic word");
}

Word reconstruct(const Slope& s, const StructuralForm& f) {
    Word core;
    switch (f.family) {
        case PalFamily::FormU: core = u_word(s, f.n, f.k); break;
        case PalFamily::FormUBar: core = ubar_word(s, f.n, f.k); break;
        case PalFamily::PowerA: return Word::run(Letter::A, static_cast<std::size_t>(f.k));
    }
    return f.wing + core + f.wing.reversed();
}

BandForm band_form(const Slope& s, const Word& u) {
    detail::require_d1_positive(s);
    if (!u.is_palindrome())
        throw NotAPalindrome("'" + u.str() + "' is not a palindrome");
    if (u.size() <= 1)
        throw NotAFactor("band classification needs |u| > q_0 = 1");

    const auto len = static_cast<std::int64_t>(u.size());
    std::int64_t n = 0;
    while (!(s.q(n) < len && len <= s.q(n + 1))) ++n;

    const Word w_n = singular_w(s, n);
    const Word v_prev = singular_v(s, n - 1);
    const BigInt q_n = s.q(n), q_next = s.q(n + 1), q_prev = s.q(n - 1);

    if (u == singular_w(s, n + 1)) return {n, 5};

    if (auto wing = split_wing(u, w_n)) {
        if (v_prev.has_suffix(*wing) && BigInt(2 * wing->size()) <= q_next - q_n)
            return {n, 1};
    }
    if (auto wing = split_wing(u, v_prev)) {
        if (w_n.has_suffix(*wing) && BigInt(2 * wing->size()) <= q_n)
            return {n, 2};
    }
    if (auto f = match_form_u(s, u, n)) {
        // "moreover": k = 0 forces |v| > |v_{n-2}| / 2.
        if (f->k != 0 || BigInt(2 * f->wing.size()) > q_n - q_prev) return {n, 3};
    }
    if (auto f = match_form_ubar(s, u, n)) {
        if (f->k != 0 || BigInt(2 * f->wing.size()) > q_prev) return {n, 4};
    }
    throw NotAFactor("'" + u.str() + "' matches no band form");
}

std::vector<std::pair<Word, StructuralForm>> enumerate_palindromic_factors(const Slope& s,
                                                                           std::size_t max_len) {
    detail::require_d1_positive(s);
    std::set<Word> seen;
    const auto len = static_cast<std::int64_t>(max_len);
    for (std::int64_t n = 0;; ++n) {
        if (n >= 2 && s.q(n - 2) > len) break;
        const Word w_anchor = singular_w(s, n - 1);
        const Word v_anchor = singular_v(s, n - 2);

        auto emit = [&](const Word& core, const Word& wing_anchor) {
            if (core.size() > max_len) return;
            // All proper suffixes of the anchor short enough to fit.
            for (std::size_t wl = 0; wl < wing_anchor.size(); ++wl) {
                if (core.size() + 2 * wl > max_len) break;
                const Word wing = wing_anchor.sub(wing_anchor.size() - wl, wl);
                seen.insert(wing + core + wing.reversed());
            }
        };

        const Word u_unit = w_anchor + v_anchor;
        Word core = w_anchor;
        for (std::int64_t k = 0; k <= s.directive(n + 1) - 2 && core.size() <= max_len; ++k) {
            emit(core, v_anchor);
            core = u_unit + core;
        }
        const Word ubar_unit = v_anchor + w_anchor;
        core = v_anchor;
        for (std::int64_t k = 0; k <= s.directive(n + 1) - 1 && core.size() <= max_len; ++k) {
            emit(core, w_anchor);
            core = ubar_unit + core;
        }
    }
    seen.erase(Word());

    std::vector<std::pair<Word, StructuralForm>> out;
    out.reserve(seen.size());
    for (const Word& w : seen) out.emplace_back(w, classify(s, w));
    return out;
}

} // namespace sturmian
