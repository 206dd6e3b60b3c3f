#include "sturmian/verify.hpp"

#include <sstream>

#include "sturmian/occurrences.hpp"
#include "sturmian/oracle.hpp"
#include "sturmian/palindromes.hpp"
#include "sturmian/standard_words.hpp"
#include "sturmian/stream.hpp"

namespace sturmian {

namespace {

class Checker {
public:
    explicit Checker(VerifyReport& report) : report_(report) {}

    template <typename Fn>
    void run(const std::string& name, Fn&& body) {
        CheckResult result{name, true, ""};
        failure_.clear();
        try {
            body(*this);
        } catch (const std::exception& e) {
            require(false, std::string("exception: ") + e.what());
        }
        result.pass = failure_.empty();
        result.detail = failure_;
        report_.checks.push_back(std::move(result));
    }

    void require(bool cond, const std::string& what) {
        if (!cond && failure_.empty()) failure_ = what;
    }

    bool failed() const { return !failure_.empty(); }

private:
    VerifyReport& report_;
    std::string failure_;
};

// First `count` closed-form positions match the scan of a material prefix.
void check_positions(Checker& c, const Word& subject, const std::vector<BigInt>& closed,
                     const Word& prefix, const std::string& label) {
    const auto scanned = oracle::scan_positions(prefix.view(), subject.view());
    std::size_t comparable = 0;
    while (comparable < closed.size() &&
           closed[comparable] + BigInt(subject.size()) <= BigInt(prefix.size()))
        ++comparable;
    c.require(scanned.size() >= comparable,
              label + ": oracle finds fewer occurrences than the closed form");
    for (std::size_t i = 0; i < comparable && i < scanned.size(); ++i) {
        if (closed[i] != BigInt(scanned[i])) {
            std::ostringstream os;
            os << label << ": position " << i + 1 << " closed=" << closed[i]
               << " oracle=" << scanned[i];
            c.require(false, os.str());
            return;
        }
    }
}

} // namespace

VerifyReport verify_slope(const Slope& slope, std::int64_t max_n, std::size_t prefix_len) {
    VerifyReport report;
    Checker c(report);

    // The singular machinery is stated for a_1 >= 2; check the complement
    // instead and note it (positions are letter-exchange invariant).
    const bool exchanged = slope.digit(1) == 1;
    const Slope s = exchanged ? slope.complement() : slope;
    if (exchanged)
        report.checks.push_back(
            {"note: a_1 = 1, verifying the complement slope " + s.render(), true, ""});

    const std::int64_t deep_n = std::max<std::int64_t>(max_n, 2);
    const Word prefix = c_prefix(s, prefix_len);

    c.run("convergent-recurrence", [&](Checker& ck) {
        for (std::int64_t n = 2; n <= std::max<std::int64_t>(40, deep_n); ++n) {
            const auto a = BigInt(s.digit(n));
            ck.require(s.q(n) == a * s.q(n - 1) + s.q(n - 2), "q recurrence fails at n=" + std::to_string(n));
            ck.require(s.p(n) == a * s.p(n - 1) + s.p(n - 2), "p recurrence fails at n=" + std::to_string(n));
            ck.require(boost::multiprecision::gcd(s.p(n), s.q(n)) == 1,
                       "gcd(p_n,q_n) != 1 at n=" + std::to_string(n));
            ck.require(s.q(n) > s.q(n - 1), "q not increasing at n=" + std::to_string(n));
        }
    });

    c.run("standard-words", [&](Checker& ck) {
        for (std::int64_t n = -1; n <= deep_n + 2; ++n) {
            const Word sn = standard_word(s, n);
            ck.require(BigInt(sn.size()) == s.q(n), "|s_n| != q_n at n=" + std::to_string(n));
            if (n >= 0 && sn.size() <= prefix.size())
                ck.require(prefix.has_prefix(sn), "s_n not a prefix of c_alpha at n=" + std::to_string(n));
            if (n >= 1)
                ck.require(standard_word(s, n + 1).has_prefix(sn),
                           "s_n not a prefix of s_{n+1} at n=" + std::to_string(n));
            if (n >= 1 && n % 2 == 1)
                ck.require(sn.has_suffix(Word::parse("ab")), "s_{2n-1} lacks suffix ab at n=" + std::to_string(n));
            if (n >= 2 && n % 2 == 0)
                ck.require(sn.has_suffix(Word::parse("ba")), "s_{2n} lacks suffix ba at n=" + std::to_string(n));
        }
    });

    c.run("singular-palindromes", [&](Checker& ck) {
        for (std::int64_t n = -2; n <= deep_n + 2; ++n) {
            const Word w = singular_w(s, n);
            const Word v = singular_v(s, n);
            ck.require(w.is_palindrome(), "w_n not a palindrome at n=" + std::to_string(n));
            ck.require(v.is_palindrome(), "v_n not a palindrome at n=" + std::to_string(n));
            if (n >= -1) {
                ck.require(BigInt(w.size()) == s.q(n), "|w_n| != q_n at n=" + std::to_string(n));
                ck.require(BigInt(v.size()) == s.q(n + 2) - s.q(n + 1),
                           "|v_n| != q_{n+2}-q_{n+1} at n=" + std::to_string(n));
            }
        }
        for (std::int64_t n = 0; n <= deep_n; ++n)
            for (std::int64_t k = 0; k <= s.directive(n + 1) - 1; ++k) {
                const Word u = u_word(s, n, k);
                const Word ub = ubar_word(s, n, k);
                ck.require(u.is_palindrome() && ub.is_palindrome(),
                           "U/UBar not palindromes at n=" + std::to_string(n));
                ck.require(BigInt(u.size()) == BigInt(k) * s.q(n) + s.q(n - 1),
                           "|U_{n,k}| formula fails at n=" + std::to_string(n));
                ck.require(BigInt(ub.size()) == BigInt(k + 1) * s.q(n) - s.q(n - 1),
                           "|UBar_{n,k}| formula fails at n=" + std::to_string(n));
            }
    });

    c.run("singular-identities", [&](Checker& ck) {
        for (std::int64_t n = 0; n <= deep_n + 2; ++n) {
            const Word sn = standard_word(s, n);
            const Letter y = sn.last();
            const Letter x = other(y);
            const Word wn = singular_w(s, n);
            const Word wp = singular_w(s, n - 1), vpp = singular_v(s, n - 2);
            // (1) y s_n y^{-1} = w_{n-1} v_{n-2} = y x^{-1} w_n, and the mirror
            ck.require(Word(y) + sn.strip_suffix(Word(y)) == wp + vpp,
                       "identity (1) left fails at n=" + std::to_string(n));
            ck.require(Word(y) + wn.strip_prefix(Word(x)) == wp + vpp,
                       "identity (1) strip form fails at n=" + std::to_string(n));
            ck.require(wn.strip_suffix(Word(x)) + Word(y) == vpp + wp,
                       "identity (1) right fails at n=" + std::to_string(n));

            const Word wnext = singular_w(s, n + 1);
            const Word vp = singular_v(s, n - 1);
            const std::int64_t d = s.directive(n + 1);
            ck.require(wnext == wp + vpp + vp && wnext == vp + vpp + wp,
                       "identity (2) fails at n=" + std::to_string(n));
            ck.require(vp == (wp + vpp).repeated(d - 1) + wp,
                       "identity (3) fails at n=" + std::to_string(n));
            ck.require(wnext == (wp + vpp).repeated(d) + wp,
                       "identity (4) fails at n=" + std::to_string(n));
            Word prod(y);
            for (std::int64_t j = -1; j <= n - 1; ++j) prod += singular_v(s, j);
            ck.require(wnext == prod, "identity (5) fails at n=" + std::to_string(n));
            ck.require(!wnext.contains(wn), "identity (6) fails at n=" + std::to_string(n));
            ck.require(!wn.contains(vp), "identity (7) fails at n=" + std::to_string(n));
        }
    });

    c.run("prefix-products", [&](Checker& ck) {
        Word prod;
        for (std::int64_t j = -1; j <= deep_n + 2; ++j) {
            prod += singular_v(s, j);
            if (prod.size() <= prefix.size())
                ck.require(prefix.has_prefix(prod),
                           "v_{-1}..v_N not a prefix of c_alpha at N=" + std::to_string(j));
        }
        for (std::int64_t j = -1; j <= 4; ++j)
            ck.require((singular_v(s, 2 * j) + singular_w(s, 2 * j + 1)).repeated(s.directive(2 * j + 3)) ==
                           singular_v(s, 2 * j) + singular_v(s, 2 * j + 1),
                       "(v_{2j} w_{2j+1})^{d_{2j+3}} != v_{2j} v_{2j+1} at j=" + std::to_string(j));
    });

    c.run("u-boundaries", [&](Checker& ck) {
        for (std::int64_t n = 0; n <= deep_n; ++n) {
            ck.require(u_word(s, n, 0) == singular_w(s, n - 1),
                       "U_{n,0} != w_{n-1} at n=" + std::to_string(n));
            ck.require(u_word(s, n, s.directive(n + 1) - 1) == singular_v(s, n - 1),
                       "U_{n,d-1} != v_{n-1} at n=" + std::to_string(n));
            ck.require(ubar_word(s, n + 1, 0) == singular_v(s, n - 1),
                       "UBar_{n+1,0} != v_{n-1} at n=" + std::to_string(n));
        }
    });

    c.run("palindrome-enumeration", [&](Checker& ck) {
        std::size_t cap = std::min<std::size_t>(60, prefix.size() / 4);
        while (cap > 1 && recommended_prefix_len(s, cap) > prefix.size()) --cap;
        const auto enumerated = enumerate_palindromic_factors(s, cap);
        const auto scanned = oracle::palindromic_factors(prefix, cap);
        std::set<Word> generated;
        for (const auto& [w, f] : enumerated) {
            generated.insert(w);
            ck.require(reconstruct(s, f) == w, "reconstruct(classify(u)) != u for '" + w.str() + "'");
        }
        ck.require(generated == scanned,
                   "enumerated palindromic factors differ from the oracle scan (cap " +
                       std::to_string(cap) + ")");
    });

    c.run("band-forms", [&](Checker& ck) {
        const std::size_t cap = std::min<std::size_t>(60, prefix.size() / 4);
        for (const auto& [w, f] : enumerate_palindromic_factors(s, cap)) {
            if (w.size() <= 1) continue;
            const BandForm b = band_form(s, w);
            ck.require(s.q(b.band_n) < BigInt(w.size()) && BigInt(w.size()) <= s.q(b.band_n + 1),
                       "band bracket wrong for '" + w.str() + "'");
            ck.require(b.case_no >= 1 && b.case_no <= 5, "band case out of range for '" + w.str() + "'");
        }
    });

    c.run("palindrome-occurrences-vs-oracle", [&](Checker& ck) {
        const std::size_t cap = to_index(s.q(std::min<std::int64_t>(max_n, 4)));
        for (const auto& [w, f] : enumerate_palindromic_factors(s, cap)) {
            const auto seq = occurrences_for_certificate(s, w, f);
            check_positions(ck, w, seq.positions(20), prefix, "palindrome '" + w.str() + "'");
            if (ck.failed()) return;
        }
    });

    c.run("conjugate-occurrences-vs-oracle", [&](Checker& ck) {
        for (std::int64_t n = 1; n <= std::min<std::int64_t>(max_n, 4); ++n) {
            const auto q_n = to_index(s.q(n));
            for (std::int64_t k = 0; k < static_cast<std::int64_t>(q_n); ++k) {
                const auto seq = conjugate_occurrences(s, n, k);
                check_positions(ck, seq.subject, seq.positions(20), prefix,
                                "conjugate C_" + std::to_string(k) + "(s_" + std::to_string(n) + ")");
                if (ck.failed()) return;
            }
        }
    });

    c.run("singular-occurrences-vs-oracle", [&](Checker& ck) {
        for (std::int64_t n = 0; n <= std::min<std::int64_t>(max_n, 5); ++n) {
            const auto seq = singular_w_occurrences(s, n);
            check_positions(ck, seq.subject, seq.positions(20), prefix, "w_" + std::to_string(n));
            if (ck.failed()) return;
        }
        for (std::int64_t n = -1; n <= std::min<std::int64_t>(max_n, 5); ++n) {
            const auto seq = singular_v_occurrences(s, n);
            check_positions(ck, seq.subject, seq.positions(20), prefix, "v_" + std::to_string(n));
            if (ck.failed()) return;
        }
    });

    c.run("factor-structure-laws", [&](Checker& ck) {
        for (std::int64_t n = 0; n <= std::min<std::int64_t>(max_n, 5); ++n) {
            const auto q_n = to_index(s.q(n));
            if (recommended_prefix_len(s, q_n) > prefix.size()) break;
            const auto factors = oracle::factors_of_length(prefix, q_n);
            ck.require(factors.size() == q_n + 1,
                       "|Omega_{q_n}| != q_n + 1 at n=" + std::to_string(n));
            std::set<Word> expected;
            const Word sn = standard_word(s, n);
            for (std::size_t k = 0; k < q_n; ++k) expected.insert(conjugate(sn, static_cast<std::int64_t>(k)));
            ck.require(expected.size() == q_n, "s_n has repeated conjugates at n=" + std::to_string(n));
            expected.insert(singular_w(s, n));
            ck.require(factors == expected,
                       "Omega_{q_n} != C(s_n) + {w_n} at n=" + std::to_string(n));
        }
        // Lemma anchors for conjugates.
        for (std::int64_t n = 1; n <= std::min<std::int64_t>(max_n, 5); ++n) {
            const Word sn = standard_word(s, n);
            ck.require(conjugate(sn, to_index(s.q(n) - 1)) ==
                           singular_w(s, n - 1) + singular_v(s, n - 2),
                       "C_{q_n-1}(s_n) != w_{n-1} v_{n-2} at n=" + std::to_string(n));
            ck.require(conjugate(sn, to_index(s.q(n - 1) - 1)) ==
                           singular_v(s, n - 2) + singular_w(s, n - 1),
                       "C_{q_{n-1}-1}(s_n) != v_{n-2} w_{n-1} at n=" + std::to_string(n));
        }
    });

    c.run("return-words-and-overlap", [&](Checker& ck) {
        const auto cap =
            std::min<std::size_t>(to_index(s.q(std::min<std::int64_t>(max_n, 4))), 40);
        for (std::size_t m = 1; m <= cap && !ck.failed(); ++m) {
            if (recommended_prefix_len(s, m) * 3 > prefix.size()) break;
            for (const Word& u : oracle::factors_of_length(prefix, m)) {
                const auto scanned = oracle::return_words_scan(prefix, u);
                ck.require(scanned.size() == 2,
                           "factor '" + u.str() + "' does not have exactly two return words");
                const auto rw = return_words(s, u);
                ck.require(scanned == std::set<Word>{rw.first, rw.second},
                           "engine return words differ from scan for '" + u.str() + "'");
                // Overlap law: some return word shorter than u <=> overlap;
                // and for q_n < |u| <= q_{n+1}: no overlap <=> u = w_{n+1} or w_n < u.
                const auto overlaps = overlap_factors(s, u);
                const bool has_short = rw.first.size() < u.size() || rw.second.size() < u.size();
                ck.require(has_short == !overlaps.empty(),
                           "overlap/min-gap law fails for '" + u.str() + "'");
                if (m > 1) {
                    std::int64_t n = 0;
                    while (!(s.q(n) < BigInt(m) && BigInt(m) <= s.q(n + 1))) ++n;
                    const bool no_overlap_form =
                        u == singular_w(s, n + 1) || u.contains(singular_w(s, n));
                    ck.require(overlaps.empty() == no_overlap_form,
                               "no-overlap characterization fails for '" + u.str() + "'");
                }
                if (ck.failed()) return;
            }
        }
    });

    c.run("decomposition-replay", [&](Checker& ck) {
        const std::size_t window = std::min<std::size_t>(prefix.size(), 400);
        std::vector<Word> subjects;
        for (const auto& [w, f] : enumerate_palindromic_factors(s, to_index(s.q(2))))
            subjects.push_back(w);
        for (std::int64_t n = 1; n <= std::min<std::int64_t>(max_n, 3); ++n)
            for (std::int64_t k = 0; k < std::min<std::int64_t>(4, to_index(s.q(n))); ++k)
                subjects.push_back(conjugate(standard_word(s, n), k));
        for (const Word& u : subjects) {
            const auto q = query_occurrences(s, u, 1);
            if (q.occ_first + BigInt(u.size()) > BigInt(window)) continue;
            const auto d = decompose(s, u, window);
            const Word r = replay(d);
            ck.require(r == c_prefix(s, r.size()),
                       "decomposition replay mismatch for '" + u.str() + "'");
            if (ck.failed()) return;
        }
    });

    c.run("derived-words", [&](Checker& ck) {
        for (std::int64_t n = 0; n <= std::min<std::int64_t>(max_n, 3); ++n) {
            const Word u = singular_w(s, n);
            const auto q = query_occurrences(s, u, 40);
            const auto dw = derived_word(s, u, 40);
            ck.require(BigInt(dw.word_a.size()) == q.gap_a && BigInt(dw.word_b.size()) == q.gap_b,
                       "return-word lengths differ from gap values for w_" + std::to_string(n));
            ck.require(q.gap_slope && dw.labels == c_prefix(*q.gap_slope, dw.labels.size()),
                       "derived-word labels differ from the gap stream for w_" + std::to_string(n));
            if (ck.failed()) return;
        }
        // The w_n sequence's own convention: letter a of alpha_{n+1} inserts
        // v_{n-1} (return word w_n v_{n-1}), letter b inserts w_{n+1}.
        for (std::int64_t n = 0; n <= std::min<std::int64_t>(max_n, 3); ++n) {
            const auto seq = singular_w_occurrences(s, n);
            const auto positions = seq.positions(12);
            const Word letters = c_prefix(seq.gap_slope, 11);
            const Word text = c_prefix(s, to_index(positions.back()) + 1);
            const Word ret_a = seq.subject + singular_v(s, n - 1);
            const Word ret_b = seq.subject + singular_w(s, n + 1);
            for (std::size_t i = 0; i + 1 < positions.size(); ++i) {
                const Word segment = text.sub(to_index(positions[i]),
                                              to_index(positions[i + 1] - positions[i]));
                ck.require(segment == (letters.at(i) == Letter::A ? ret_a : ret_b),
                           "w_n return words are not w_n v_{n-1} / w_n w_{n+1} at n=" +
                               std::to_string(n));
            }
            if (ck.failed()) return;
        }
    });

    c.run("substitution-views", [&](Checker& ck) {
        const std::size_t len = std::min<std::size_t>(prefix.size(), 1000);
        for (std::int64_t n = 1; n <= std::min<std::int64_t>(max_n, 4); ++n) {
            const auto views = substitution_views(s, n);
            for (std::size_t i = 0; i < views.size(); ++i) {
                ck.require(views[i].expand(len) == prefix.take(len),
                           "substitution view " + std::to_string(i) + " fails at n=" + std::to_string(n));
                if (ck.failed()) return;
            }
        }
    });

    c.run("morphism-slope-identities", [&](Checker& ck) {
        const std::size_t len = std::min<std::size_t>(prefix.size(), 10000);
        ck.require(exchange(c_prefix(s.complement(), len)) == prefix.take(len),
                   "E(c_{1-alpha}) != c_alpha");
        for (std::int64_t n = 0; n <= std::min<std::int64_t>(max_n, 4); ++n) {
            for (std::int64_t k = 0; k <= 3; ++k) {
                const Slope base = s.shifted(n, 0);
                const Word lhs = WordStream::characteristic(base)
                                     .mapped(morphism_power(MorphismPair::G(), k))
                                     .take(len);
                ck.require(lhs == c_prefix(s.shifted(n, k), len),
                           "G^k(c_{alpha_n}) != c_{alpha_{n,k}} at n=" + std::to_string(n) +
                               ", k=" + std::to_string(k));
                if (ck.failed()) return;
            }
        }
        for (std::int64_t n = 0; n <= std::min<std::int64_t>(max_n, 4); ++n) {
            // n = 0 uses the -d_1 variant of the exchange identity.
            const std::int64_t shift = n == 0 ? -s.directive(1) : 1 - s.directive(n + 1);
            const Word lhs = exchange(c_prefix(s.shifted(n + 1, 1), len));
            const Word rhs = c_prefix(s.shifted(n, shift), len);
            ck.require(lhs == rhs, "E(c_{alpha_{n+1,1}}) != c_{alpha_{n,1-d_{n+1}}} at n=" +
                                       std::to_string(n));
            if (ck.failed()) return;
        }
    });

    return report;
}

} // namespace sturmian
