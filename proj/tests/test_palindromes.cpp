#include <doctest.h>

#include "sturmian/oracle.hpp"
#include "sturmian/palindromes.hpp"

using namespace sturmian;

namespace {
const char* battery[] = {"2,(1)", "(2,1)", "(2,1,3,1)", "3,(1,2)"};
}

TEST_SUITE("palindromes") {

TEST_CASE("classify the worked examples") {
    const Slope s = Slope::parse("(2,1,3,1)");

    const auto aabaa = classify(s, Word::parse("aabaa"));
    CHECK(aabaa.family == PalFamily::FormU);
    CHECK(aabaa.n == 2);
    CHECK(aabaa.k == 1);
    CHECK(aabaa.wing.empty());

    const auto nine = classify(s, Word::parse("baababaab"));
    CHECK(nine.family == PalFamily::FormUBar);
    CHECK(nine.n == 4);
    CHECK(nine.k == 0);
    CHECK(nine.wing == Word::parse("baa"));

    const auto fib_aabaa = classify(Slope::parse("2,(1)"), Word::parse("aabaa"));
    CHECK(fib_aabaa.family == PalFamily::FormUBar);
    CHECK(fib_aabaa.n == 5);
    CHECK(fib_aabaa.k == 0);
    CHECK(fib_aabaa.wing.empty());

    const auto aa = classify(Slope::parse("4,(1,2)"), Word::parse("aa"));
    CHECK(aa.family == PalFamily::PowerA);
    CHECK(aa.k == 2);
}

TEST_CASE("letters have pinned certificates") {
    const Slope s = Slope::parse("(2,1,3,1)");
    const auto b = classify(s, Word::parse("b"));
    CHECK(b.family == PalFamily::FormU);
    CHECK(b.n == 1);
    CHECK(b.k == 0);
    CHECK(b.wing.empty());

    // d_1 = 1: a = v_{-1} = UBar_{1,0}.
    const auto a_fib = classify(Slope::parse("2,(1)"), Word::parse("a"));
    CHECK(a_fib.family == PalFamily::FormUBar);
    CHECK(a_fib.n == 1);
    CHECK(a_fib.k == 0);

    // d_1 >= 2: a = a^1 stays in the power family; a^{d_1} moves to UBar_{1,0}.
    const auto a_wide = classify(Slope::parse("3,(1)"), Word::parse("a"));
    CHECK(a_wide.family == PalFamily::PowerA);
    CHECK(a_wide.k == 1);
    const auto aa_wide = classify(Slope::parse("3,(1)"), Word::parse("aa"));
    CHECK(aa_wide.family == PalFamily::FormUBar);
    CHECK(aa_wide.n == 1);
    CHECK(aa_wide.k == 0);
}

TEST_CASE("classify rejects what it must") {
    const Slope s = Slope::parse("(2,1,3,1)");
    CHECK_THROWS_AS(classify(s, Word::parse("ab")), NotAPalindrome);
    CHECK_THROWS_AS(classify(s, Word::parse("bb")), NotAFactor);
    CHECK_THROWS_AS(classify(s, Word::parse("aaa")), NotAFactor); // d_1 = 1: max run is aa
    CHECK_THROWS_AS(classify(s, Word()), InvalidWord);
    CHECK_THROWS_AS(classify(Slope::parse("(1,2)"), Word::parse("a")), InvalidSlope);
}

TEST_CASE("reconstruct inverts classify on enumerated factors") {
    for (const char* lit : battery) {
        const Slope s = Slope::parse(lit);
        for (const auto& [w, f] : enumerate_palindromic_factors(s, 30)) {
            CHECK(reconstruct(s, f) == w);
            const auto g = classify(s, w);
            CHECK(g == f);
        }
    }
}

TEST_CASE("enumeration matches the brute-force scan") {
    for (const char* lit : battery) {
        const Slope s = Slope::parse(lit);
        const Word prefix = c_prefix(s, 100000);
        const auto scanned = oracle::palindromic_factors(prefix, 60);
        std::set<Word> generated;
        for (const auto& [w, f] : enumerate_palindromic_factors(s, 60)) generated.insert(w);
        CHECK(generated == scanned);
    }
}

TEST_CASE("enumeration matches the scan on harder slopes") {
    for (const char* lit : {"(5,4)", "2,1,1,(4)", "9,(5)", "(2,7)"}) {
        const Slope s = Slope::parse(lit);
        const Word prefix = c_prefix(s, 200000);
        const auto scanned = oracle::palindromic_factors(prefix, 45);
        std::set<Word> generated;
        for (const auto& [w, f] : enumerate_palindromic_factors(s, 45)) generated.insert(w);
        CHECK(generated == scanned);
    }
}

TEST_CASE("oracle palindromic factors split around their center") {
    const Word prefix = c_prefix(Slope::parse("(2,1,3,1)"), 100000);
    for (const Word& u : oracle::palindromic_factors(prefix, 40)) {
        const std::size_t half = u.size() / 2;
        const Word v = u.sub(0, half);
        if (u.size() % 2 == 0)
            CHECK(u == v + v.reversed());
        else
            CHECK(u == v + Word(u.at(half)) + v.reversed());
    }
}

TEST_CASE("enumeration output is sorted and matches the stated examples") {
    const auto fib = enumerate_palindromic_factors(Slope::parse("2,(1)"), 5);
    std::vector<std::string> words;
    for (const auto& [w, f] : fib) words.push_back(w.str());
    CHECK(words == std::vector<std::string>{"a", "b", "aa", "aba", "bab", "baab", "aabaa",
                                            "ababa"});

    const auto one = enumerate_palindromic_factors(Slope::parse("3,(1,2)"), 1);
    REQUIRE(one.size() == 2);
    CHECK(one[0].first == Word::parse("a"));
    CHECK(one[1].first == Word::parse("b"));

    std::set<Word> nine;
    for (const auto& [w, f] : enumerate_palindromic_factors(Slope::parse("(2,1,3,1)"), 9))
        nine.insert(w);
    CHECK(nine.count(Word::parse("baababaab")) == 1);
    CHECK(nine.count(Word::parse("abaabaaba")) == 1);
}

TEST_CASE("band forms of the worked examples") {
    const Slope s = Slope::parse("(2,1,3,1)");
    const auto b1 = band_form(s, Word::parse("baababaab"));
    CHECK(b1.band_n == 2);
    CHECK(b1.case_no == 1);
    const auto b2 = band_form(s, Word::parse("aabaabaabaa"));
    CHECK(b2.band_n == 2);
    CHECK(b2.case_no == 5);
    const auto b3 = band_form(Slope::parse("2,(1)"), Word::parse("aabaa"));
    CHECK(b3.band_n == 2);
    CHECK(b3.case_no == 5);
}

TEST_CASE("every enumerated palindrome gets a band form in its bracket") {
    for (const char* lit : battery) {
        const Slope s = Slope::parse(lit);
        for (const auto& [w, f] : enumerate_palindromic_factors(s, 25)) {
            if (w.size() <= 1) continue;
            const auto b = band_form(s, w);
            CHECK(s.q(b.band_n) < BigInt(w.size()));
            CHECK(BigInt(w.size()) <= s.q(b.band_n + 1));
        }
    }
}

} // TEST_SUITE
