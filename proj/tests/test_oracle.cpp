#include <doctest.h>

#include "sturmian/oracle.hpp"
#include "sturmian/standard_words.hpp"

using namespace sturmian;

TEST_SUITE("oracle") {

TEST_CASE("scan counts overlapping occurrences") {
    const auto report = oracle::scan_occurrences(Word::parse("ababa"), Word::parse("aba"));
    CHECK(report.positions == std::vector<std::size_t>{0, 2});
    const Word w = Word::parse("baab");
    CHECK(oracle::scan_occurrences(w, w).positions == std::vector<std::size_t>{0});
}

TEST_CASE("scan of the worked example") {
    const Word prefix = c_prefix(Slope::parse("(2,1,3,1)"), 70);
    CHECK(oracle::scan_occurrences(prefix, Word::parse("aabaa")).positions ==
          std::vector<std::size_t>{2, 5, 13, 16, 19, 27, 30, 33, 41, 44, 52, 55, 58});
}

TEST_CASE("factor sets") {
    const Word fib = c_prefix(Slope::parse("2,(1)"), 10000);
    CHECK(oracle::factors_of_length(fib, 3) ==
          std::set<Word>{Word::parse("aab"), Word::parse("aba"), Word::parse("baa"),
                         Word::parse("bab")});
    CHECK(oracle::factors_of_length(fib, 1) == std::set<Word>{Word::parse("a"), Word::parse("b")});
    // n+1 factors of each length.
    for (std::size_t m = 1; m <= 20; ++m) CHECK(oracle::factors_of_length(fib, m).size() == m + 1);

    const Slope s = Slope::parse("(2,1,3,1)");
    const Word prefix = c_prefix(s, 10000);
    const auto omega = oracle::factors_of_length(prefix, 11); // q_3 = 11
    CHECK(omega.size() == 12);
    std::set<Word> expected;
    const Word s3 = standard_word(s, 3);
    for (std::int64_t k = 0; k < 11; ++k) expected.insert(conjugate(s3, k));
    expected.insert(singular_w(s, 3));
    CHECK(omega == expected);
}

TEST_CASE("palindromic factor scan") {
    const Word fib = c_prefix(Slope::parse("2,(1)"), 10000);
    const auto pals = oracle::palindromic_factors(fib, 5);
    CHECK(pals == std::set<Word>{Word::parse("a"), Word::parse("b"), Word::parse("aa"),
                                 Word::parse("aba"), Word::parse("bab"), Word::parse("baab"),
                                 Word::parse("aabaa"), Word::parse("ababa")});
    for (const Word& p : oracle::palindromic_factors(fib, 40)) CHECK(p.is_palindrome());
}

TEST_CASE("return word scan") {
    const Word fib = c_prefix(Slope::parse("2,(1)"), 1000);
    CHECK(oracle::return_words_scan(fib, Word::parse("bab")) ==
          std::set<Word>{Word::parse("babaabaa"), Word::parse("babaa")});
    CHECK_THROWS_AS(oracle::return_words_scan(fib, fib), InsufficientPrefix);

    const Word prefix = c_prefix(Slope::parse("(2,1,3,1)"), 1000);
    std::set<std::size_t> lengths;
    for (const Word& r : oracle::return_words_scan(prefix, Word::parse("aabaa")))
        lengths.insert(r.size());
    CHECK(lengths == std::set<std::size_t>{3, 8});
}

TEST_CASE("scan is deterministic") {
    const Word prefix = c_prefix(Slope::parse("3,(1,2)"), 5000);
    const Word u = Word::parse("aab");
    CHECK(oracle::scan_occurrences(prefix, u).positions ==
          oracle::scan_occurrences(prefix, u).positions);
}

} // TEST_SUITE
