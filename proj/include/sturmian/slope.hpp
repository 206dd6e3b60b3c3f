#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sturmian/bigint.hpp"
#include "sturmian/errors.hpp"

namespace sturmian {

struct Convergent {
    std::int64_t n = 0;
    BigInt p;
    BigInt q;
};

/// An irrational slope alpha = [0; a_1, a_2, ...] stored symbolically as an
/// eventually periodic digit sequence: a finite preperiod followed by a
/// non-empty period that repeats forever. Digits are never evaluated as
/// floating point; every consumer works from the exact digit stream.
///
/// Literal syntax: "2,(1)" is [0;2,1,1,1,...], "(2,1,3,1)" is purely
/// periodic. Construction normalizes to the minimal preperiod/period pair,
/// but equality is semantic (digit-stream equality).
class Slope {
public:
    Slope(std::vector<std::int64_t> preperiod, std::vector<std::int64_t> period);

    static Slope parse(std::string_view text);
    std::string render() const;

    const std::vector<std::int64_t>& preperiod() const { return preperiod_; }
    const std::vector<std::int64_t>& period() const { return period_; }

    /// a_i for i >= 1; reads the preperiod then cycles the period.
    std::int64_t digit(std::int64_t i) const;

    /// Directive digit: d_1 = a_1 - 1, d_i = a_i for i >= 2.
    std::int64_t directive(std::int64_t i) const;

    /// Convergent p_n/q_n for n >= 0 (p_0=0, p_1=1, q_0=1, q_1=a_1).
    /// n = -1 returns the convention p_{-1} = q_{-1} = 1; q_{-1} = 1 makes
    /// |s_n| = q_n hold at n = -1 and is relied on by the palindrome
    /// machinery.
    Convergent convergent(std::int64_t n) const;
    BigInt q(std::int64_t n) const { return convergent(n).q; }
    BigInt p(std::int64_t n) const { return convergent(n).p; }

    /// The shifted slope [0; a_{n+1}+k, a_{n+2}, ...]; requires
    /// a_{n+1} + k >= 1.
    Slope shifted(std::int64_t n, std::int64_t k) const;

    /// 1 - alpha. An involution on irrationals in (0,1); swaps the a_1 = 1
    /// and a_1 >= 2 classes.
    Slope complement() const;

    /// Semantic equality: the two digit streams agree everywhere.
    bool operator==(const Slope& other) const;
    bool operator!=(const Slope& other) const { return !(*this == other); }

private:
    std::vector<std::int64_t> preperiod_;
    std::vector<std::int64_t> period_;
};

} // namespace sturmian
