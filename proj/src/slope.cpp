#include "sturmian/slope.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sturmian {

namespace {

// Reduce (preperiod, period) to the unique minimal representation: shrink
// the period to its primitive root, then absorb preperiod digits that
// already follow the cycle.
void normalize(std::vector<std::int64_t>& pre, std::vector<std::int64_t>& per) {
    for (std::size_t d = 1; d <= per.size(); ++d) {
        if (per.size() % d != 0) continue;
        bool primitive = true;
        for (std::size_t i = d; i < per.size() && primitive; ++i)
            primitive = per[i] == per[i - d];
        if (primitive) {
            per.resize(d);
            break;
        }
    }
    while (!pre.empty() && pre.back() == per.back()) {
        std::rotate(per.begin(), per.end() - 1, per.end());
        pre.pop_back();
    }
}

std::vector<std::int64_t> parse_digit_list(std::string_view text) {
    std::vector<std::int64_t> digits;
    std::size_t i = 0;
    while (i < text.size()) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw InvalidSlope("expected digit in slope literal");
        std::int64_t value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + (text[i] - '0');
            if (value > (std::int64_t(1) << 48))
                throw InvalidSlope("slope digit too large");
            ++i;
        }
        digits.push_back(value);
        if (i < text.size()) {
            if (text[i] != ',')
                throw InvalidSlope("expected ',' between slope digits");
            ++i;
            if (i == text.size())
                throw InvalidSlope("trailing ',' in slope literal");
        }
    }
    return digits;
}

} // namespace

Slope::Slope(std::vector<std::int64_t> preperiod, std::vector<std::int64_t> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
    if (period_.empty())
        throw InvalidSlope("period must be non-empty");
    for (auto d : preperiod_)
        if (d < 1) throw InvalidSlope("slope digits must be >= 1");
    for (auto d : period_)
        if (d < 1) throw InvalidSlope("slope digits must be >= 1");
    normalize(preperiod_, period_);
}

Slope Slope::parse(std::string_view text) {
    std::string compact;
    compact.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);

    auto open = compact.find('(');
    auto close = compact.find(')');
    if (open == std::string::npos || close == std::string::npos ||
        close != compact.size() - 1 || close <= open)
        throw InvalidSlope("slope literal must end with a (...) period: " +
                           std::string(text));

    std::string_view head(compact.data(), open);
    std::string_view body(compact.data() + open + 1, close - open - 1);
    if (!head.empty()) {
        if (head.back() != ',')
            throw InvalidSlope("preperiod must be separated from '(' by ','");
        head.remove_suffix(1);
        if (head.empty())
            throw InvalidSlope("empty preperiod before ','");
    }
    if (body.empty())
        throw InvalidSlope("empty period");

    return Slope(parse_digit_list(head), parse_digit_list(body));
}

std::string Slope::render() const {
    std::ostringstream out;
    for (auto d : preperiod_) out << d << ',';
    out << '(';
    for (std::size_t i = 0; i < period_.size(); ++i) {
        if (i) out << ',';
        out << period_[i];
    }
    out << ')';
    return out.str();
}

std::int64_t Slope::digit(std::int64_t i) const {
    if (i < 1)
        throw IndexOutOfRange("slope digit index must be >= 1");
    const auto m = static_cast<std::int64_t>(preperiod_.size());
    if (i <= m) return preperiod_[static_cast<std::size_t>(i - 1)];
    return period_[static_cast<std::size_t>((i - 1 - m) % static_cast<std::int64_t>(period_.size()))];
}

std::int64_t Slope::directive(std::int64_t i) const {
    if (i < 1)
        throw IndexOutOfRange("directive index must be >= 1");
    return i == 1 ? digit(1) - 1 : digit(i);
}

Convergent Slope::convergent(std::int64_t n) const {
    if (n < -1)
        throw IndexOutOfRange("convergent index must be >= -1");
    if (n == -1) return {-1, BigInt(1), BigInt(1)};
    BigInt p_prev = 0, q_prev = 1; // p_0, q_0
    if (n == 0) return {0, p_prev, q_prev};
    BigInt p_cur = 1, q_cur = digit(1); // p_1, q_1
    for (std::int64_t i = 2; i <= n; ++i) {
        BigInt a = digit(i);
        BigInt p_next = a * p_cur + p_prev;
        BigInt q_next = a * q_cur + q_prev;
        p_prev = std::move(p_cur);
        q_prev = std::move(q_cur);
        p_cur = std::move(p_next);
        q_cur = std::move(q_next);
    }
    return {n, p_cur, q_cur};
}

Slope Slope::shifted(std::int64_t n, std::int64_t k) const {
    if (n < 0)
        throw IndexOutOfRange("shift index must be >= 0");
    std::int64_t first = digit(n + 1) + k;
    if (first < 1)
        throw KOutOfRange("shifted slope needs a_{n+1} + k >= 1, got " +
                          std::to_string(first));
    std::vector<std::int64_t> pre{first};
    const auto m = static_cast<std::int64_t>(preperiod_.size());
    for (std::int64_t i = n + 2; i <= m; ++i) pre.push_back(digit(i));
    std::vector<std::int64_t> per;
    const std::int64_t per_from = std::max<std::int64_t>(n + 2, m + 1);
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(period_.size()); ++i)
        per.push_back(digit(per_from + i));
    return Slope(std::move(pre), std::move(per));
}

Slope Slope::complement() const {
    if (digit(1) == 1)
        return shifted(1, 1); // [0;1,a_2,a_3,...] -> [0;1+a_2,a_3,...]
    // [0;a_1,a_2,...] -> [0;1,a_1-1,a_2,...]
    std::vector<std::int64_t> pre{1, digit(1) - 1};
    const auto m = std::max<std::int64_t>(static_cast<std::int64_t>(preperiod_.size()), 1);
    for (std::int64_t i = 2; i <= m; ++i) pre.push_back(digit(i));
    std::vector<std::int64_t> per;
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(period_.size()); ++i)
        per.push_back(digit(m + 1 + i));
    return Slope(std::move(pre), std::move(per));
}

bool Slope::operator==(const Slope& other) const {
    const auto m = std::max(preperiod_.size(), other.preperiod_.size());
    const auto l = std::lcm(period_.size(), other.period_.size());
    const auto bound = static_cast<std::int64_t>(m + l + 1);
    for (std::int64_t i = 1; i <= bound; ++i)
        if (digit(i) != other.digit(i)) return false;
    return true;
}

} // namespace sturmian
