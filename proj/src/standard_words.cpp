#include "sturmian/standard_words.hpp"

#include <map>
#include <mutex>

namespace sturmian {

namespace {

std::string build_standard(const Slope& s, std::int64_t n) {
    if (n < -1)
        throw IndexOutOfRange("standard words are defined for n >= -1");
    if (n == -1) return "b";
    std::string prev = "b"; // s_{-1}
    std::string cur = "a";  // s_0
    for (std::int64_t i = 1; i <= n; ++i) {
        const std::int64_t d = s.directive(i);
        if (d > 0 && cur.size() > (kMaxMaterializedLen - prev.size()) / static_cast<std::size_t>(d))
            throw Error("standard word s_" + std::to_string(i) + " is too long to materialize");
        std::string next;
        next.reserve(cur.size() * static_cast<std::size_t>(d) + prev.size());
        for (std::int64_t j = 0; j < d; ++j) next += cur;
        next += prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::mutex prefix_mutex;
std::map<std::string, std::string>& prefix_memo() {
    static std::map<std::string, std::string> memo;
    return memo;
}

} // namespace

Word standard_word(const Slope& s, std::int64_t n) {
    return Word::parse(build_standard(s, n));
}

Word c_prefix(const Slope& s, std::size_t len) {
    if (len == 0) return Word();
    std::lock_guard lock(prefix_mutex);
    std::string& cached = prefix_memo()[s.render()];
    if (cached.size() < len) {
        std::int64_t n = 0;
        while (s.q(n) < static_cast<std::int64_t>(len)) ++n;
        cached = build_standard(s, n);
    }
    return Word::parse(std::string_view(cached).substr(0, len));
}

Word singular_w(const Slope& s, std::int64_t n) {
    if (n < -2)
        throw IndexOutOfRange("singular words are defined for n >= -2");
    if (n == -2) return Word();
    if (n == -1) return Word(Letter::A);
    const Letter prepended = (n % 2 != 0) ? Letter::A : Letter::B;
    const Word sn = standard_word(s, n);
    return Word(prepended) + sn.strip_suffix(Word(other(prepended)));
}

Word singular_v(const Slope& s, std::int64_t n) {
    if (n < -2)
        throw IndexOutOfRange("adjoining singular words are defined for n >= -2");
    if (n == -2) return Word();
    // Same parity convention as w_{n+2}: odd n prepends a and strips b.
    const Letter prepended = ((n % 2 + 2) % 2 == 1) ? Letter::A : Letter::B;
    const Word body =
        standard_word(s, n + 1).repeated(s.directive(n + 2) - 1) + standard_word(s, n);
    return Word(prepended) + body.strip_suffix(Word(other(prepended)));
}

Word u_word(const Slope& s, std::int64_t n, std::int64_t k) {
    if (n < 0)
        throw IndexOutOfRange("U_{n,k} requires n >= 0");
    if (k < 0 || k > s.directive(n + 1) - 1)
        throw KOutOfRange("U_{n,k} requires 0 <= k <= d_{n+1}-1");
    return (singular_w(s, n - 1) + singular_v(s, n - 2)).repeated(k) + singular_w(s, n - 1);
}

Word ubar_word(const Slope& s, std::int64_t n, std::int64_t k) {
    if (n < 0)
        throw IndexOutOfRange("UBar_{n,k} requires n >= 0");
    if (k < 0 || k > s.directive(n + 1) - 1)
        throw KOutOfRange("UBar_{n,k} requires 0 <= k <= d_{n+1}-1");
    return (singular_v(s, n - 2) + singular_w(s, n - 1)).repeated(k) + singular_v(s, n - 2);
}

Word singular(const Slope& s, const SingularIndex& idx) {
    switch (idx.family) {
        case SingularFamily::W: return singular_w(s, idx.n);
        case SingularFamily::V: return singular_v(s, idx.n);
        case SingularFamily::U: return u_word(s, idx.n, idx.k);
        case SingularFamily::UBar: return ubar_word(s, idx.n, idx.k);
    }
    throw Error("unknown singular family");
}

} // namespace sturmian
