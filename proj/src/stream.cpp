#include "sturmian/stream.hpp"

#include "sturmian/standard_words.hpp"

namespace sturmian {

Word WordStream::take(std::size_t len) const {
    if (len == 0) return Word();
    // Both letters recur with bounded gaps, so doubling the base prefix
    // always reaches the requested flattened length.
    std::size_t base_len = len;
    for (;;) {
        Word out = morphism_.apply(c_prefix(slope_, base_len));
        if (out.size() >= len) return out.take(len);
        if (morphism_.image_a().empty() && morphism_.image_b().empty())
            throw InvalidWord("substitution images must not both be empty");
        base_len *= 2;
    }
}

std::vector<SignedWord> substitute_tokens(const Slope& slope, const SignedWord& image_a,
                                          const SignedWord& image_b, std::size_t count) {
    const Word base = c_prefix(slope, count);
    std::vector<SignedWord> tokens;
    tokens.reserve(count);
    for (std::size_t i = 0; i < base.size(); ++i)
        tokens.push_back(base.at(i) == Letter::A ? image_a : image_b);
    return tokens;
}

} // namespace sturmian
