#pragma once

#include <cstdint>
#include <vector>

#include "sturmian/slope.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

/// A lazy infinite word described by a base characteristic word and a
/// morphic image layer. take(L) is prefix-monotone; the descriptor is a
/// cheap value that can spawn independent streams.
class WordStream {
public:
    static WordStream characteristic(Slope s) {
        return WordStream(std::move(s), MorphismPair::identity());
    }

    /// Letterwise substitution a -> image_a, b -> image_b, flattened.
    /// Images must not both be empty.
    WordStream substituted(const Word& image_a, const Word& image_b) const {
        if (image_a.empty() && image_b.empty())
            throw InvalidWord("substitution images must not both be empty");
        return WordStream(slope_, MorphismPair(image_a, image_b).after(morphism_));
    }

    WordStream mapped(const MorphismPair& m) const {
        return WordStream(slope_, m.after(morphism_));
    }

    const Slope& slope() const { return slope_; }
    const MorphismPair& morphism() const { return morphism_; }

    /// The length-L prefix of the stream.
    Word take(std::size_t len) const;

private:
    WordStream(Slope s, MorphismPair m) : slope_(std::move(s)), morphism_(std::move(m)) {}

    Slope slope_;
    MorphismPair morphism_;
};

/// Letterwise substitution of c_slope by signed images: token i is the
/// image of the i-th letter. Used for gap streams, where one image may be
/// a formal inverse; the result is a token sequence, never flattened.
std::vector<SignedWord> substitute_tokens(const Slope& slope, const SignedWord& image_a,
                                          const SignedWord& image_b, std::size_t count);

} // namespace sturmian
