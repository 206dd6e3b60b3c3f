#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "sturmian/errors.hpp"

namespace sturmian {

enum class Letter : char { A = 'a', B = 'b' };

/// Hard ceiling on any materialized word; requests past it fail with a
/// clean error instead of exhausting memory. Positions and lengths remain
/// exact BigInt regardless.
inline constexpr std::size_t kMaxMaterializedLen = std::size_t(1) << 28;

inline Letter other(Letter x) { return x == Letter::A ? Letter::B : Letter::A; }
inline char to_char(Letter x) { return static_cast<char>(x); }

/// A finite binary word over {a,b}. Immutable value type; rendered as an
/// ASCII string of 'a'/'b'.
class Word {
public:
    Word() = default;
    explicit Word(Letter x) : text_(1, to_char(x)) {}

    /// Validating constructor from an a/b string.
    static Word parse(std::string_view text);
    static Word run(Letter x, std::size_t count) {
        return Word(std::string(count, to_char(x)), unchecked{});
    }

    std::size_t size() const { return text_.size(); }
    bool empty() const { return text_.empty(); }
    const std::string& str() const { return text_; }
    std::string_view view() const { return text_; }

    Letter at(std::size_t i) const { return static_cast<Letter>(text_.at(i)); }
    Letter first() const { return at(0); }
    Letter last() const { return at(text_.size() - 1); }

    Word operator+(const Word& rhs) const { return Word(text_ + rhs.text_, unchecked{}); }
    Word& operator+=(const Word& rhs) {
        text_ += rhs.text_;
        return *this;
    }

    /// w^k for k >= 0; w^0 = epsilon.
    Word repeated(std::int64_t k) const;

    Word reversed() const { return Word(std::string(text_.rbegin(), text_.rend()), unchecked{}); }
    bool is_palindrome() const {
        return std::equal(text_.begin(), text_.begin() + static_cast<std::ptrdiff_t>(text_.size() / 2),
                          text_.rbegin());
    }

    bool has_prefix(const Word& u) const {
        return text_.size() >= u.size() && text_.compare(0, u.size(), u.text_) == 0;
    }
    bool has_suffix(const Word& v) const {
        return text_.size() >= v.size() &&
               text_.compare(text_.size() - v.size(), v.size(), v.text_) == 0;
    }
    /// Proper suffix: a suffix strictly shorter than the word.
    bool is_proper_suffix_of(const Word& w) const {
        return size() < w.size() && w.has_suffix(*this);
    }

    /// u^{-1} w: defined only when u is a prefix.
    Word strip_prefix(const Word& u) const;
    /// w v^{-1}: defined only when v is a suffix.
    Word strip_suffix(const Word& v) const;

    Word sub(std::size_t pos, std::size_t len) const {
        return Word(text_.substr(pos, len), unchecked{});
    }
    Word take(std::size_t len) const { return sub(0, std::min(len, size())); }

    bool contains(const Word& z) const {
        return z.empty() || text_.find(z.text_) != std::string::npos;
    }

    auto operator<=>(const Word& rhs) const {
        // Ordered by (length, lexicographic) so sorted factor sets list
        // shorter words first.
        if (auto c = text_.size() <=> rhs.text_.size(); c != 0) return c;
        return text_.compare(rhs.text_) <=> 0;
    }
    bool operator==(const Word& rhs) const { return text_ == rhs.text_; }

private:
    struct unchecked {};
    Word(std::string text, unchecked) : text_(std::move(text)) {}
    std::string text_;

    friend class MorphismPair;
};

/// The k-th conjugate C_k(w): rotation by k letters, with k reduced mod |w|
/// and C_{-k}(w) = C_{|w|-k}(w).
Word conjugate(const Word& w, std::int64_t k);

/// A word or the formal inverse of one. Inverses only ever appear as whole
/// gap factors (overlaps), so no general free-group reduction is needed.
struct SignedWord {
    Word body;
    bool negative = false;

    std::string render() const {
        return negative ? "(" + body.str() + ")^-1" : body.str();
    }
    bool operator==(const SignedWord&) const = default;
};

/// A morphism of the free monoid {a,b}*, determined by the images of the
/// two letters. E = (b,a), phi = (ab,a), G = phi E = (a,ab).
class MorphismPair {
public:
    MorphismPair() : image_a_(Letter::A), image_b_(Letter::B) {}
    MorphismPair(Word image_a, Word image_b)
        : image_a_(std::move(image_a)), image_b_(std::move(image_b)) {}

    static MorphismPair identity() { return {}; }
    static MorphismPair E() { return {Word(Letter::B), Word(Letter::A)}; }
    static MorphismPair phi() { return {Word::parse("ab"), Word(Letter::A)}; }
    static MorphismPair G() { return {Word(Letter::A), Word::parse("ab")}; }

    const Word& image_a() const { return image_a_; }
    const Word& image_b() const { return image_b_; }
    const Word& image(Letter x) const { return x == Letter::A ? image_a_ : image_b_; }

    Word apply(const Word& w) const;

    /// Composition (*this) after inner: x -> this(inner(x)).
    MorphismPair after(const MorphismPair& inner) const {
        return {apply(inner.image_a_), apply(inner.image_b_)};
    }

    bool operator==(const MorphismPair&) const = default;

private:
    Word image_a_, image_b_;
};

Word apply_morphism(const MorphismPair& m, const Word& w);
MorphismPair morphism_power(const MorphismPair& m, std::int64_t k);

/// Letter exchange E(w).
Word exchange(const Word& w);

} // namespace sturmian
