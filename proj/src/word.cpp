#include "sturmian/word.hpp"

namespace sturmian {

Word Word::parse(std::string_view text) {
    for (char c : text)
        if (c != 'a' && c != 'b')
            throw InvalidWord("words are over {a,b}; got '" + std::string(1, c) + "'");
    return Word(std::string(text), unchecked{});
}

Word Word::repeated(std::int64_t k) const {
    if (k < 0)
        throw InvalidWord("cannot repeat a word a negative number of times");
    if (!text_.empty() &&
        static_cast<std::size_t>(k) > kMaxMaterializedLen / text_.size())
        throw Error("repeated word too long to materialize");
    std::string out;
    out.reserve(text_.size() * static_cast<std::size_t>(k));
    for (std::int64_t i = 0; i < k; ++i) out += text_;
    return Word(std::move(out), unchecked{});
}

Word Word::strip_prefix(const Word& u) const {
    if (!has_prefix(u))
        throw NotAPrefix("'" + u.str() + "' is not a prefix of '" + text_ + "'");
    return sub(u.size(), text_.size() - u.size());
}

Word Word::strip_suffix(const Word& v) const {
    if (!has_suffix(v))
        throw NotASuffix("'" + v.str() + "' is not a suffix of '" + text_ + "'");
    return sub(0, text_.size() - v.size());
}

Word conjugate(const Word& w, std::int64_t k) {
    if (w.empty()) return w;
    const auto n = static_cast<std::int64_t>(w.size());
    std::int64_t r = k % n;
    if (r < 0) r += n;
    const auto split = static_cast<std::size_t>(r);
    return w.sub(split, w.size() - split) + w.sub(0, split);
}

Word MorphismPair::apply(const Word& w) const {
    std::string out;
    out.reserve(w.size() * std::max(image_a_.size(), image_b_.size()));
    for (char c : w.str())
        out += (c == 'a' ? image_a_ : image_b_).str();
    return Word(std::move(out), Word::unchecked{});
}

Word apply_morphism(const MorphismPair& m, const Word& w) { return m.apply(w); }

MorphismPair morphism_power(const MorphismPair& m, std::int64_t k) {
    if (k < 0)
        throw IndexOutOfRange("morphism powers require k >= 0");
    MorphismPair acc = MorphismPair::identity();
    for (std::int64_t i = 0; i < k; ++i) acc = acc.after(m);
    return acc;
}

Word exchange(const Word& w) { return MorphismPair::E().apply(w); }

} // namespace sturmian
