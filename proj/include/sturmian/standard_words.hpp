#pragma once

#include <cstdint>

#include "sturmian/slope.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

/// The standard word s_n of the slope: s_{-1} = b, s_0 = a,
/// s_n = s_{n-1}^{d_n} s_{n-2}. |s_n| = q_n for n >= -1.
Word standard_word(const Slope& s, std::int64_t n);

/// The length-L prefix of the characteristic word c_alpha = lim s_n.
/// Memoizes the longest prefix computed so far per slope.
Word c_prefix(const Slope& s, std::size_t len);

enum class SingularFamily { W, V, U, UBar };

struct SingularIndex {
    SingularFamily family;
    std::int64_t n = 0;
    std::int64_t k = 0; // only meaningful for U / UBar
};

/// Singular word w_n (n >= -2): the standard word s_n with its last letter
/// stripped and the opposite letter prepended; w_{-2} = eps, w_{-1} = a.
Word singular_w(const Slope& s, std::int64_t n);

/// Adjoining singular word v_n (n >= -2): x s_{n+1}^{d_{n+2}-1} s_n y^{-1}
/// with the same letter convention as w_{n+2}; v_{-2} = eps. Note
/// v_{-1} = a^{d_1}.
Word singular_v(const Slope& s, std::int64_t n);

/// U_{n,k} = (w_{n-1} v_{n-2})^k w_{n-1} for n >= 0, 0 <= k <= d_{n+1}-1.
Word u_word(const Slope& s, std::int64_t n, std::int64_t k);

/// UBar_{n,k} = (v_{n-2} w_{n-1})^k v_{n-2} for n >= 0, 0 <= k <= d_{n+1}-1.
Word ubar_word(const Slope& s, std::int64_t n, std::int64_t k);

Word singular(const Slope& s, const SingularIndex& idx);

} // namespace sturmian
