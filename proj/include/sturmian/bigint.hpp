#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>

#include "sturmian/errors.hpp"

namespace sturmian {

// Positions and convergent numerators/denominators grow exponentially with
// the index, so everything position-like is kept in arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

// Narrow a position to a container index. Only valid at desk scale, i.e.
// when the caller actually materializes a prefix that long.
inline std::size_t to_index(const BigInt& v) {
    if (v < 0)
        throw Error("negative value cannot be used as an index");
    if (v > BigInt(1) << 40)
        throw Error("position too large to materialize: " + v.str());
    return static_cast<std::size_t>(v);
}

inline std::string to_string(const BigInt& v) { return v.str(); }

} // namespace sturmian
