#pragma once

#include <stdexcept>

namespace sturmian {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidSlope : Error { using Error::Error; };
struct InvalidWord : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct KOutOfRange : Error { using Error::Error; };
struct NotAPrefix : Error { using Error::Error; };
struct NotASuffix : Error { using Error::Error; };
struct NotAPalindrome : Error { using Error::Error; };
struct NotAFactor : Error { using Error::Error; };
struct InsufficientPrefix : Error { using Error::Error; };

} // namespace sturmian
