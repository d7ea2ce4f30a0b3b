#pragma once

#include <cstdint>
#include <stdexcept>

namespace jagpath {

using Count = std::int64_t;

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

inline Count checked_add(Count a, Count b) {
    Count r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Count checked_sub(Count a, Count b) {
    Count r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Count checked_mul(Count a, Count b) {
    Count r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

}  // namespace jagpath
