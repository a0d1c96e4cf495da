#pragma once

// Matrix entry type. Entries grow quickly along long mutation orbits, so the
// default 64-bit representation is overflow-checked; configure with
// -DGREENSEQ_BIGINT=ON to switch to boost::multiprecision::cpp_int.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#ifdef GREENSEQ_BIGINT
#include <boost/multiprecision/cpp_int.hpp>
#endif

#include "greenseq/error.hpp"

namespace greenseq {

#ifdef GREENSEQ_BIGINT
using Int = boost::multiprecision::cpp_int;
inline constexpr bool kArbitraryPrecision = true;
#else
using Int = std::int64_t;
inline constexpr bool kArbitraryPrecision = false;
#endif

inline int sign(const Int& x) { return (x > 0) - (x < 0); }

#ifdef GREENSEQ_BIGINT

inline Int checked_add(const Int& a, const Int& b) { return a + b; }
inline Int checked_sub(const Int& a, const Int& b) { return a - b; }
inline Int checked_mul(const Int& a, const Int& b) { return a * b; }
inline Int checked_neg(const Int& a) { return -a; }
inline std::size_t hash_int(const Int& x) { return boost::multiprecision::hash_value(x); }

#else

[[noreturn]] void throw_overflow(const char* op, Int a, Int b);

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw_overflow("+", a, b);
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw_overflow("-", a, b);
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw_overflow("*", a, b);
    return r;
}

inline Int checked_neg(Int a) {
    if (a == INT64_MIN) throw_overflow("neg", a, 0);
    return -a;
}

inline std::size_t hash_int(Int x) { return std::hash<Int>{}(x); }

#endif

Int abs_value(const Int& x);
Int gcd(Int a, Int b);
// Least common multiple of two positive integers.
Int lcm(const Int& a, const Int& b);
// Exact division; the caller guarantees divisibility.
Int exact_div(const Int& a, const Int& b);

std::string to_string(const Int& x);
bool fits_int64(const Int& x);
std::int64_t to_int64(const Int& x);

}  // namespace greenseq
