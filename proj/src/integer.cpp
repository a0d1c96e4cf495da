#include "greenseq/integer.hpp"

#include <limits>
#include <sstream>

namespace greenseq {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NotSkewSymmetrizable: return "NotSkewSymmetrizable";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NotSignCoherentInput: return "NotSignCoherentInput";
    case ErrorKind::NonNegativityViolation: return "NonNegativityViolation";
    case ErrorKind::InvalidSplit: return "InvalidSplit";
    case ErrorKind::InvalidInputSequence: return "InvalidInputSequence";
    case ErrorKind::ShapeViolation: return "ShapeViolation";
    case ErrorKind::InternalSignViolation: return "InternalSignViolation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

#ifndef GREENSEQ_BIGINT
void throw_overflow(const char* op, Int a, Int b) {
    std::ostringstream msg;
    msg << "64-bit overflow in " << a << ' ' << op << ' ' << b
        << " (rebuild with GREENSEQ_BIGINT=ON for arbitrary precision)";
    throw Error(ErrorKind::ArithmeticOverflow, msg.str());
}
#endif

Int abs_value(const Int& x) { return x < 0 ? checked_neg(x) : x; }

Int gcd(Int a, Int b) {
    a = abs_value(a);
    b = abs_value(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

Int lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / gcd(a, b), b);
}

Int exact_div(const Int& a, const Int& b) { return a / b; }

std::string to_string(const Int& x) {
#ifdef GREENSEQ_BIGINT
    return x.str();
#else
    return std::to_string(x);
#endif
}

bool fits_int64(const Int& x) {
#ifdef GREENSEQ_BIGINT
    return x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max();
#else
    (void)x;
    return true;
#endif
}

std::int64_t to_int64(const Int& x) {
    if (!fits_int64(x)) {
        throw Error(ErrorKind::ArithmeticOverflow, "value " + to_string(x) + " does not fit in 64 bits");
    }
    return static_cast<std::int64_t>(x);
}

}  // namespace greenseq
