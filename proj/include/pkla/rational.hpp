#pragma once

#include <gmpxx.h>

#include <string>

#include "pkla/errors.hpp"

namespace pkla {

/// Exact rational scalar: arbitrary-precision, always canonical (lowest terms,
/// positive denominator).  All real parameters of the library live here.
using Scalar = mpq_class;

inline Scalar rat(long num, long den = 1) {
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Scalar& q) { return sgn(q) == 0; }

/// Canonical string form "p/q"; the denominator is printed even when it is 1.
inline std::string scalar_to_string(const Scalar& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses "p/q" or a bare integer "p".
inline Scalar parse_scalar(const std::string& s) {
    if (s.empty()) throw SchemaError("empty rational literal");
    try {
        Scalar q(s);
        if (q.get_den() == 0) throw SchemaError("zero denominator in rational literal: '" + s + "'");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw SchemaError("malformed rational literal: '" + s + "'");
    }
}

inline Scalar abs_scalar(const Scalar& q) { return abs(q); }

}  // namespace pkla
