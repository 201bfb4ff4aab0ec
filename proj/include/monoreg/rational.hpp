#ifndef MONOREG_RATIONAL_HPP
#define MONOREG_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "monoreg/errors.hpp"

namespace monoreg {

// Exact rational arithmetic; weights and threshold sums are never rounded.
using Rational = mpq_class;

// Builds num/den in lowest terms. den must be nonzero.
inline Rational rational(std::int64_t num, std::int64_t den) {
    if (den == 0)
        throw ValidationError("rational with zero denominator");
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

// Numerator/denominator of a canonical rational as 64-bit integers;
// fails if the value is too large to serialize.
inline std::int64_t rational_num_i64(const Rational& r) {
    if (!r.get_num().fits_slong_p())
        throw ValidationError("rational numerator exceeds 64-bit range: " + r.get_str());
    return static_cast<std::int64_t>(r.get_num().get_si());
}

inline std::int64_t rational_den_i64(const Rational& r) {
    if (!r.get_den().fits_slong_p())
        throw ValidationError("rational denominator exceeds 64-bit range: " + r.get_str());
    return static_cast<std::int64_t>(r.get_den().get_si());
}

// "num/den", or just "num" for integers.
inline std::string rational_str(const Rational& r) {
    return r.get_str();
}

} // namespace monoreg

#endif
