#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cellsync {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1)
{
    Rational r{Integer{static_cast<long>(num)}, Integer{static_cast<long>(den)}};
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

} // namespace cellsync
