#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace bunmot {

using Integer = mpz_class;
using Rational = mpq_class;

/// b^e for e >= 0.
Integer ipow(const Integer& b, std::int64_t e);
/// b^e as an exact rational; negative exponents allowed for b != 0.
Rational rpow(const Integer& b, std::int64_t e);
/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

} // namespace bunmot
