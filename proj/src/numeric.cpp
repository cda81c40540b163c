#include "bunmot/numeric.hpp"

#include <cassert>

namespace bunmot {

Integer ipow(const Integer& b, std::int64_t e) {
    assert(e >= 0);
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

Rational rpow(const Integer& b, std::int64_t e) {
    if (e >= 0) return Rational(ipow(b, e));
    Rational r(Integer(1), ipow(b, -e));
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

} // namespace bunmot
