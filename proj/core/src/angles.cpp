#include "rknot/angles.hpp"

#include "rknot/errors.hpp"

namespace rknot {

int sin_sign(RationalAngle a) {
    if (a.den <= 0) throw DomainError("angle denominator must be positive");
    long long period = 2 * a.den;
    long long n = a.num % period;
    if (n < 0) n += period;
    if (n == 0 || n == a.den) return 0;
    return n < a.den ? 1 : -1;
}

int cos_sign(RationalAngle a) {
    return sin_sign(RationalAngle{2 * a.num + a.den, 2 * a.den});
}

} // namespace rknot
