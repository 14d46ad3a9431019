#pragma once

namespace rknot {

// The angle num*pi/den, den > 0. Sign queries reduce num modulo 2*den.
struct RationalAngle {
    long long num;
    long long den;
};

// Exact sign of sin(num*pi/den): reduce num mod 2*den to n; the result is
// 0 for n in {0, den}, +1 for 0 < n < den, -1 otherwise.
int sin_sign(RationalAngle a);

// Exact sign of cos(num*pi/den) via cos x = sin(x + pi/2).
int cos_sign(RationalAngle a);

} // namespace rknot
