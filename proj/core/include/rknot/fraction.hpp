#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "rknot/errors.hpp"

namespace rknot {

using Int = mpz_class;
using Rat = mpq_class;

// Exact rational num/den in lowest terms. den > 0 and the sign lives in num,
// except for the single point at infinity which is stored as 1/0.
class Fraction {
public:
    Fraction() : num_(0), den_(1) {}
    Fraction(Int num, Int den);
    Fraction(long num, long den) : Fraction(Int(num), Int(den)) {}

    static Fraction infinity() { return Fraction(inf_tag{}); }
    static Fraction parse(std::string_view text);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_infinite() const { return den_ == 0; }
    bool is_zero() const { return num_ == 0 && den_ != 0; }
    int sign() const { return sgn(num_); }

    Fraction operator-() const;
    Fraction abs() const { return num_ < 0 ? -*this : *this; }
    Fraction reciprocal() const;

    Fraction operator+(const Fraction& o) const;
    Fraction operator*(const Fraction& o) const;

    bool operator==(const Fraction& o) const = default;
    bool operator<(const Fraction& o) const;
    bool operator>(const Fraction& o) const { return o < *this; }
    bool operator<=(const Fraction& o) const { return !(o < *this); }
    bool operator>=(const Fraction& o) const { return !(*this < o); }

    std::string str() const;

private:
    struct inf_tag {};
    explicit Fraction(inf_tag) : num_(1), den_(0) {}

    Int num_;
    Int den_;
};

// 2x2 integer matrix, row-major [[a, b], [c, d]].
struct Mat2 {
    Int a, b, c, d;

    static Mat2 identity() { return {1, 0, 0, 1}; }
    Mat2 operator*(const Mat2& o) const;
    bool operator==(const Mat2& o) const = default;
    Int det() const { return a * d - b * c; }
};

// Image of infinity under the homography, i.e. the first column a/c.
Fraction mat_apply_inf(const Mat2& m);

} // namespace rknot
