#pragma once

#include <mpfr.h>

#include "rknot/angles.hpp"
#include "rknot/fraction.hpp"
#include "rknot/polynomial.hpp"

namespace rknot {

// Closed interval [lo, hi] with outward-rounded endpoints at a fixed
// precision. Only the operations the certified sign evaluation needs.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(Interval o);
    ~Interval();

    static Interval from_rat(const Rat& v, mpfr_prec_t prec);
    static Interval exact_int(long v, mpfr_prec_t prec);

    // cos(num*pi/den), monotonicity handled piecewise on [0, pi].
    static Interval cos_pi(RationalAngle a, mpfr_prec_t prec);

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator*(const Interval& o) const;

    bool positive() const; // lo > 0
    bool negative() const; // hi < 0
    bool contains_zero() const;

    // Exact dyadic midpoint (lo + hi)/2 as a rational.
    Rat midpoint_rat() const;
    Rat lo_rat() const;
    Rat hi_rat() const;

    mpfr_prec_t precision() const { return prec_; }

private:
    mpfr_t lo_;
    mpfr_t hi_;
    mpfr_prec_t prec_;
};

// Interval evaluation of p at cos(angle) with all coefficient conversions
// rounded outward.
Interval eval_poly_interval(const Polynomial& p, RationalAngle angle, mpfr_prec_t prec);

// Certified sign of p(cos(t_angle)) - p(cos(s_angle)) or of p(cos(angle)),
// escalating precision until the interval excludes zero. Throws DomainError
// if no sign can be certified at the precision cap (value may be zero).
int certified_sign_diff(const Polynomial& p, RationalAngle t_angle, RationalAngle s_angle);
int certified_sign_at(const Polynomial& p, RationalAngle angle);

// A rational number certifiably strictly between cos(lo_angle) and
// cos(hi_angle) (the two cosines need not be ordered).
Rat rational_between_cos(RationalAngle a1, RationalAngle a2);

} // namespace rknot
