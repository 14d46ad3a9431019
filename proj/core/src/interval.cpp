#include "rknot/interval.hpp"

#include <algorithm>
#include <cassert>

#include "rknot/errors.hpp"

namespace rknot {

namespace {
constexpr mpfr_prec_t kStartPrec = 128;
constexpr mpfr_prec_t kMaxPrec = 1 << 15;
} // namespace

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(Interval o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_rat(const Rat& v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::exact_int(long v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

Interval Interval::cos_pi(RationalAngle a, mpfr_prec_t prec) {
    if (a.den <= 0) throw DomainError("angle denominator must be positive");
    long long period = 2 * a.den;
    long long n = a.num % period;
    if (n < 0) n += period;
    if (n > a.den) n = period - n; // cos(x) = cos(2 pi - x)
    if (n == 0) return exact_int(1, prec);
    if (n == a.den) return exact_int(-1, prec);

    mpfr_t pi_lo, pi_hi, th_lo, th_hi;
    mpfr_inits2(prec, pi_lo, pi_hi, th_lo, th_hi, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_const_pi(pi_hi, MPFR_RNDU);
    mpfr_mul_si(th_lo, pi_lo, n, MPFR_RNDD);
    mpfr_div_si(th_lo, th_lo, a.den, MPFR_RNDD);
    mpfr_mul_si(th_hi, pi_hi, n, MPFR_RNDU);
    mpfr_div_si(th_hi, th_hi, a.den, MPFR_RNDU);
    if (mpfr_cmp(th_hi, pi_hi) > 0) mpfr_set(th_hi, pi_hi, MPFR_RNDU);

    // cos is decreasing on [0, pi]
    Interval r(prec);
    mpfr_cos(r.lo_, th_hi, MPFR_RNDD);
    mpfr_cos(r.hi_, th_lo, MPFR_RNDU);
    mpfr_clears(pi_lo, pi_hi, th_lo, th_hi, static_cast<mpfr_ptr>(nullptr));
    return r;
}

Interval Interval::operator+(const Interval& o) const {
    Interval r(prec_);
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-(const Interval& o) const {
    Interval r(prec_);
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& o) const {
    Interval r(prec_);
    mpfr_t p, best_lo, best_hi;
    mpfr_inits2(prec_, p, best_lo, best_hi, static_cast<mpfr_ptr>(nullptr));
    bool first = true;
    const mpfr_srcptr xs[2] = {lo_, hi_};
    const mpfr_srcptr ys[2] = {o.lo_, o.hi_};
    for (auto x : xs) {
        for (auto y : ys) {
            mpfr_mul(p, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(p, best_lo) < 0) mpfr_set(best_lo, p, MPFR_RNDD);
            mpfr_mul(p, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(p, best_hi) > 0) mpfr_set(best_hi, p, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_set(r.lo_, best_lo, MPFR_RNDD);
    mpfr_set(r.hi_, best_hi, MPFR_RNDU);
    mpfr_clears(p, best_lo, best_hi, static_cast<mpfr_ptr>(nullptr));
    return r;
}

bool Interval::positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::negative() const { return mpfr_sgn(hi_) < 0; }
bool Interval::contains_zero() const { return !positive() && !negative(); }

Rat Interval::lo_rat() const {
    Rat q;
    mpfr_get_q(q.get_mpq_t(), lo_);
    return q;
}

Rat Interval::hi_rat() const {
    Rat q;
    mpfr_get_q(q.get_mpq_t(), hi_);
    return q;
}

Rat Interval::midpoint_rat() const {
    return (lo_rat() + hi_rat()) / 2;
}

Interval eval_poly_interval(const Polynomial& p, RationalAngle angle, mpfr_prec_t prec) {
    Interval x = Interval::cos_pi(angle, prec);
    if (p.is_zero()) return Interval::exact_int(0, prec);
    const auto& c = p.coeffs();
    Interval acc = Interval::from_rat(c.back(), prec);
    for (size_t i = c.size() - 1; i-- > 0;)
        acc = acc * x + Interval::from_rat(c[i], prec);
    return acc;
}

namespace {

template <typename F>
int certified_sign_loop(const F& eval, const char* what) {
    for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
        Interval v = eval(prec);
        if (v.positive()) return 1;
        if (v.negative()) return -1;
    }
    throw DomainError(std::string(what) + ": sign not certifiable, value may be zero");
}

} // namespace

int certified_sign_diff(const Polynomial& p, RationalAngle t_angle, RationalAngle s_angle) {
    return certified_sign_loop(
        [&](mpfr_prec_t prec) {
            return eval_poly_interval(p, t_angle, prec) - eval_poly_interval(p, s_angle, prec);
        },
        "polynomial difference");
}

int certified_sign_at(const Polynomial& p, RationalAngle angle) {
    return certified_sign_loop(
        [&](mpfr_prec_t prec) { return eval_poly_interval(p, angle, prec); },
        "polynomial value");
}

namespace {

// Simplest rational strictly inside (lo, hi), Stern-Brocot style.
Rat simplest_in_open(const Rat& lo, const Rat& hi) {
    assert(lo < hi);
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    Rat n(fl + 1);
    if (n < hi) return n; // fl + 1 > lo always holds
    // both bounds in (fl, fl+1]; flip the fractional parts
    Rat flo = lo - Rat(fl);
    Rat fhi = hi - Rat(fl);
    if (flo == 0) { // lo is an integer: pick fl + 1/ceil-ish below hi
        Rat inv = 1 / fhi;
        Int c;
        mpz_fdiv_q(c.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
        return Rat(fl) + 1 / Rat(c + 1);
    }
    Rat inner = simplest_in_open(1 / fhi, 1 / flo);
    return Rat(fl) + 1 / inner;
}

} // namespace

Rat rational_between_cos(RationalAngle a1, RationalAngle a2) {
    for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
        Interval i1 = Interval::cos_pi(a1, prec);
        Interval i2 = Interval::cos_pi(a2, prec);
        Rat h1 = i1.hi_rat(), l1 = i1.lo_rat();
        Rat h2 = i2.hi_rat(), l2 = i2.lo_rat();
        if (h1 < l2) return simplest_in_open(h1, l2);
        if (h2 < l1) return simplest_in_open(h2, l1);
    }
    throw DomainError("parameters too close: no separating rational found");
}

} // namespace rknot
