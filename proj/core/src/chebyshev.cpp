#include "rknot/chebyshev.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "rknot/errors.hpp"

namespace rknot {

Polynomial chebyshev_poly(int n) {
    if (n < 0) throw DomainError("chebyshev_poly requires n >= 0");
    Polynomial prev = Polynomial::constant(Rat(1));
    if (n == 0) return prev;
    Polynomial cur = Polynomial::monomial(1, Rat(1));
    for (int i = 2; i <= n; ++i) {
        Polynomial next = cur.scaled(Rat(2)) * Polynomial::monomial(1, Rat(1)) + -prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

int xy_slope_sign(int a, int b, long long m) {
    return sin_sign({m, b}) * sin_sign({m, a});
}

std::vector<CrossingPoint> enumerate_crossings(int a, int b) {
    if ((a != 3 && a != 4) || b < 1 || std::gcd(a, b) != 1)
        throw DomainError("crossings are defined for a in {3,4} and b coprime to a");
    std::vector<CrossingPoint> out;
    for (int k = 1; k < a; ++k) {
        for (int h = 1; 1LL * k * b + 1LL * a * h < 1LL * a * b; ++h) {
            CrossingPoint c;
            c.k = k;
            c.h = h;
            c.m_plus = 1LL * k * b + 1LL * a * h;
            c.m_minus = std::abs(1LL * k * b - 1LL * a * h);
            long long v = c.m_plus % (2LL * b);
            c.xhat = static_cast<int>(std::min(v, 2LL * b - v));
            // y = T_b(t) = cos((k b / a + h) pi)
            c.y_sign = cos_sign({1LL * k * b + 1LL * a * h, a});
            c.on_axis = (c.y_sign == 0);
            assert(c.on_axis == (a == 4 && k == 2));
            out.push_back(c);
        }
    }
    assert(out.size() == static_cast<size_t>((a - 1) * (b - 1) / 2));
    std::sort(out.begin(), out.end(), [](const CrossingPoint& l, const CrossingPoint& r) {
        if (l.xhat != r.xhat) return l.xhat > r.xhat;
        return l.k < r.k;
    });
    return out;
}

} // namespace rknot
