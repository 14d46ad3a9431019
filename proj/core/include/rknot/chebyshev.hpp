#pragma once

#include <vector>

#include "rknot/angles.hpp"
#include "rknot/polynomial.hpp"

namespace rknot {

// T_n with T_n(cos u) = cos(n u), integer coefficients.
Polynomial chebyshev_poly(int n);

// Double point of the plane curve x = T_a(t), y = T_b(t). The two parameter
// values are cos(m_plus*pi/(ab)) and cos(m_minus*pi/(ab)) with
// m_plus = k*b + a*h and m_minus = |k*b - a*h|. The abscissa is
// x = cos(xhat*pi/b). For a = 4 the crossings on the axis y = 0 (strand
// k = 2) sit alone at even xhat; all others share their abscissa in pairs.
struct CrossingPoint {
    int k;  // strand index, 1..a-1
    int h;  // height index, k/a + h/b < 1
    long long m_plus;
    long long m_minus;
    int xhat;     // 1..b-1
    bool on_axis; // y == 0 (only for a = 4)
    int y_sign;   // sign of the y coordinate (0 when on the axis)
};

// All (a-1)(b-1)/2 crossings, sorted by increasing x (decreasing xhat);
// crossings sharing an abscissa are adjacent, lower strand index first.
std::vector<CrossingPoint> enumerate_crossings(int a, int b);

// Exact sign of x'(t) y'(t) at the parameter cos(m*pi/(ab)):
// proportional to sin(m*pi/b) * sin(m*pi/a).
int xy_slope_sign(int a, int b, long long m);

} // namespace rknot
