#include "rknot/verify.hpp"

#include <numeric>

#include "rknot/interval.hpp"

namespace rknot {

ConwayForm conway_from_curve(const Parametrization& p) {
    if (p.a != 3 && p.a != 4) throw DomainError("curve verification needs a in {3,4}");
    if (std::gcd(p.a, p.b) != 1) throw DomainError("a and b must be coprime");
    if (p.z.is_zero()) throw DomainError("height polynomial is zero");
    if (p.a == 4 && !p.z.is_odd_polynomial())
        throw DomainError("a = 4 requires an odd height polynomial");

    const long long denom = 1LL * p.a * p.b;
    auto cps = enumerate_crossings(p.a, p.b);
    std::vector<int> twists;
    twists.reserve(cps.size());
    for (const CrossingPoint& cp : cps) {
        int dz = certified_sign_diff(p.z, {cp.m_plus, denom}, {cp.m_minus, denom});
        int slope = xy_slope_sign(p.a, p.b, cp.m_plus);
        twists.push_back(dz * slope);
    }
    ConwayForm form = assemble_conway(p.a, p.b, cps, twists);
    if (p.a == 4) {
        for (size_t i = 1; i < form.entries.size(); i += 2)
            if (form.entries[i] == 0)
                throw DomainError("paired crossings cancel; curve is not in general position");
    }
    return form;
}

TwoBridgeKnot identify(const Parametrization& p) {
    Fraction f = conway_from_curve(p).value();
    if (f.is_infinite() || f.is_zero())
        throw DomainError("degenerate Conway form: fraction is 0 or infinite");
    if (f.num() == 1 || f.num() == -1) return unknot();
    return canonicalize(f);
}

TwoBridgeKnot verify_harmonic(const HarmonicKnot& hk) {
    make_harmonic(hk.a, hk.b, hk.c);
    return identify(Parametrization{hk.a, hk.b, chebyshev_poly(hk.c)});
}

} // namespace rknot
