#include "rknot/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "rknot/interval.hpp"

namespace rknot {

namespace {

// Groups of crossings sharing an abscissa, increasing x. For a = 3 every
// group is a singleton; for a = 4 groups alternate singleton (on the axis)
// and pair, starting with a singleton at the smallest x.
std::vector<std::vector<size_t>> abscissa_groups(int a, const std::vector<CrossingPoint>& cps) {
    std::vector<std::vector<size_t>> groups;
    for (size_t i = 0; i < cps.size();) {
        size_t j = i + 1;
        while (j < cps.size() && cps[j].xhat == cps[i].xhat) ++j;
        groups.push_back({});
        for (size_t t = i; t < j; ++t) groups.back().push_back(t);
        i = j;
    }
    for (size_t gi = 0; gi < groups.size(); ++gi) {
        if (a == 3) {
            if (groups[gi].size() != 1) throw DomainError("unexpected shared abscissa for a = 3");
        } else {
            bool single = groups[gi].size() == 1;
            if (single != (gi % 2 == 0))
                throw DomainError("abscissa pattern out of step for a = 4");
            if (single != cps[groups[gi][0]].on_axis)
                throw DomainError("single crossing off the axis for a = 4");
        }
    }
    return groups;
}

// Conway sign convention: for a = 3 a right twist is positive at odd
// positions (increasing x, 1-based); for a = 4 a right twist is positive on
// the axis and negative off it.
int twist_from_conway(int a, int conway_sign, size_t position, bool on_axis) {
    if (a == 3) return position % 2 == 1 ? conway_sign : -conway_sign;
    return on_axis ? conway_sign : -conway_sign;
}

} // namespace

ChebyshevDiagram build_diagram(int a, const ConwayForm& form) {
    if (a != 3 && a != 4) throw DomainError("diagrams need a in {3,4}");
    const int b = static_cast<int>(form.entries.size()) + 1;
    for (size_t i = 0; i < form.entries.size(); ++i) {
        int expected = (a == 3 || i % 2 == 0) ? 1 : 2;
        if (std::abs(form.entries[i]) != expected)
            throw DomainError("Conway form does not fit the " + std::to_string(a) +
                              "-strand diagram pattern");
    }

    auto cps = enumerate_crossings(a, b);
    auto groups = abscissa_groups(a, cps);
    if (groups.size() != form.entries.size())
        throw DomainError("Conway form length does not match the diagram");

    ChebyshevDiagram d{a, b, {}};
    d.crossings.resize(cps.size());
    int prev_level = 0;
    for (size_t gi = 0; gi < groups.size(); ++gi) {
        int entry = form.entries[gi];
        for (size_t idx : groups[gi]) {
            DiagramCrossing c;
            c.pt = cps[idx];
            c.conway_sign = entry > 0 ? 1 : -1;
            c.twist = twist_from_conway(a, c.conway_sign, gi + 1, c.pt.on_axis);
            c.required_dz = c.twist * xy_slope_sign(a, b, c.pt.m_plus);
            d.crossings[idx] = c;
        }
        if (a == 3) { // crossing heights must alternate along the diagram
            int level = cps[groups[gi][0]].y_sign;
            if (prev_level != 0 && level == prev_level)
                throw DomainError("diagram heights fail to alternate");
            prev_level = level;
        }
    }
    return d;
}

ConwayForm assemble_conway(int a, int b, const std::vector<CrossingPoint>& cps,
                           const std::vector<int>& twists) {
    assert(cps.size() == twists.size());
    auto groups = abscissa_groups(a, cps);
    ConwayForm form;
    for (size_t gi = 0; gi < groups.size(); ++gi) {
        int entry = 0;
        for (size_t idx : groups[gi]) {
            int twist = twists[idx];
            entry += twist_from_conway(a, twist, gi + 1, cps[idx].on_axis);
        }
        form.entries.push_back(entry);
    }
    (void)b;
    return form;
}

GaussSequence gauss_from_conway(const ChebyshevDiagram& d) {
    std::map<long long, int, std::greater<>> labels; // angle -> g, increasing parameter
    for (const DiagramCrossing& c : d.crossings) {
        auto [it1, ok1] = labels.emplace(c.pt.m_plus, c.required_dz);
        auto [it2, ok2] = labels.emplace(c.pt.m_minus, -c.required_dz);
        if (!ok1 || !ok2) throw DomainError("crossing parameters collide");
    }
    GaussSequence g{d.a, d.b, {}, {}};
    for (auto& [m, v] : labels) {
        g.m.push_back(m);
        g.g.push_back(v);
    }
    return g;
}

int sign_changes(const GaussSequence& g) {
    int c = 0;
    for (size_t i = 0; i + 1 < g.g.size(); ++i)
        if (g.g[i] * g.g[i + 1] < 0) ++c;
    return c;
}

bool is_odd_sequence(const GaussSequence& g) {
    const size_t n = g.g.size();
    const long long full = 1LL * g.a * g.b;
    for (size_t i = 0; i < n; ++i) {
        if (g.m[i] + g.m[n - 1 - i] != full) return false; // parameters not symmetric
        if (g.g[i] != -g.g[n - 1 - i]) return false;
    }
    return true;
}

Polynomial height_polynomial(const GaussSequence& g, bool force_odd) {
    const size_t n = g.g.size();
    if (n == 0) throw DomainError("empty Gauss sequence");
    const long long denom = 1LL * g.a * g.b;

    auto angle = [&](size_t i) { return RationalAngle{g.m[i], denom}; };

    std::vector<size_t> change_at; // change between i and i+1
    for (size_t i = 0; i + 1 < n; ++i)
        if (g.g[i] * g.g[i + 1] < 0) change_at.push_back(i);

    Polynomial c;
    Rat lead(g.g[n - 1]);
    if (!force_odd) {
        std::vector<Rat> roots;
        for (size_t i : change_at)
            roots.push_back(rational_between_cos(angle(i), angle(i + 1)));
        c = Polynomial::from_roots(roots, lead);
    } else {
        if (!is_odd_sequence(g))
            throw DomainError("cannot build an odd height polynomial: Gauss sequence is not odd");
        // Changes come in mirror pairs plus one central change at 0.
        std::vector<Rat> pos_roots;
        bool central = false;
        for (size_t i : change_at) {
            if (2 * i + 2 == n) {
                central = true;
            } else if (2 * i + 2 > n) {
                pos_roots.push_back(rational_between_cos(angle(i), angle(i + 1)));
            }
        }
        if (!central)
            throw DomainError("odd Gauss sequence without a central sign change");
        Polynomial t = Polynomial::monomial(1, Rat(1));
        c = t.scaled(lead);
        for (const Rat& r : pos_roots) {
            // (t - r)(t + r)
            c = c * Polynomial({-r * r, Rat(0), Rat(1)});
        }
        assert(c.is_odd_polynomial());
    }

    assert(c.degree() == static_cast<int>(change_at.size()));
    for (size_t i = 0; i < n; ++i) {
        if (certified_sign_at(c, angle(i)) != g.g[i])
            throw DomainError("height polynomial fails to realize the Gauss sequence");
    }
    return c;
}

namespace {

// Even-denominator fractions alpha/w with 0 < w < alpha describing the knot
// (sign +1) or its mirror (sign -1). There are exactly two.
std::vector<std::pair<Int, int>> even_denominators(const TwoBridgeKnot& k) {
    Int inv;
    mpz_invert(inv.get_mpz_t(), k.beta.get_mpz_t(), k.alpha.get_mpz_t());
    std::vector<std::pair<Int, int>> out;
    for (const Int& u : {k.beta, inv}) {
        if (mpz_even_p(u.get_mpz_t()))
            out.emplace_back(u, 1);
        else
            out.emplace_back(k.alpha - u, -1);
    }
    if (out[0] == out[1]) out.pop_back();
    return out;
}

} // namespace

ConwayForm minimal_conway(const TwoBridgeKnot& k, int a) {
    if (k.is_link) throw DomainError("links have no knot diagram here");
    if (k.alpha == 1) throw DomainError("the unknot has no two-bridge diagram");
    ConwayForm form;
    if (a == 3) {
        SignSeq s1 = expand_pm(Fraction(k.alpha, k.beta));
        SignSeq s2 = expand_pm(Fraction(k.alpha, k.alpha - k.beta));
        if (s1.size() < s2.size()) {
            form.entries = s1.e;
        } else {
            form.entries = s2.e; // the mirror's fraction: negate to come back
            for (int& v : form.entries) v = -v;
        }
        return form;
    }
    if (a != 4) throw DomainError("diagrams need a in {3,4}");
    SignSeq4 best;
    int best_sign = 0;
    for (auto& [w, sgn] : even_denominators(k)) {
        SignSeq4 s = expand_abs(Fraction(k.alpha, w));
        if (best_sign == 0 || s.size() < best.size() ||
            (s.size() == best.size() && sgn > best_sign)) {
            best = s;
            best_sign = sgn;
        }
    }
    auto q = best.quotients();
    for (const Int& v : q)
        form.entries.push_back(static_cast<int>(v.get_si()) * best_sign);
    return form;
}

Parametrization parametrize(const TwoBridgeKnot& k, int a) {
    ConwayForm form = minimal_conway(k, a);
    ChebyshevDiagram d = build_diagram(a, form);
    GaussSequence g = gauss_from_conway(d);
    bool odd = a == 4 || is_amphicheiral(k);
    Polynomial z = height_polynomial(g, odd);
    return Parametrization{a, d.b, z};
}

} // namespace rknot
