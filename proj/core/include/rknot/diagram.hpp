#pragma once

#include <vector>

#include "rknot/cf_abs.hpp"
#include "rknot/cf_pm.hpp"
#include "rknot/chebyshev.hpp"
#include "rknot/polynomial.hpp"
#include "rknot/two_bridge.hpp"

namespace rknot {

// A crossing of the diagram together with its target twist data. twist is
// +1 for a right twist; required_dz is the sign z(t) - z(s) must take at the
// parameter pair (t = cos(m_plus*pi/(ab)), s = cos(m_minus*pi/(ab))) to
// realize it.
struct DiagramCrossing {
    CrossingPoint pt;
    int conway_sign;
    int twist;
    int required_dz;
};

// Conway normal form laid out on the plane curve x = T_a(t), y = T_b(t),
// crossings in increasing-x order.
struct ChebyshevDiagram {
    int a;
    int b;
    std::vector<DiagramCrossing> crossings;
};

// Attach the entries of a Conway form to the crossings of the matching
// curve. For a = 3 the form has b-1 entries of +-1; for a = 4 it alternates
// +-1 and +-2 over b-1 entries, the doubled entries covering the two
// crossings that share an abscissa.
ChebyshevDiagram build_diagram(int a, const ConwayForm& form);

// Inverse step used by the curve verifier: fold per-crossing twist signs
// (parallel to enumerate_crossings order) into a Conway form. For a = 4,
// paired crossings are summed, so entries can be -2, 0 or +2.
ConwayForm assemble_conway(int a, int b, const std::vector<CrossingPoint>& cps,
                           const std::vector<int>& twists);

// Over/under labels g in {+1,-1} indexed by the 2 * #crossings parameter
// values sorted increasingly; m holds the matching angles (units pi/(ab),
// strictly decreasing).
struct GaussSequence {
    int a;
    int b;
    std::vector<long long> m;
    std::vector<int> g;
};

GaussSequence gauss_from_conway(const ChebyshevDiagram& d);

int sign_changes(const GaussSequence& g);
bool is_odd_sequence(const GaussSequence& g); // g(-t) == -g(t)

// Height polynomial with one root strictly between every consecutive pair of
// parameters where g changes sign, so that sign C(t_i) == g_i everywhere;
// degree == number of sign changes. force_odd demands an odd g and returns an
// odd polynomial. Every realized sign is certified by interval evaluation.
Polynomial height_polynomial(const GaussSequence& g, bool force_odd);

struct Parametrization {
    int a;
    int b;
    Polynomial z;
};

// Shortest Conway form the knot admits on the curve family (a = 3: signs of
// the shorter companion expansion; a = 4: shortest even-denominator
// expansion taken over the class with its chirality sign applied).
ConwayForm minimal_conway(const TwoBridgeKnot& k, int a);

// Full pipeline: minimal diagram, Gauss sequence, height polynomial. For
// a = 4 (and for amphicheiral knots with a = 3) the height polynomial is odd.
Parametrization parametrize(const TwoBridgeKnot& k, int a);

} // namespace rknot
