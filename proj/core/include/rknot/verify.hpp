#pragma once

#include "rknot/diagram.hpp"
#include "rknot/harmonic.hpp"
#include "rknot/two_bridge.hpp"

namespace rknot {

// Recompute the Conway form of the space curve x = T_a(t), y = T_b(t),
// z = C(t) from the curve itself: every crossing's over/under strand comes
// from a certified interval evaluation of C at the two exact parameters,
// never from the data that produced C. For a = 4, C must be odd so the
// paired crossings carry equal signs.
ConwayForm conway_from_curve(const Parametrization& p);

// Canonical class of the curve's knot type.
TwoBridgeKnot identify(const Parametrization& p);

// identify with z = T_c; the independent check of the closed-form
// classification of harmonic curves.
TwoBridgeKnot verify_harmonic(const HarmonicKnot& hk);

} // namespace rknot
