#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rknot/cf_abs.hpp"
#include "rknot/cf_pm.hpp"
#include "rknot/diagram.hpp"
#include "rknot/two_bridge.hpp"

namespace rknot {

// Space curve x = T_a(t), y = T_b(t), z = T_c(t); non-singular exactly when
// a, b, c are pairwise coprime.
struct HarmonicKnot {
    int a;
    int b;
    int c;
};

HarmonicKnot make_harmonic(int a, int b, int c); // validates pairwise coprimality

// Crossing index pairs (k, h) with k/a + h/b < 1: exactly (a-1)(b-1)/2 pairs.
std::vector<std::pair<int, int>> crossing_params(int a, int b);

// Exact twist sign at the crossing (k, h): the sign of
// (z(t) - z(s)) x'(t) y'(t); +1 is a right twist. Never 0 for valid inputs.
int crossing_sign(const HarmonicKnot& hk, int k, int h);

// Conway form of the curve's diagram computed purely from exact sine signs.
ConwayForm conway_exact(const HarmonicKnot& hk);

// Sequence e_k = sign sin(k lambda pi / b) of length b-1 for b = 3n+1 and
// c = 2b - 3 lambda, 0 < lambda < b/2, gcd(lambda, b) = 1; it evaluates to a
// Schubert fraction of the curve with a = 3 and crossing number (b+c)/3.
SignSeq schubert_h3(int b, int c);

// Sequence e_j = -sign sin((b-j)(3b-c)pi/(4b)), j = 1..b-1, for odd coprime
// b < c < 3b with b != c mod 4; evaluates to a Schubert fraction of the
// curve with a = 4 and crossing number (3b+c-2)/4.
SignSeq4 schubert_h4(int b, int c);

// Reduction to the unique normal-range pair, counting mirror flips.
// trivial means the curve is the unknot (fewer than two strands crossing).
struct ReducedPair {
    int b;
    int c;
    int parity; // mirror applications mod 2
    bool trivial;
};

ReducedPair reduce_h3(int b, int c); // ends with b < c < 2b, b + c == 0 mod 3
ReducedPair reduce_h4(int b, int c); // ends with b < c < 3b, b != c mod 4

// Signed Schubert fraction / canonical class of the curve, any valid (b, c).
Fraction h3_fraction(int b, int c);
Fraction h4_fraction(int b, int c);
TwoBridgeKnot h3_class(int b, int c);
TwoBridgeKnot h4_class(int b, int c);

struct HarmonicWitness {
    int b;
    int c;
    bool mirrored; // the witness realizes the mirror image of the input
};

// Search the finite normal range for a pair realizing the knot (or its
// mirror). Returns nothing when the modular obstruction already fails or
// the search is exhausted.
std::optional<HarmonicWitness> is_harmonic3(const TwoBridgeKnot& k);
std::optional<HarmonicWitness> is_harmonic4(const TwoBridgeKnot& k);

} // namespace rknot
