#pragma once

#include <string>
#include <vector>

#include "rknot/cf_pm.hpp"
#include "rknot/fraction.hpp"

namespace rknot {

// General Conway normal form C(a_1, ..., a_n); entries are arbitrary integers.
// Evaluate with eval_cf to get a Schubert fraction.
struct ConwayForm {
    std::vector<int> entries;

    bool operator==(const ConwayForm& o) const = default;
    Fraction value() const { return eval_cf(entries); }
    std::string str() const;
};

// Canonical class of a two-bridge knot or link. beta is the smaller of
// {b0, b0^-1 mod alpha} for the reduced residue b0 of the defining fraction,
// which pins down the knot including chirality: the mirror image carries the
// class of alpha - b0. The unknot is stored as alpha = 1, beta = 0.
struct TwoBridgeKnot {
    Int alpha;
    Int beta;
    bool is_link; // alpha even: two components

    bool operator==(const TwoBridgeKnot& o) const = default;
    std::string str() const { return alpha.get_str() + "/" + beta.get_str(); }
};

// Class of S(num/den). The sign of the fraction selects the chirality.
TwoBridgeKnot canonicalize(const Fraction& r);

TwoBridgeKnot mirror(const TwoBridgeKnot& k);
TwoBridgeKnot unknot();

bool is_amphicheiral(const TwoBridgeKnot& k);

enum class Equivalence { same, mirror, different };

Equivalence equivalent(const TwoBridgeKnot& k1, const TwoBridgeKnot& k2);
Equivalence equivalent(const Fraction& r1, const Fraction& r2);

// A fraction alpha/beta > 1 with S(alpha/beta) = k.
Fraction knot_fraction(const TwoBridgeKnot& k);

Int crossing_number(const TwoBridgeKnot& k);

// Smallest b such that the knot fits the 3-strand diagram family with
// y = T_b: one more than the shorter of the two companion expansion lengths.
int minimal_b3(const TwoBridgeKnot& k);

enum class Family3 {
    torus,                 // T(2, 2k+1)
    twist,                 // S(m + 1/2)
    stevedore,             // S(2k+2 + 1/(2k))
    fibonacci_obstruction, // S(5 F_{n+1} / (F_{n+1} + F_{n-1}))
    sqrt2_obstruction,     // S(n + 1/(2n))
};

struct FamilyInfo {
    Fraction fraction; // defining fraction of the family member
    PmWord word;       // shortest known P/M word (may realize the mirror)
    int minimal_b;     // smallest b of a 3-strand diagram
};

FamilyInfo family(Family3 kind, int n);

Int fibonacci(int n);

} // namespace rknot
