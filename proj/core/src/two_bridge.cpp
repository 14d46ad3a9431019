#include "rknot/two_bridge.hpp"

#include <algorithm>

namespace rknot {

std::string ConwayForm::str() const {
    std::string s = "C(";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(entries[i]);
    }
    return s + ")";
}

namespace {

Int mod_pos(const Int& x, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int mod_inverse(const Int& x, const Int& m) {
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
        throw DomainError("residue not invertible");
    return inv;
}

Int class_min(const Int& alpha, const Int& b0) {
    if (alpha == 1) return 0;
    Int inv = mod_inverse(b0, alpha);
    return std::min(b0, inv);
}

} // namespace

TwoBridgeKnot canonicalize(const Fraction& r) {
    if (r.is_infinite() || r.is_zero())
        throw DomainError("cannot canonicalize " + r.str());
    Int alpha = ::abs(r.num());
    Int beta = r.num() < 0 ? Int(-r.den()) : r.den();
    if (alpha == 1) return unknot();
    Int b0 = mod_pos(beta, alpha);
    if (b0 == 0) throw DomainError("fraction " + r.str() + " is an integer reciprocal; not a two-bridge form");
    return TwoBridgeKnot{alpha, class_min(alpha, b0), mpz_even_p(alpha.get_mpz_t()) != 0};
}

TwoBridgeKnot unknot() {
    return TwoBridgeKnot{1, 0, false};
}

TwoBridgeKnot mirror(const TwoBridgeKnot& k) {
    if (k.alpha == 1) return k;
    return TwoBridgeKnot{k.alpha, class_min(k.alpha, k.alpha - k.beta), k.is_link};
}

bool is_amphicheiral(const TwoBridgeKnot& k) {
    if (k.alpha == 1) return true;
    return mod_pos(k.beta * k.beta + 1, k.alpha) == 0;
}

Equivalence equivalent(const TwoBridgeKnot& k1, const TwoBridgeKnot& k2) {
    if (k1 == k2) return Equivalence::same;
    if (mirror(k1) == k2) return Equivalence::mirror;
    return Equivalence::different;
}

Equivalence equivalent(const Fraction& r1, const Fraction& r2) {
    return equivalent(canonicalize(r1), canonicalize(r2));
}

Fraction knot_fraction(const TwoBridgeKnot& k) {
    if (k.alpha == 1) return Fraction(1, 1);
    return Fraction(k.alpha, k.beta);
}

Int crossing_number(const TwoBridgeKnot& k) {
    if (k.alpha == 1) return 0;
    return cn_positive(knot_fraction(k));
}

int minimal_b3(const TwoBridgeKnot& k) {
    if (k.is_link) throw DomainError("minimal_b3 requires a knot, got a two-component link");
    if (k.alpha == 1) throw DomainError("the unknot has no two-bridge diagram");
    int l1 = ell(Fraction(k.alpha, k.beta));
    int l2 = ell(Fraction(k.alpha, k.alpha - k.beta));
    return std::min(l1, l2) + 1;
}

Int fibonacci(int n) {
    Int f;
    mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

namespace {

PmWord make_word(std::initializer_list<PmLetter> prefix) {
    PmWord w;
    w.letters = prefix;
    return w;
}

void repeat(PmWord& w, std::initializer_list<PmLetter> block, int times) {
    for (int i = 0; i < times; ++i)
        w.letters.insert(w.letters.end(), block);
}

} // namespace

FamilyInfo family(Family3 kind, int n) {
    using L = PmLetter;
    PmWord w;
    switch (kind) {
        case Family3::torus: {
            // T(2, 2n+1): minimal word P(PM)^{n-1}P^2 of value (2n+1)/2n
            if (n < 1) throw DomainError("torus family requires n >= 1");
            w = make_word({L::P});
            repeat(w, {L::P, L::M}, n - 1);
            repeat(w, {L::P}, 2);
            return {Fraction(2L * n + 1, 2L * n), w, 3 * n + 1};
        }
        case Family3::twist: {
            // S(n + 1/2) = (2n+1)/2
            if (n < 1) throw DomainError("twist family requires n >= 1");
            if (n % 2 == 1) { // n = 2k+1: (PM)^k P^3, diagram 3k+4
                int k = (n - 1) / 2;
                repeat(w, {L::P, L::M}, k);
                repeat(w, {L::P}, 3);
                return {Fraction(2L * n + 1, 2), w, 3 * k + 4};
            }
            int k = n / 2; // n = 2k: P(PM)^{k-1}P^3 of value (4k+1)/(4k-1), diagram 3k+2
            w = make_word({L::P});
            repeat(w, {L::P, L::M}, k - 1);
            repeat(w, {L::P}, 3);
            return {Fraction(2L * n + 1, 2), w, 3 * k + 2};
        }
        case Family3::stevedore: {
            // S(2n+2 + 1/2n) = (2n+1)^2/2n; minimal word P^2(MP)^n(PM)^{n-1}P^2
            if (n < 1) throw DomainError("stevedore family requires n >= 1");
            repeat(w, {L::P}, 2);
            repeat(w, {L::M, L::P}, n);
            repeat(w, {L::P, L::M}, n - 1);
            repeat(w, {L::P}, 2);
            Int a = Int(2L * n + 1) * Int(2L * n + 1);
            return {Fraction(a, Int(2L * n)), w, 6 * n + 2};
        }
        case Family3::fibonacci_obstruction: {
            // S(5 F_{n+1} / (F_{n+1} + F_{n-1})) = P M P^n M P (inf)
            if (n < 2) throw DomainError("fibonacci obstruction family requires n >= 2");
            w = make_word({L::P, L::M});
            repeat(w, {L::P}, n);
            repeat(w, {L::M, L::P}, 1);
            Int alpha = 5 * fibonacci(n + 1);
            Int beta = fibonacci(n + 1) + fibonacci(n - 1);
            return {Fraction(alpha, beta), w, n + 7};
        }
        case Family3::sqrt2_obstruction: {
            // S(n + 1/2n) = (2n^2+1)/2n
            if (n < 2) throw DomainError("sqrt2 obstruction family requires n >= 2");
            Fraction f(Int(2L * n) * Int(n) + 1, Int(2L * n));
            TwoBridgeKnot k = canonicalize(f);
            SignSeq s = expand_pm(knot_fraction(k));
            return {f, seq_to_word(s), minimal_b3(k)};
        }
    }
    throw DomainError("unknown family");
}

} // namespace rknot
