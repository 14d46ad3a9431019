#include "rknot/harmonic.hpp"

#include <cassert>
#include <numeric>

#include "rknot/angles.hpp"

namespace rknot {

HarmonicKnot make_harmonic(int a, int b, int c) {
    if (a < 2 || b < 1 || c < 1)
        throw DomainError("harmonic curve indices must be positive");
    if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1)
        throw DomainError("harmonic curve indices must be pairwise coprime");
    return HarmonicKnot{a, b, c};
}

std::vector<std::pair<int, int>> crossing_params(int a, int b) {
    if (a < 2 || b < 2 || std::gcd(a, b) != 1)
        throw DomainError("crossing parameters need coprime a, b >= 2");
    std::vector<std::pair<int, int>> out;
    for (int k = 1; k < a; ++k)
        for (int h = 1; 1LL * k * b + 1LL * a * h < 1LL * a * b; ++h)
            out.emplace_back(k, h);
    assert(out.size() == static_cast<size_t>((a - 1) * (b - 1) / 2));
    return out;
}

int crossing_sign(const HarmonicKnot& hk, int k, int h) {
    const long long a = hk.a, b = hk.b, c = hk.c;
    if (k < 1 || k >= a || h < 1 || k * b + a * h >= a * b)
        throw DomainError("not a crossing parameter pair");
    // z(t) - z(s) = -2 sin(c h pi / b) sin(c k pi / a)
    int dz = -sin_sign({c * h, b}) * sin_sign({c * k, a});
    // x'(t) y'(t) ~ (-1)^(h+k) sin(a h pi / b) sin(b k pi / a)
    int slope = ((h + k) % 2 == 0 ? 1 : -1) * sin_sign({a * h, b}) * sin_sign({b * k, a});
    if (dz == 0 || slope == 0)
        throw DomainError("degenerate crossing: indices are not pairwise coprime");
    return dz * slope;
}

ConwayForm conway_exact(const HarmonicKnot& hk) {
    if (hk.a != 3 && hk.a != 4)
        throw DomainError("diagram assembly needs a in {3,4}");
    const long long a = hk.a, b = hk.b, c = hk.c;
    auto cps = enumerate_crossings(hk.a, hk.b);
    std::vector<int> twists;
    twists.reserve(cps.size());
    for (const CrossingPoint& cp : cps) {
        // T_c(t) - T_c(s) = -2 sin(c(m+ + m-) pi / 2ab) sin(c(m+ - m-) pi / 2ab)
        int dz = -sin_sign({c * (cp.m_plus + cp.m_minus), 2 * a * b}) *
                 sin_sign({c * (cp.m_plus - cp.m_minus), 2 * a * b});
        int slope = xy_slope_sign(hk.a, hk.b, cp.m_plus);
        if (dz == 0 || slope == 0)
            throw DomainError("degenerate crossing: indices are not pairwise coprime");
        twists.push_back(dz * slope);
    }
    ConwayForm form = assemble_conway(hk.a, hk.b, cps, twists);
    for (size_t i = 0; i < form.entries.size(); ++i) {
        int expected = (hk.a == 3 || i % 2 == 0) ? 1 : 2;
        if (std::abs(form.entries[i]) != expected)
            throw DomainError("paired crossings disagree; z is not odd-symmetric");
    }
    return form;
}

SignSeq schubert_h3(int b, int c) {
    if (b < 4 || b % 3 != 1)
        throw DomainError("schubert_h3 needs b = 3n+1 (route b = 3n+2 through the mirror)");
    long long lambda2 = 2LL * b - c;
    if (c < 1 || lambda2 <= 0 || lambda2 % 3 != 0)
        throw DomainError("schubert_h3 needs c = 2b - 3*lambda with lambda > 0");
    long long lambda = lambda2 / 3;
    if (2 * lambda >= b) throw DomainError("schubert_h3 needs lambda < b/2 (i.e. c > b/2)");
    if (std::gcd(lambda, static_cast<long long>(b)) != 1)
        throw DomainError("schubert_h3 needs gcd(lambda, b) = 1");
    SignSeq s;
    for (int k = 1; k < b; ++k) {
        int e = sin_sign({k * lambda, b});
        assert(e != 0);
        s.e.push_back(e);
    }
    assert(is_biregular(s));
    return s;
}

SignSeq4 schubert_h4(int b, int c) {
    if (b < 3 || b % 2 == 0 || c < 1 || c % 2 == 0)
        throw DomainError("schubert_h4 needs odd b >= 3 and odd c");
    if ((c - b) % 4 == 0) throw DomainError("schubert_h4 needs b != c mod 4");
    if (std::gcd(b, c) != 1) throw DomainError("schubert_h4 needs gcd(b, c) = 1");
    if (c <= b || c >= 3 * b) throw DomainError("schubert_h4 needs b < c < 3b");
    long long lambda = (3LL * b - c) / 4;
    SignSeq4 s;
    for (int j = 1; j < b; ++j) {
        int e = -sin_sign({(b - j) * lambda, b});
        assert(e != 0);
        s.e.push_back(e);
    }
    assert(is_normalized(s) && s.e[0] == s.e[1]);
    return s;
}

namespace {

constexpr int kMaxReduceSteps = 100000;

ReducedPair reduce(int b, int c, int step, int span) {
    // step 3: swap / c' = |b - step*mu| when c == b (mod step) / c' = |span*b - step*mu|
    int parity = 0;
    for (int guard = 0; guard < kMaxReduceSteps; ++guard) {
        int low = std::min(b, c);
        if ((step == 3 && low <= 2) || (step == 4 && low <= 1))
            return ReducedPair{b, c, parity, true};
        if (c < b) {
            std::swap(b, c);
            ++parity;
            continue;
        }
        if ((c - b) % step == 0) {
            int mu = (c - b) / step;
            c = std::abs(b - step * mu);
            ++parity;
            continue;
        }
        if (c > span * b) {
            int mu = (c - span * b) / step;
            c = std::abs(span * b - step * mu);
            ++parity;
            continue;
        }
        return ReducedPair{b, c, parity, false};
    }
    throw DomainError("reduction failed to terminate");
}

} // namespace

ReducedPair reduce_h3(int b, int c) {
    make_harmonic(3, b, c);
    return reduce(b, c, 3, 2);
}

ReducedPair reduce_h4(int b, int c) {
    make_harmonic(4, b, c);
    return reduce(b, c, 4, 3);
}

Fraction h3_fraction(int b, int c) {
    ReducedPair r = reduce_h3(b, c);
    if (r.trivial) return Fraction(1, 1);
    Fraction f = r.b % 3 == 1 ? eval_signseq(schubert_h3(r.b, r.c))
                              : -eval_signseq(schubert_h3(r.c, r.b));
    return r.parity % 2 == 0 ? f : -f;
}

Fraction h4_fraction(int b, int c) {
    ReducedPair r = reduce_h4(b, c);
    if (r.trivial) return Fraction(1, 1);
    Fraction f = eval_seq4(schubert_h4(r.b, r.c));
    return r.parity % 2 == 0 ? f : -f;
}

TwoBridgeKnot h3_class(int b, int c) {
    Fraction f = h3_fraction(b, c);
    return f.num() == 1 || f.num() == -1 ? unknot() : canonicalize(f);
}

TwoBridgeKnot h4_class(int b, int c) {
    Fraction f = h4_fraction(b, c);
    return f.num() == 1 || f.num() == -1 ? unknot() : canonicalize(f);
}

namespace {

Int mod_pos(const Int& x, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::optional<HarmonicWitness> classify_witness(const TwoBridgeKnot& k, const TwoBridgeKnot& cand,
                                                int b, int c) {
    switch (equivalent(cand, k)) {
        case Equivalence::same: return HarmonicWitness{b, c, false};
        case Equivalence::mirror: return HarmonicWitness{b, c, true};
        case Equivalence::different: return std::nullopt;
    }
    return std::nullopt;
}

} // namespace

std::optional<HarmonicWitness> is_harmonic3(const TwoBridgeKnot& k) {
    if (k.is_link) throw DomainError("harmonic classification applies to knots");
    if (k.alpha == 1) return std::nullopt;
    Int b2 = mod_pos(k.beta * k.beta, k.alpha);
    if (b2 != 1 && b2 != k.alpha - 1) return std::nullopt; // beta^2 != +-1 (mod alpha)
    long n = crossing_number(k).get_si();
    for (int b = static_cast<int>(n) + 1; 2 * b < 3 * n; ++b) {
        int c = static_cast<int>(3 * n) - b;
        if (b % 3 == 0 || std::gcd(b, c) != 1) continue;
        if (auto w = classify_witness(k, h3_class(b, c), b, c)) return w;
    }
    return std::nullopt;
}

std::optional<HarmonicWitness> is_harmonic4(const TwoBridgeKnot& k) {
    if (k.is_link) throw DomainError("harmonic classification applies to knots");
    if (k.alpha == 1) return std::nullopt;
    Int inv;
    mpz_invert(inv.get_mpz_t(), k.beta.get_mpz_t(), k.alpha.get_mpz_t());
    bool obstruction_passed = false;
    for (const Int& u : {k.beta, inv, Int(k.alpha - k.beta), Int(k.alpha - inv)}) {
        Int u2 = mod_pos(u * u, k.alpha);
        if (u2 == mod_pos(Int(2), k.alpha) || u2 == mod_pos(Int(-2), k.alpha))
            obstruction_passed = true;
    }
    if (!obstruction_passed) return std::nullopt;
    long n = crossing_number(k).get_si();
    for (int b = 3; b <= n; b += 2) {
        long long c = 4LL * n + 2 - 3LL * b;
        if (c <= b || c >= 3LL * b) continue;
        if (std::gcd(static_cast<long long>(b), c) != 1) continue;
        int ci = static_cast<int>(c);
        if (auto w = classify_witness(k, h4_class(b, ci), b, ci)) return w;
    }
    return std::nullopt;
}

} // namespace rknot
