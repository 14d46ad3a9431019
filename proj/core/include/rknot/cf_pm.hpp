#pragma once

#include <vector>

#include "rknot/fraction.hpp"

namespace rknot {

// Continued fraction [e_1, ..., e_n] with every partial quotient +1 or -1.
struct SignSeq {
    std::vector<int> e;

    size_t size() const { return e.size(); }
    bool operator==(const SignSeq& o) const = default;
};

// Regular: no entry is zero, the last two entries have equal sign, and a sign
// change is never followed by another sign change. Length one counts as both
// regular and biregular. Biregular additionally requires e_1 e_2 > 0.
bool is_regular(const SignSeq& s);
bool is_biregular(const SignSeq& s);

// [q_1, ..., q_n] = q_1 + 1/(q_2 + 1/(... + 1/q_n)), evaluated exactly via
// the unimodular matrices [[q,1],[1,0]]; intermediate infinities are fine.
Fraction eval_cf(const std::vector<Int>& quotients);
Fraction eval_cf(const std::vector<int>& quotients);

Fraction eval_signseq(const SignSeq& s);

// Unique regular expansion of r > 0 with entries +-1 (subtractive Euclid).
SignSeq expand_pm(const Fraction& r);

// Length of the regular expansion of |r|.
int ell(const Fraction& r);

enum class PmLetter : char { P = 'P', M = 'M' };

// Word in the free monoid generated by P = [[1,1],[1,0]] and M = [[0,1],[1,1]].
struct PmWord {
    std::vector<PmLetter> letters;

    bool operator==(const PmWord& o) const = default;
    std::string str() const;
};

inline Mat2 pm_matrix_p() { return Mat2{1, 1, 1, 0}; }
inline Mat2 pm_matrix_m() { return Mat2{0, 1, 1, 1}; }

Mat2 word_matrix(const PmWord& w);
Fraction word_value(const PmWord& w);
int p_degree(const PmWord& w);
int m_degree(const PmWord& w);

// Regular sequence <-> word: each sign change (e_i, e_{i+1}) becomes one M,
// every remaining entry becomes one P. The word of a regular sequence ends
// in P, and n = p + 2m, cn = p + m.
PmWord seq_to_word(const SignSeq& s);
SignSeq word_to_seq(const PmWord& w);

// Crossing number of a biregular sequence: sum |a_i| minus sign changes.
Int cn_biregular(const SignSeq& s);

// All-positive Euclidean expansion of r > 0 (trailing quotient >= 2 when the
// expansion has more than one term; a leading 0 appears when r < 1).
std::vector<Int> positive_quotients(const Fraction& r);

// Crossing number of r > 0: the sum of its positive quotients.
Int cn_positive(const Fraction& r);

// Residue of the regular length mod 3; tied to the parities of (num, den).
int length_parity_class(const SignSeq& s);

// The three companion fractions of r = alpha/beta > 1 sharing its knot or its
// mirror: beta/alpha, alpha/(alpha-beta), and alpha/beta' where beta' is the
// unique 0 < beta' < alpha with beta*beta' == (-1)^(N-1) (mod alpha).
struct Conjugates {
    Fraction reciprocal;   // beta/alpha
    Fraction complement;   // alpha/(alpha-beta)
    Fraction inverse_rep;  // alpha/beta'
    Int beta_prime;
};
Conjugates conjugates(const Fraction& r);

enum class PalindromyClass { beta2_plus1, beta2_minus1, neither };

struct PalindromyReport {
    PalindromyClass cls;
    bool is_link; // alpha even
};
PalindromyReport palindromy_classify(const Fraction& r);

} // namespace rknot
