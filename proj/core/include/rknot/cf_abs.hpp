#pragma once

#include <vector>

#include "rknot/fraction.hpp"

namespace rknot {

// Continued fraction [e_1, 2e_2, e_3, 2e_4, ...] stored as the sign vector
// (e_1, ..., e_2n). Quotients at odd positions are +-1, at even positions +-2.
struct SignSeq4 {
    std::vector<int> e;

    size_t size() const { return e.size(); }
    std::vector<Int> quotients() const;
    bool operator==(const SignSeq4& o) const = default;
};

// Normalized: even length >= 2, entries +-1, and the quotient sequence has no
// three consecutive sign changes.
bool is_normalized(const SignSeq4& s);
bool is_biregular4(const SignSeq4& s); // normalized and e_1 == e_2

Fraction eval_seq4(const SignSeq4& s);

// Expansion of r (denominator even, r != 0) into the normalized [+-1, +-2]
// form. Negative r yields the globally negated sequence.
SignSeq4 expand_abs(const Fraction& r);

// Deletes every run of three consecutive sign changes using the identities
// [1,-2,1,-2,x] = x and [2,-1,2,-1,x] = x.
SignSeq4 normalize_seq4(SignSeq4 s);

// Number of islets: positions i with |a_i| = 1 and a_{i-1} = a_{i+1} = -2 a_i.
int islets(const SignSeq4& s);

// Crossing number sum |a_i| - #sign changes - 2*islets; requires a normalized
// sequence whose first two entries agree in sign. The value is the crossing
// number of the fraction's knot when the sequence is its normalized
// expansion (non-canonical sequences can describe larger diagrams).
Int cn_four(const SignSeq4& s);

// True when the sign-change pattern reads the same from both ends; implies
// den^2 == +-2 (mod num) for the evaluated fraction.
bool palindromic_sign_changes4(const SignSeq4& s);

enum class AbsLetter : char { A = 'A', B = 'B', S = 'S' };

// Word over A = [[3,1],[2,1]], B = [[1,1],[2,1]], S = [[1,0],[0,-1]].
struct AbsWord {
    std::vector<AbsLetter> letters;

    bool operator==(const AbsWord& o) const = default;
    std::string str() const;
};

inline Mat2 abs_matrix_a() { return Mat2{3, 1, 2, 1}; }
inline Mat2 abs_matrix_b() { return Mat2{1, 1, 2, 1}; }
inline Mat2 abs_matrix_s() { return Mat2{1, 0, 0, -1}; }

Mat2 word_matrix(const AbsWord& w);
Fraction word_value(const AbsWord& w);

// Raw quotient emission of a word (A -> s,2s; B -> s,-2s then flip; S -> flip).
SignSeq4 word_to_seq4(const AbsWord& w);

// Word of a sequence: inverse of the emission above, two entries per letter
// block. Throws if the sequence is not reachable (odd length, zero entry).
AbsWord seq4_to_word(const SignSeq4& s);

enum class Family4 { torus, twist, stevedore };

struct FamilyWord4 {
    Fraction fraction;
    AbsWord word;
};

// Closed-form words: torus A(BSA)^k -> (4k+3)/(4k+2); twist (ASB)(BSA)^k ->
// (8k+1)/4k; stevedore (ASB)^2k (BSA)^k B -> (4k+1)^2/(4k+2).
FamilyWord4 family_words(Family4 kind, int k);

} // namespace rknot
