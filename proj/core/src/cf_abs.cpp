#include "rknot/cf_abs.hpp"

#include <cassert>

#include "rknot/cf_pm.hpp"

namespace rknot {

std::vector<Int> SignSeq4::quotients() const {
    std::vector<Int> q;
    q.reserve(e.size());
    for (size_t i = 0; i < e.size(); ++i)
        q.emplace_back(e[i] * (i % 2 == 0 ? 1 : 2));
    return q;
}

bool is_normalized(const SignSeq4& s) {
    const auto& e = s.e;
    const size_t n = e.size();
    if (n < 2 || n % 2 != 0) return false;
    for (int v : e)
        if (v != 1 && v != -1) return false;
    for (size_t i = 0; i + 3 < n; ++i)
        if (e[i] * e[i + 1] < 0 && e[i + 1] * e[i + 2] < 0 && e[i + 2] * e[i + 3] < 0)
            return false;
    return true;
}

bool is_biregular4(const SignSeq4& s) {
    return is_normalized(s) && s.e[0] == s.e[1];
}

Fraction eval_seq4(const SignSeq4& s) {
    return eval_cf(s.quotients());
}

SignSeq4 normalize_seq4(SignSeq4 s) {
    auto& e = s.e;
    size_t i = 0;
    while (i + 3 < e.size()) {
        if (e[i] * e[i + 1] < 0 && e[i + 1] * e[i + 2] < 0 && e[i + 2] * e[i + 3] < 0) {
            e.erase(e.begin() + i, e.begin() + i + 4);
            i = i >= 3 ? i - 3 : 0;
        } else {
            ++i;
        }
    }
    return s;
}

SignSeq4 expand_abs(const Fraction& r) {
    if (r.is_infinite() || r.is_zero())
        throw DomainError("expand_abs requires a finite nonzero fraction, got " + r.str());
    if (mpz_even_p(r.den().get_mpz_t()) == 0)
        throw DomainError("expand_abs requires an even denominator, got " + r.str() +
                          " (pass to the conjugate fraction first)");
    SignSeq4 out;
    Int a = r.num(), b = r.den();
    int sign = 1;
    while (true) {
        if (a < 0) { // S
            sign = -sign;
            a = -a;
        }
        Int height = a > b ? a : b;
        if (a == 1 && b == 2) { // B(inf)
            out.e.push_back(sign);
            out.e.push_back(-sign);
            break;
        }
        if (a > b) { // r = ASB((a - 2b)/b)
            out.e.push_back(sign);
            out.e.push_back(sign);
            out.e.push_back(-sign);
            out.e.push_back(sign);
            a -= 2 * b;
        } else { // r = B((b - a)/(2a - b))
            out.e.push_back(sign);
            out.e.push_back(-sign);
            sign = -sign;
            Int na = b - a;
            Int nb = 2 * a - b;
            if (nb < 0) {
                na = -na;
                nb = -nb;
            }
            a = na;
            b = nb;
        }
        Int next_height = (a < 0 ? Int(-a) : a) > b ? (a < 0 ? Int(-a) : a) : b;
        assert(next_height < height);
        (void)height;
        (void)next_height;
    }
    out = normalize_seq4(std::move(out));
    assert(is_normalized(out));
    assert(eval_seq4(out) == r);
    return out;
}

int islets(const SignSeq4& s) {
    auto q = s.quotients();
    int count = 0;
    for (size_t i = 1; i + 1 < q.size(); ++i)
        if ((q[i] == 1 || q[i] == -1) && q[i - 1] == -2 * q[i] && q[i + 1] == -2 * q[i])
            ++count;
    return count;
}

Int cn_four(const SignSeq4& s) {
    if (!is_biregular4(s))
        throw DomainError("cn_four requires a normalized sequence with e_1 = e_2");
    Int sum = 0;
    long changes = 0;
    auto q = s.quotients();
    for (size_t i = 0; i < q.size(); ++i) {
        sum += abs(q[i]);
        if (i + 1 < q.size() && q[i] * q[i + 1] < 0) ++changes;
    }
    return sum - changes - 2 * islets(s);
}

bool palindromic_sign_changes4(const SignSeq4& s) {
    const auto& e = s.e;
    const size_t n = e.size();
    for (size_t k = 0; k + 1 < n; ++k)
        if (e[k] * e[k + 1] != e[n - 2 - k] * e[n - 1 - k]) return false;
    return true;
}

std::string AbsWord::str() const {
    std::string s;
    s.reserve(letters.size());
    for (AbsLetter l : letters) s.push_back(static_cast<char>(l));
    return s;
}

Mat2 word_matrix(const AbsWord& w) {
    Mat2 m = Mat2::identity();
    for (AbsLetter l : w.letters) {
        switch (l) {
            case AbsLetter::A: m = m * abs_matrix_a(); break;
            case AbsLetter::B: m = m * abs_matrix_b(); break;
            case AbsLetter::S: m = m * abs_matrix_s(); break;
        }
    }
    return m;
}

Fraction word_value(const AbsWord& w) {
    return mat_apply_inf(word_matrix(w));
}

SignSeq4 word_to_seq4(const AbsWord& w) {
    SignSeq4 s;
    int sign = 1;
    for (AbsLetter l : w.letters) {
        switch (l) {
            case AbsLetter::A:
                s.e.push_back(sign);
                s.e.push_back(sign);
                break;
            case AbsLetter::B:
                s.e.push_back(sign);
                s.e.push_back(-sign);
                sign = -sign;
                break;
            case AbsLetter::S:
                sign = -sign;
                break;
        }
    }
    return s;
}

AbsWord seq4_to_word(const SignSeq4& s) {
    if (s.size() % 2 != 0) throw DomainError("sequence length must be even");
    AbsWord w;
    int sign = 1;
    for (size_t i = 0; i < s.e.size(); i += 2) {
        int x = s.e[i], y = s.e[i + 1];
        if ((x != 1 && x != -1) || (y != 1 && y != -1))
            throw DomainError("sequence entries must be +-1");
        if (x != sign) { // S
            w.letters.push_back(AbsLetter::S);
            sign = -sign;
        }
        if (y == sign) {
            w.letters.push_back(AbsLetter::A);
        } else {
            w.letters.push_back(AbsLetter::B);
            sign = -sign;
        }
    }
    return w;
}

namespace {

void append_word(AbsWord& w, std::initializer_list<AbsLetter> ls, int times = 1) {
    for (int i = 0; i < times; ++i)
        w.letters.insert(w.letters.end(), ls);
}

} // namespace

FamilyWord4 family_words(Family4 kind, int k) {
    using L = AbsLetter;
    AbsWord w;
    switch (kind) {
        case Family4::torus:
            if (k < 0) throw DomainError("torus family requires k >= 0");
            append_word(w, {L::A});
            append_word(w, {L::B, L::S, L::A}, k);
            return {Fraction(4L * k + 3, 4L * k + 2), w};
        case Family4::twist:
            if (k < 1) throw DomainError("twist family requires k >= 1");
            append_word(w, {L::A, L::S, L::B});
            append_word(w, {L::B, L::S, L::A}, k);
            return {Fraction(8L * k + 1, 4L * k), w};
        case Family4::stevedore:
            if (k < 1) throw DomainError("stevedore family requires k >= 1");
            append_word(w, {L::A, L::S, L::B}, 2 * k);
            append_word(w, {L::B, L::S, L::A}, k);
            append_word(w, {L::B});
            return {Fraction(Int(4L * k + 1) * Int(4L * k + 1), Int(4L * k + 2)), w};
    }
    throw DomainError("unknown family");
}

} // namespace rknot
