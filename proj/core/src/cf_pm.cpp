#include "rknot/cf_pm.hpp"

#include <cassert>

namespace rknot {

bool is_regular(const SignSeq& s) {
    const auto& e = s.e;
    const size_t n = e.size();
    if (n == 0) return false;
    for (int v : e)
        if (v != 1 && v != -1) return false;
    if (n == 1) return true;
    if (e[n - 2] * e[n - 1] < 0) return false;
    for (size_t i = 0; i + 2 < n; ++i)
        if (e[i] * e[i + 1] < 0 && e[i + 1] * e[i + 2] < 0) return false;
    return true;
}

bool is_biregular(const SignSeq& s) {
    if (!is_regular(s)) return false;
    return s.size() == 1 || s.e[0] * s.e[1] > 0;
}

Fraction eval_cf(const std::vector<Int>& quotients) {
    if (quotients.empty()) throw DomainError("empty continued fraction");
    Mat2 m = Mat2::identity();
    for (const Int& q : quotients) m = m * Mat2{q, 1, 1, 0};
    return mat_apply_inf(m);
}

Fraction eval_cf(const std::vector<int>& quotients) {
    std::vector<Int> q(quotients.begin(), quotients.end());
    return eval_cf(q);
}

Fraction eval_signseq(const SignSeq& s) {
    return eval_cf(s.e);
}

SignSeq expand_pm(const Fraction& r) {
    if (r.is_infinite() || r.sign() <= 0)
        throw DomainError("expand_pm requires a finite fraction > 0, got " + r.str());
    Int a = r.num(), b = r.den();
    SignSeq out;
    int sign = 1;
    while (true) {
        if (a == b) {
            out.e.push_back(sign);
            break;
        }
        if (a > b) {
            // r = P(b / (a-b))
            out.e.push_back(sign);
            Int t = a - b;
            a = b;
            b = t;
        } else {
            // r = M((b-a) / a), which negates the remaining expansion
            out.e.push_back(sign);
            out.e.push_back(-sign);
            sign = -sign;
            Int t = b - a;
            b = a;
            a = t;
        }
    }
    assert(is_regular(out));
    return out;
}

int ell(const Fraction& r) {
    return static_cast<int>(expand_pm(r.abs()).size());
}

std::string PmWord::str() const {
    std::string s;
    s.reserve(letters.size());
    for (PmLetter l : letters) s.push_back(static_cast<char>(l));
    return s;
}

Mat2 word_matrix(const PmWord& w) {
    Mat2 m = Mat2::identity();
    for (PmLetter l : w.letters)
        m = m * (l == PmLetter::P ? pm_matrix_p() : pm_matrix_m());
    return m;
}

Fraction word_value(const PmWord& w) {
    return mat_apply_inf(word_matrix(w));
}

int p_degree(const PmWord& w) {
    int n = 0;
    for (PmLetter l : w.letters) n += (l == PmLetter::P);
    return n;
}

int m_degree(const PmWord& w) {
    int n = 0;
    for (PmLetter l : w.letters) n += (l == PmLetter::M);
    return n;
}

PmWord seq_to_word(const SignSeq& s) {
    if (!is_regular(s)) throw DomainError("seq_to_word requires a regular sequence");
    PmWord w;
    const auto& e = s.e;
    for (size_t i = 0; i < e.size();) {
        if (i + 1 < e.size() && e[i] * e[i + 1] < 0) {
            w.letters.push_back(PmLetter::M);
            i += 2;
        } else {
            w.letters.push_back(PmLetter::P);
            i += 1;
        }
    }
    return w;
}

SignSeq word_to_seq(const PmWord& w) {
    if (w.letters.empty() || w.letters.back() != PmLetter::P)
        throw DomainError("word_to_seq requires a word ending in P");
    SignSeq s;
    int sign = 1;
    for (PmLetter l : w.letters) {
        if (l == PmLetter::P) {
            s.e.push_back(sign);
        } else {
            s.e.push_back(sign);
            s.e.push_back(-sign);
            sign = -sign;
        }
    }
    return s;
}

Int cn_biregular(const SignSeq& s) {
    if (!is_biregular(s)) throw DomainError("cn_biregular requires a biregular sequence");
    Int total = static_cast<long>(s.size());
    long changes = 0;
    for (size_t i = 0; i + 1 < s.size(); ++i)
        if (s.e[i] * s.e[i + 1] < 0) ++changes;
    return total - changes;
}

std::vector<Int> positive_quotients(const Fraction& r) {
    if (r.is_infinite() || r.sign() <= 0)
        throw DomainError("positive quotients require a finite fraction > 0, got " + r.str());
    std::vector<Int> q;
    Int a = r.num(), b = r.den();
    while (b != 0) {
        Int quo, rem;
        mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        q.push_back(quo);
        a = b;
        b = rem;
    }
    return q;
}

Int cn_positive(const Fraction& r) {
    Int sum = 0;
    for (const Int& q : positive_quotients(r)) sum += q;
    return sum;
}

int length_parity_class(const SignSeq& s) {
    if (!is_regular(s)) throw DomainError("length_parity_class requires a regular sequence");
    return static_cast<int>(s.size() % 3);
}

Conjugates conjugates(const Fraction& r) {
    if (r.is_infinite() || r.num() <= r.den() || r.den() <= 0)
        throw DomainError("conjugates require alpha/beta > 1, got " + r.str());
    const Int& alpha = r.num();
    const Int& beta = r.den();
    Int n = cn_positive(r);

    Int inv;
    if (mpz_invert(inv.get_mpz_t(), beta.get_mpz_t(), alpha.get_mpz_t()) == 0)
        throw DomainError("denominator not invertible modulo numerator");
    Int beta_prime = inv;
    if (mpz_even_p(Int(n - 1).get_mpz_t()) == 0) // N even: beta*beta' == -1 (mod alpha)
        beta_prime = alpha - inv;

    return Conjugates{
        Fraction(beta, alpha),
        Fraction(alpha, alpha - beta),
        Fraction(alpha, beta_prime),
        beta_prime,
    };
}

PalindromyReport palindromy_classify(const Fraction& r) {
    if (r.is_infinite() || r.num() <= 0 || r.den() <= 0 || r.num() < r.den())
        throw DomainError("palindromy_classify requires alpha/beta >= 1, got " + r.str());
    const Int& alpha = r.num();
    Int b2 = (r.den() * r.den()) % alpha;
    PalindromyClass cls = PalindromyClass::neither;
    if (b2 == (alpha - 1) % alpha)
        cls = PalindromyClass::beta2_minus1;
    else if (b2 == 1 % alpha)
        cls = PalindromyClass::beta2_plus1;
    return PalindromyReport{cls, mpz_even_p(alpha.get_mpz_t()) != 0};
}

} // namespace rknot
