#include "rknot/fraction.hpp"

#include <cctype>

namespace rknot {

Fraction::Fraction(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        if (num_ == 0) throw DomainError("fraction 0/0 is undefined");
        num_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Fraction Fraction::operator-() const {
    if (is_infinite()) return *this;
    Fraction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Fraction Fraction::reciprocal() const {
    if (is_zero()) return infinity();
    return Fraction(den_, num_);
}

Fraction Fraction::operator+(const Fraction& o) const {
    if (is_infinite() || o.is_infinite()) return infinity();
    return Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator*(const Fraction& o) const {
    if (is_infinite() || o.is_infinite()) return infinity();
    return Fraction(num_ * o.num_, den_ * o.den_);
}

bool Fraction::operator<(const Fraction& o) const {
    if (is_infinite()) return false;
    if (o.is_infinite()) return true;
    return num_ * o.den_ < o.num_ * den_;
}

std::string Fraction::str() const {
    return num_.get_str() + "/" + den_.get_str();
}

Fraction Fraction::parse(std::string_view text) {
    auto bad = [&] { return std::invalid_argument("malformed fraction: '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    std::string n, d = "1";
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        n = std::string(text);
    } else {
        n = std::string(text.substr(0, slash));
        d = std::string(text.substr(slash + 1));
    }
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        size_t i = s[0] == '-' ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (!is_int(n) || !is_int(d)) throw bad();
    Int num(n), den(d);
    if (den == 0) throw bad();
    return Fraction(num, den);
}

Mat2 Mat2::operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
}

Fraction mat_apply_inf(const Mat2& m) {
    if (m.c == 0) {
        if (m.a == 0) throw DomainError("degenerate homography");
        return Fraction::infinity();
    }
    return Fraction(m.a, m.c);
}

} // namespace rknot
