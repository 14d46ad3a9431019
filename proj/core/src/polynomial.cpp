#include "rknot/polynomial.hpp"

namespace rknot {

namespace {
const Rat kZero(0);
} // namespace

Polynomial::Polynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    trim();
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::constant(const Rat& c) {
    return Polynomial({c});
}

Polynomial Polynomial::monomial(int degree, const Rat& c) {
    std::vector<Rat> v(degree + 1, kZero);
    v[degree] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(const std::vector<Rat>& roots, const Rat& lead) {
    Polynomial p = constant(lead);
    for (const Rat& r : roots)
        p = p * Polynomial({-r, Rat(1)});
    return p;
}

const Rat& Polynomial::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

bool Polynomial::is_odd_polynomial() const {
    for (size_t i = 0; i < c_.size(); i += 2)
        if (c_[i] != 0) return false;
    return true;
}

bool Polynomial::is_even_polynomial() const {
    for (size_t i = 1; i < c_.size(); i += 2)
        if (c_[i] != 0) return false;
    return true;
}

Rat Polynomial::operator()(const Rat& t) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= t;
        acc += c_[i];
    }
    return acc;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Rat> out(c_.size() + o.c_.size() - 1, kZero);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            out[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rat> out(std::max(c_.size(), o.c_.size()), kZero);
    for (size_t i = 0; i < out.size(); ++i) {
        if (i < c_.size()) out[i] += c_[i];
        if (i < o.c_.size()) out[i] += o.c_[i];
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rat> out = c_;
    for (Rat& v : out) v = -v;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Rat& s) const {
    std::vector<Rat> out = c_;
    for (Rat& v : out) v *= s;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::substitute_negated() const {
    std::vector<Rat> out = c_;
    for (size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::integer_scaled() const {
    Int l(1);
    for (const Rat& v : c_)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return scaled(Rat(l));
}

std::string Polynomial::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += c_[i] < 0 ? " - " : " + ";
        else if (c_[i] < 0) s += "-";
        Rat a = ::abs(c_[i]);
        if (a != 1 || i == 0) s += a.get_str();
        if (i >= 1) {
            if (a != 1) s += "*";
            s += var;
            if (i >= 2) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

} // namespace rknot
