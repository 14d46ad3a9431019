#pragma once

#include <string>
#include <vector>

#include "rknot/fraction.hpp"

namespace rknot {

// Dense polynomial with exact rational coefficients, low degree first.
// The zero polynomial has an empty coefficient vector.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rat> coeffs);
    static Polynomial constant(const Rat& c);
    static Polynomial monomial(int degree, const Rat& c);

    // lead * (t - r_1) * ... * (t - r_k)
    static Polynomial from_roots(const std::vector<Rat>& roots, const Rat& lead);

    const std::vector<Rat>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Rat& leading() const;

    bool is_odd_polynomial() const;  // p(-t) == -p(t)
    bool is_even_polynomial() const; // p(-t) == p(t)

    Rat operator()(const Rat& t) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const = default;

    Polynomial scaled(const Rat& s) const;
    Polynomial substitute_negated() const; // p(-t)

    // Smallest positive multiple with integer coefficients (content untouched).
    Polynomial integer_scaled() const;

    std::string str(const std::string& var = "t") const;

private:
    std::vector<Rat> c_;
    void trim();
};

} // namespace rknot
