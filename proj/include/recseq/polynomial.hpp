#ifndef RECSEQ_POLYNOMIAL_HPP
#define RECSEQ_POLYNOMIAL_HPP

#include "recseq/rational.hpp"

#include <string>
#include <vector>

namespace recseq {

/// Dense univariate polynomial over Rational, constant term first.
/// Canonical form: no trailing zero coefficient; the zero polynomial has an
/// empty coefficient list and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial constant(const Rational& c);
    static Polynomial variable();                   // x
    static Polynomial monomial(long deg, const Rational& c);

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(long i) const;                   // 0 outside the stored range
    Rational leading() const;                       // 0 for the zero polynomial

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& o) const = default;

    Rational eval(const Rational& x) const;
    Polynomial shifted_arg(const Rational& m) const;  // p(x + m)
    Polynomial derivative() const;
    Polynomial pow(long e) const;

    /// Quotient and remainder with deg(rem) < deg(divisor).
    std::pair<Polynomial, Polynomial> divrem(const Polynomial& divisor) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

/// Monic gcd over the rationals (gcd(0,0) = 0).
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// True when gcd(p, p') is constant, i.e. p has no repeated roots.
bool is_squarefree(const Polynomial& p);

/// Shift of a sequence polynomial: result(n) = p(n + m).
Polynomial poly_shift(const Polynomial& p, long m);

/// Scale the list by a common rational factor so that all coefficients are
/// integers with gcd 1 and the chosen sign convention holds (the leading
/// coefficient of the first nonzero polynomial in the list is positive).
std::vector<Polynomial> integer_normalize(std::vector<Polynomial> polys);

/// Integer roots of p (empty for the zero polynomial).
std::vector<long long> integer_roots(const Polynomial& p);

/// Rational roots of p, each listed once.
std::vector<Rational> rational_roots(const Polynomial& p);

/// Newton's forward-difference interpolation through (x0 + i, values[i]).
Polynomial interpolate_at_integers(long long x0, const std::vector<Rational>& values);

/// Parse a polynomial in the given variable, e.g. "n^2 - 2n", "3", "-(2n-1)".
Polynomial parse_polynomial(const std::string& text, const std::string& var = "n");

} // namespace recseq

#endif
