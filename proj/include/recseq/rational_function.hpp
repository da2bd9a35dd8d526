#ifndef RECSEQ_RATIONAL_FUNCTION_HPP
#define RECSEQ_RATIONAL_FUNCTION_HPP

#include "recseq/polynomial.hpp"

#include <string>

namespace recseq {

/// Quotient of two polynomials, kept reduced: gcd(num, den) = 1, the
/// denominator has integer-coprime coefficients and positive leading
/// coefficient.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
    RationalFunction(Polynomial num, Polynomial den);
    static RationalFunction from_poly(Polynomial p) { return {std::move(p), Polynomial::constant(1)}; }
    static RationalFunction constant(const Rational& c) { return from_poly(Polynomial::constant(c)); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator-() const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    bool operator==(const RationalFunction& o) const = default;

    Rational eval(const Rational& x) const;  // throws on pole
    std::string to_string(const std::string& var = "x") const;

private:
    void reduce();
    Polynomial num_, den_;
};

} // namespace recseq

#endif
