#ifndef RECSEQ_ALGEBRAIC_HPP
#define RECSEQ_ALGEBRAIC_HPP

#include "recseq/polynomial.hpp"

#include <string>

namespace recseq {

/// Element of Q[t]/(m(t)) for a squarefree modulus m, represented by its
/// residue polynomial of degree < deg m. The modulus may be reducible; only
/// elements coprime to it are ever inverted, so arithmetic stays exact.
/// Rational numbers embed as constant residues.
class AlgebraicScalar {
public:
    AlgebraicScalar() = default;  // zero over the trivial modulus t
    AlgebraicScalar(Polynomial modulus, Polynomial residue);
    static AlgebraicScalar from_rational(const Polynomial& modulus, const Rational& c);
    /// The residue class of t itself (a root of the modulus).
    static AlgebraicScalar generator(const Polynomial& modulus);

    const Polynomial& modulus() const { return modulus_; }
    const Polynomial& residue() const { return residue_; }
    bool is_zero() const { return residue_.is_zero(); }
    bool is_rational() const { return residue_.degree() <= 0; }
    Rational rational_value() const { return residue_.coeff(0); }

    AlgebraicScalar operator+(const AlgebraicScalar& o) const;
    AlgebraicScalar operator-(const AlgebraicScalar& o) const;
    AlgebraicScalar operator-() const;
    AlgebraicScalar operator*(const AlgebraicScalar& o) const;
    AlgebraicScalar operator*(const Rational& c) const;
    bool operator==(const AlgebraicScalar& o) const = default;

    /// Inverse; throws when the residue shares a factor with the modulus.
    AlgebraicScalar inverse() const;

    /// Evaluate a rational-coefficient polynomial at this element.
    AlgebraicScalar eval_poly(const Polynomial& p) const;

    /// Apply the ring map t -> image (image must share the modulus).
    AlgebraicScalar map_generator(const AlgebraicScalar& image) const;

    std::string to_string(const std::string& var = "t") const;

private:
    void check_compatible(const AlgebraicScalar& o) const;
    Polynomial modulus_{std::vector<Rational>{Rational(0), Rational(1)}};  // t
    Polynomial residue_;
};

} // namespace recseq

#endif
