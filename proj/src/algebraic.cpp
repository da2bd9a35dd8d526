#include "recseq/algebraic.hpp"

#include "recseq/errors.hpp"

namespace recseq {

AlgebraicScalar::AlgebraicScalar(Polynomial modulus, Polynomial residue)
    : modulus_(std::move(modulus)), residue_(std::move(residue)) {
    if (modulus_.degree() < 1) throw Error("algebraic modulus must have degree >= 1");
    residue_ = residue_.divrem(modulus_).second;
}

AlgebraicScalar AlgebraicScalar::from_rational(const Polynomial& modulus, const Rational& c) {
    return {modulus, Polynomial::constant(c)};
}

AlgebraicScalar AlgebraicScalar::generator(const Polynomial& modulus) {
    return {modulus, Polynomial::variable()};
}

void AlgebraicScalar::check_compatible(const AlgebraicScalar& o) const {
    if (modulus_ != o.modulus_) throw Error("algebraic scalars from different extensions");
}

AlgebraicScalar AlgebraicScalar::operator+(const AlgebraicScalar& o) const {
    check_compatible(o);
    return {modulus_, residue_ + o.residue_};
}

AlgebraicScalar AlgebraicScalar::operator-(const AlgebraicScalar& o) const {
    check_compatible(o);
    return {modulus_, residue_ - o.residue_};
}

AlgebraicScalar AlgebraicScalar::operator-() const { return {modulus_, -residue_}; }

AlgebraicScalar AlgebraicScalar::operator*(const AlgebraicScalar& o) const {
    check_compatible(o);
    return {modulus_, residue_ * o.residue_};
}

AlgebraicScalar AlgebraicScalar::operator*(const Rational& c) const {
    return {modulus_, residue_ * c};
}

AlgebraicScalar AlgebraicScalar::inverse() const {
    // extended Euclid: u*residue + v*modulus = gcd
    Polynomial r0 = modulus_, r1 = residue_;
    Polynomial u0, u1 = Polynomial::constant(1);  // coefficients of residue_
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        Polynomial u2 = u0 - q * u1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.degree() != 0)
        throw Error("algebraic scalar is not invertible (shares a factor with the modulus)");
    return {modulus_, u0 * (Rational(1) / r0.coeff(0))};
}

AlgebraicScalar AlgebraicScalar::eval_poly(const Polynomial& p) const {
    AlgebraicScalar acc = from_rational(modulus_, Rational(0));
    for (long i = p.degree(); i >= 0; --i)
        acc = acc * *this + from_rational(modulus_, p.coeff(i));
    return acc;
}

AlgebraicScalar AlgebraicScalar::map_generator(const AlgebraicScalar& image) const {
    check_compatible(image);
    return image.eval_poly(residue_);
}

std::string AlgebraicScalar::to_string(const std::string& var) const {
    return residue_.to_string(var);
}

} // namespace recseq
