#include "recseq/rational_function.hpp"

#include "recseq/errors.hpp"

namespace recseq {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(1);
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divrem(g).first;
        den_ = den_.divrem(g).first;
    }
    // make the denominator integer-primitive with positive leading coefficient
    auto norm = integer_normalize({den_});
    Polynomial canon = norm[0];
    // den_ = canon * t  =>  scale num by the same t = canon.lead / den.lead ratio inverse
    Rational t = canon.leading() / den_.leading();
    den_ = canon;
    num_ = num_ * t;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
}

RationalFunction RationalFunction::operator-() const { return {-num_, den_}; }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return {num_ * o.num_, den_ * o.den_};
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw Error("rational function division by zero");
    return {num_ * o.den_, den_ * o.num_};
}

Rational RationalFunction::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw Error("rational function pole at " + recseq::to_string(x));
    return num_.eval(x) / d;
}

std::string RationalFunction::to_string(const std::string& var) const {
    if (is_polynomial()) {
        if (den_.coeff(0) == 1) return num_.to_string(var);
        return "(" + num_.to_string(var) + ")/" + recseq::to_string(den_.coeff(0));
    }
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

} // namespace recseq
