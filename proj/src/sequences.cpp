#include "recseq/sequences.hpp"

#include "recseq/errors.hpp"

#include <algorithm>

namespace recseq {

std::vector<Rational> PolySeq::terms(long long count) const {
    std::vector<Rational> t;
    t.reserve(std::max<long long>(count, 0));
    for (long long n = 0; n < count; ++n) t.push_back(poly.eval(Rational(static_cast<long>(n))));
    return t;
}

HolonomicSeq::HolonomicSeq(std::vector<Polynomial> polys, std::vector<Rational> initials, long long offset)
    : polys_(std::move(polys)), initials_(std::move(initials)), offset_(offset) {
    if (polys_.empty() || polys_[0].is_zero())
        throw Error("holonomic recurrence needs a nonzero leading polynomial");
    if (offset_ < order()) throw Error("holonomic offset must be >= order");
    if (static_cast<long long>(initials_.size()) != offset_)
        throw Error("holonomic initials must cover indices 0..offset-1");
}

long HolonomicSeq::degree() const {
    long d = 0;
    for (const auto& p : polys_) d = std::max(d, p.degree());
    return d;
}

std::vector<Rational> HolonomicSeq::terms(long long count) const {
    std::vector<Rational> t;
    if (count <= 0) return t;
    t.reserve(count);
    const long k = order();
    for (long long n = 0; n < count; ++n) {
        if (n < offset_) {
            t.push_back(initials_[n]);
            continue;
        }
        Rational lead = polys_[0].eval(Rational(static_cast<long>(n)));
        if (lead == 0) throw LeadingCoefficientVanishes(n);
        Rational v(0);
        for (long i = 1; i <= k; ++i) v -= polys_[i].eval(Rational(static_cast<long>(n))) * t[n - i];
        t.push_back(v / lead);
    }
    return t;
}

XRecursiveSeq::XRecursiveSeq(std::vector<CFiniteSeq> coeffs, std::vector<Rational> initials)
    : coeffs_(std::move(coeffs)), initials_(std::move(initials)) {
    if (coeffs_.size() < 2) throw Error("X-recursive recurrence needs order >= 1");
    if (initials_.size() + 1 != coeffs_.size())
        throw Error("X-recursive initials must have length order");
}

std::vector<Rational> XRecursiveSeq::terms(long long count) const {
    std::vector<Rational> t;
    if (count <= 0) return t;
    t.reserve(count);
    const long k = order();
    std::vector<std::vector<Rational>> coeff_terms;
    coeff_terms.reserve(coeffs_.size());
    for (const auto& c : coeffs_) coeff_terms.push_back(c.terms(count));
    for (long long n = 0; n < count; ++n) {
        if (n < k) {
            t.push_back(initials_[n]);
            continue;
        }
        const Rational& lead = coeff_terms[0][n];
        if (lead == 0) throw LeadingCoefficientVanishes(n);
        Rational v(0);
        for (long i = 1; i <= k; ++i) v -= coeff_terms[i][n] * t[n - i];
        t.push_back(v / lead);
    }
    return t;
}

TermVector make_terms(const PolySeq& s, long long count) { return {0, s.terms(count)}; }
TermVector make_terms(const CFiniteSeq& s, long long count) { return {0, s.terms(count)}; }
TermVector make_terms(const HolonomicSeq& s, long long count) { return {0, s.terms(count)}; }
TermVector make_terms(const XRecursiveSeq& s, long long count) { return {0, s.terms(count)}; }

} // namespace recseq
