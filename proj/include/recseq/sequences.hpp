#ifndef RECSEQ_SEQUENCES_HPP
#define RECSEQ_SEQUENCES_HPP

#include "recseq/cfinite.hpp"
#include "recseq/polynomial.hpp"
#include "recseq/term_vector.hpp"

#include <vector>

namespace recseq {

/// a(n) = poly(n) for all n >= 0.
struct PolySeq {
    Polynomial poly;
    std::vector<Rational> terms(long long count) const;
};

/// Sequence with a polynomial-coefficient recurrence
///   p_0(n) a(n) + p_1(n) a(n-1) + ... + p_k(n) a(n-k) = 0   for n >= offset,
/// with offset >= k and explicit initial values for indices 0 .. offset-1.
/// The explicit offset matters: recurrences like the one for harmonic
/// numbers only hold from some index on.
class HolonomicSeq {
public:
    HolonomicSeq(std::vector<Polynomial> polys, std::vector<Rational> initials, long long offset);

    long order() const { return static_cast<long>(polys_.size()) - 1; }
    long degree() const;
    const std::vector<Polynomial>& polys() const { return polys_; }
    const std::vector<Rational>& initials() const { return initials_; }
    long long offset() const { return offset_; }

    /// Throws LeadingCoefficientVanishes when p_0(n) = 0 for some needed n.
    std::vector<Rational> terms(long long count) const;
    bool operator==(const HolonomicSeq& o) const = default;

private:
    std::vector<Polynomial> polys_;
    std::vector<Rational> initials_;
    long long offset_;
};

/// Sequence whose recurrence coefficients are themselves C-finite:
///   C_0(n) a(n) + C_1(n) a(n-1) + ... + C_k(n) a(n-k) = 0   for n >= k.
class XRecursiveSeq {
public:
    XRecursiveSeq(std::vector<CFiniteSeq> coeffs, std::vector<Rational> initials);

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<CFiniteSeq>& coeffs() const { return coeffs_; }
    const std::vector<Rational>& initials() const { return initials_; }

    /// Throws LeadingCoefficientVanishes when C_0(n) = 0 for some needed n.
    std::vector<Rational> terms(long long count) const;
    bool operator==(const XRecursiveSeq& o) const = default;

private:
    std::vector<CFiniteSeq> coeffs_;
    std::vector<Rational> initials_;
};

TermVector make_terms(const PolySeq& s, long long count);
TermVector make_terms(const CFiniteSeq& s, long long count);
TermVector make_terms(const HolonomicSeq& s, long long count);
TermVector make_terms(const XRecursiveSeq& s, long long count);

} // namespace recseq

#endif
