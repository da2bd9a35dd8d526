#ifndef RECSEQ_CFINITE_HPP
#define RECSEQ_CFINITE_HPP

#include "recseq/linalg.hpp"
#include "recseq/polynomial.hpp"
#include "recseq/rational.hpp"
#include "recseq/term_vector.hpp"

#include <string>
#include <vector>

namespace recseq {

/// Sequence satisfying a constant-coefficient linear recurrence
///   a(n) + c_1 a(n-1) + ... + c_k a(n-k) = 0   for n >= k,
/// stored as the monic annihilator vector (1, c_1, ..., c_k) together with
/// the k initial values a(0), ..., a(k-1). The order-0 object is the zero
/// sequence.
class CFiniteSeq {
public:
    CFiniteSeq() = default;  // zero sequence
    CFiniteSeq(std::vector<Rational> annihilator, std::vector<Rational> initials);

    long order() const { return static_cast<long>(annihilator_.size()) - 1; }
    const std::vector<Rational>& annihilator() const { return annihilator_; }
    const std::vector<Rational>& initials() const { return initials_; }

    /// x^k + c_1 x^{k-1} + ... + c_k.
    Polynomial char_poly() const;

    std::vector<Rational> terms(long long count) const;
    Rational at(long long n) const;

    bool operator==(const CFiniteSeq& o) const = default;
    std::string to_string() const;

private:
    std::vector<Rational> annihilator_{Rational(1)};
    std::vector<Rational> initials_;
};

// --- ring structure on C-finite sequences ---

CFiniteSeq cfinite_const(const Rational& c);
CFiniteSeq cfinite_zero();
CFiniteSeq cfinite_one();
CFiniteSeq cfinite_geometric(const Rational& ratio, const Rational& first = Rational(1));
CFiniteSeq cfinite_fibonacci(const Rational& a0 = Rational(0), const Rational& a1 = Rational(1));

/// Build from a monic characteristic polynomial and matching initial terms.
CFiniteSeq cfinite_from_charpoly(const Polynomial& cp, std::vector<Rational> initials);

/// True iff every term is zero (the k stored initials suffice).
bool cfinite_is_zero(const CFiniteSeq& a);

/// Minimal-order representation generating the same sequence. The candidate
/// recurrence is checked against 2*order+4 regenerated terms, which pins the
/// whole sequence for inputs that genuinely satisfy their stated recurrence.
CFiniteSeq cfinite_minimize(const CFiniteSeq& a);

CFiniteSeq cfinite_ring_add(const CFiniteSeq& a, const CFiniteSeq& b);
CFiniteSeq cfinite_ring_mul(const CFiniteSeq& a, const CFiniteSeq& b);
CFiniteSeq cfinite_ring_neg(const CFiniteSeq& a);
CFiniteSeq cfinite_ring_sub(const CFiniteSeq& a, const CFiniteSeq& b);
CFiniteSeq cfinite_scale(const CFiniteSeq& a, const Rational& c);

/// result(n) = a(n + m). Negative m extends backward via the reversed
/// recurrence when the trailing coefficient is nonzero, and otherwise pads
/// the front with zeros (raising the order), which leaves indices < -m
/// unconstrained but preserves all shifted values.
CFiniteSeq cfinite_ring_shift(const CFiniteSeq& a, long m);

/// Subsequence b(n) = a(m n + r); order bounded by order(a) via the minimal
/// polynomial of the m-th power of the companion matrix.
CFiniteSeq cfinite_multisection_seq(const CFiniteSeq& a, long m, long r);

/// Running sums s(n) = a(0) + ... + a(n); order bounded by order(a) + 1.
CFiniteSeq cfinite_partial_sum_seq(const CFiniteSeq& a);

struct ZeroDivisorVerdict {
    enum class Tag { Unit, ZeroDivisor, EventuallyZero, Unknown };
    Tag tag = Tag::Unknown;
    long period = 0;                    // modulus of the zero progressions
    std::vector<long> residues;        // zero residue classes mod period
    long long first_zero = -1;
    long long first_nonzero = -1;
    long long scanned = 0;
    std::string describe() const;
};

/// Heuristic unit / zero-divisor classification in the sequence ring.
/// Scans the first `scan` terms (at least 4*order); zero patterns matching a
/// union of full arithmetic progressions with modulus <= max_period are
/// certified by an exact multisection zero-test. Verdicts:
///   Unit           - no zero in scan
///   EventuallyZero - an order-long run of zeros forces a zero tail
///   ZeroDivisor    - verified infinite zero progressions plus nonzero terms
///   Unknown        - sporadic zeros that fit no progression pattern
ZeroDivisorVerdict cfinite_is_zero_divisor(const CFiniteSeq& a, long scan = 200, long max_period = 30);

/// Elimination-capability bundle over the C-finite coefficient ring.
/// is_zero is the strict termwise test, so eliminations certify identities
/// valid at every index, not just eventually.
struct CFiniteRing {
    using value_type = CFiniteSeq;
    long zd_scan = 200;
    long zd_max_period = 30;

    CFiniteSeq zero() const { return cfinite_zero(); }
    CFiniteSeq one() const { return cfinite_one(); }
    CFiniteSeq add(const CFiniteSeq& a, const CFiniteSeq& b) const { return cfinite_ring_add(a, b); }
    CFiniteSeq sub(const CFiniteSeq& a, const CFiniteSeq& b) const { return cfinite_ring_sub(a, b); }
    CFiniteSeq mul(const CFiniteSeq& a, const CFiniteSeq& b) const { return cfinite_ring_mul(a, b); }
    CFiniteSeq neg(const CFiniteSeq& a) const { return cfinite_ring_neg(a); }
    bool is_zero(const CFiniteSeq& a) const { return cfinite_is_zero(a); }
    PivotClass classify(const CFiniteSeq& a) const;
};

} // namespace recseq

#endif
