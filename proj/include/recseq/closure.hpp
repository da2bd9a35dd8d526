#ifndef RECSEQ_CLOSURE_HPP
#define RECSEQ_CLOSURE_HPP

#include "recseq/cfinite.hpp"
#include "recseq/linalg.hpp"
#include "recseq/sequences.hpp"

#include <string>
#include <variant>

namespace recseq {

/// A constructed closure result together with the order bound claimed by the
/// closure property and the number of leading terms on which the recurrence
/// was checked against the termwise oracle (always >= 2*bound + 4).
template <class Seq>
struct ClosureReport {
    Seq result;
    long claimed_order_bound = 0;
    long long verified_terms = 0;
};

// --- C-finite closures (section bounds: r+s, r*s, r+1, r) ---

ClosureReport<CFiniteSeq> cfinite_add(const CFiniteSeq& a, const CFiniteSeq& b);
ClosureReport<CFiniteSeq> cfinite_mul(const CFiniteSeq& a, const CFiniteSeq& b);
ClosureReport<CFiniteSeq> cfinite_partial_sum(const CFiniteSeq& a);
ClosureReport<CFiniteSeq> cfinite_multisection(const CFiniteSeq& a, long m, long r = 0);

// --- holonomic closures (bounds r+s, r*s, r+1) ---
// Construction: express shifts of the target in the finite basis
// {a(n+i)} (+ {b(n+j)} / products / the running sum) over the rational
// function field Q(n); the first linear dependence gives the recurrence,
// denominators are cleared, and the validity offset is pushed past every
// integer root of the new leading polynomial.

ClosureReport<HolonomicSeq> holonomic_add(const HolonomicSeq& a, const HolonomicSeq& b);
ClosureReport<HolonomicSeq> holonomic_hadamard(const HolonomicSeq& a, const HolonomicSeq& b);
ClosureReport<HolonomicSeq> holonomic_partial_sum(const HolonomicSeq& a);

/// Cauchy product, routed through the generating-function level: both
/// recurrences are converted to differential operators, multiplied as
/// D-finite functions, and converted back.
ClosureReport<HolonomicSeq> holonomic_cauchy(const HolonomicSeq& a, const HolonomicSeq& b);

// --- X-recursive closures by undetermined coefficients ---

/// The elimination obstruction: every usable pivot in some needed column of
/// the shift-equation table is a zero divisor (or of unknown status) in the
/// sequence ring. Carries the offending pivot sequence.
struct XClosureFailure {
    long row = -1, col = -1;
    CFiniteSeq pivot;
    PivotClass pivot_class = PivotClass::Unknown;
    std::string reason;
};

using XClosureResult = std::variant<ClosureReport<XRecursiveSeq>, XClosureFailure>;

struct XClosureOptions {
    /// Extra shift rows to try after a failed elimination, one at a time.
    /// The base table uses k_a + k_b + 1 rows for the sum (the Eq.-pattern
    /// of the worked order-1/order-2 constructions), k_a*k_b + 1 for the
    /// Hadamard product and k_a + 2 for partial sums. Retrying with more
    /// rows is a heuristic without a completeness claim.
    long retry_depth = 0;
    long zd_scan = 200;
    long zd_max_period = 30;
    long long min_verify_terms = 30;
};

XClosureResult xrecursive_add(const XRecursiveSeq& a, const XRecursiveSeq& b,
                              const XClosureOptions& opt = {});
XClosureResult xrecursive_hadamard(const XRecursiveSeq& a, const XRecursiveSeq& b,
                                   const XClosureOptions& opt = {});
XClosureResult xrecursive_partial_sum(const XRecursiveSeq& a, const XClosureOptions& opt = {});

} // namespace recseq

#endif
