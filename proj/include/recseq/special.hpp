#ifndef RECSEQ_SPECIAL_HPP
#define RECSEQ_SPECIAL_HPP

#include "recseq/term_vector.hpp"

namespace recseq {

/// Somos's 2014 sequence: a(0)=a(1)=1, a(2)=2 and
///   0 = a(n) a(n+1) a(n+3) - a(n) a(n+2)^2 - a(n+2) a(n+1)^2.
/// Terms grow as products of Fibonacci numbers: a(n)/a(n-1) = F(n+1).
/// Throws DivisionByZeroInRecurrence if the recurrence cannot be solved for
/// the next term.
TermVector somos2014_terms(long long count);

/// Somos-4: a(n) a(n-4) = a(n-1) a(n-3) + a(n-2)^2 with a(0..3) = 1
/// (0-indexed rendering of the classical 1-indexed definition).
TermVector somos4_terms(long long count);

/// Bell numbers via b(n+1) = sum_j C(n,j) b(j), b(0) = 1.
TermVector bell_like_terms(long long count);

/// Coefficients of x/(e^x - 1): a(n) = -sum_{j<n} a(j)/(n+1-j)!, a(0)=1.
TermVector bernoulli_coeff_terms(long long count);

/// Coefficients of tan x from (1-n) a(n) = sum_{j=1}^{n-1} j c_{n-j+1} a(j),
/// a(0)=0, a(1)=1, where c are the series coefficients of sin x cos x,
/// c_j = -4 c_{j-2} / (j (j-1)), c_0=0, c_1=1.
TermVector tangent_coeff_terms(long long count);

} // namespace recseq

#endif
