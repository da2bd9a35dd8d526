#ifndef RECSEQ_RATIONAL_HPP
#define RECSEQ_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace recseq {

/// Exact arbitrary-precision rational scalar. mpq_class keeps values in
/// lowest terms with a positive denominator, which is exactly the canonical
/// form we need; zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parse "-3", "5/7", "1/2" (optional sign, optional /denominator).
/// Throws recseq::ParseError on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical rendering: "n" or "n/d" with d > 1.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// q^e for e >= 0, and for e < 0 when q != 0.
Rational rational_pow(const Rational& q, long e);

/// True if q = p^2 for some rational p (used for quadratic root tests).
bool is_rational_square(const Rational& q);

/// sqrt of a rational known to be a perfect square.
Rational rational_sqrt(const Rational& q);

/// All positive divisors of |n| for nonzero n, by trial division.
/// Returns empty when |n| exceeds the practical factoring budget.
std::vector<Integer> positive_divisors(const Integer& n);

} // namespace recseq

#endif
