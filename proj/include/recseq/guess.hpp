#ifndef RECSEQ_GUESS_HPP
#define RECSEQ_GUESS_HPP

#include "recseq/cfinite.hpp"
#include "recseq/sequences.hpp"
#include "recseq/term_vector.hpp"

#include <optional>
#include <string>
#include <vector>

namespace recseq {

/// A named, exactly evaluable coefficient atom for the dictionary guesser.
/// C-finite sequences cover all supported atoms (polynomials in n,
/// geometric powers, shifted Fibonacci, ...).
struct BasisAtom {
    std::string name;
    CFiniteSeq seq;
};

struct GuessConfig {
    long max_order = 8;
    long max_degree = 4;   // holonomic coefficient degree cap
    long margin = 5;       // surplus equations required beyond the unknown count
    std::vector<BasisAtom> basis;
};

/// Equation/variable counting for the naive nonlinear X-recursive ansatz
/// with data a(1..N): order-k recurrence whose k coefficient sequences are
/// C-finite of order m.
struct GuessDiagnostic {
    long long equations = 0;
    long long variables = 0;
    long long N = 0;
};

GuessDiagnostic guess_diagnostic(long k, long coeff_order, long long N);

/// All guessers model the data re-based at position 0: a TermVector starting
/// at index s yields a model of b(p) = a(s + p). They return the least
/// degree/order model that reproduces every provided term, with at least
/// `margin` surplus equations beyond the unknown count, or nullopt when no
/// model within the configured bounds fits. Results are conjectures;
/// certification is the prover's job.

std::optional<PolySeq> guess_polynomial(const TermVector& data, long margin = 5);

std::optional<CFiniteSeq> guess_cfinite(const TermVector& data, const GuessConfig& cfg = {});

std::optional<HolonomicSeq> guess_holonomic(const TermVector& data, const GuessConfig& cfg = {});

/// Order-1 X-recursive fit via the ratio sequence r(p) = a(p)/a(p-1):
/// guesses a C-finite model for r and returns a(p) = r(p) a(p-1).
/// Throws ZeroTermInData when a ratio is undefined.
std::optional<XRecursiveSeq> guess_xrecursive_first_order(const TermVector& data,
                                                          const GuessConfig& cfg = {});

/// X-recursive fit with coefficients constrained to the span of the
/// configured atom dictionary, which keeps the system linear.
std::optional<XRecursiveSeq> guess_xrecursive_dict(const TermVector& data, const GuessConfig& cfg);

} // namespace recseq

#endif
