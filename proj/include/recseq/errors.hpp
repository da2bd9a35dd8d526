#ifndef RECSEQ_ERRORS_HPP
#define RECSEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace recseq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Holonomic p0(n) = 0 or X-recursive C0(n) = 0 at an index that must be evaluated.
struct LeadingCoefficientVanishes : Error {
    long long index;
    explicit LeadingCoefficientVanishes(long long n)
        : Error("leading coefficient vanishes at index " + std::to_string(n)), index(n) {}
};

struct DivisionByZeroInRecurrence : Error {
    long long index;
    explicit DivisionByZeroInRecurrence(long long n)
        : Error("division by zero while unrolling recurrence at index " + std::to_string(n)), index(n) {}
};

/// Too few terms to pose the requested fit with the configured margin.
struct InsufficientData : Error {
    using Error::Error;
};

struct ZeroTermInData : Error {
    long long index;
    explicit ZeroTermInData(long long n)
        : Error("zero term at index " + std::to_string(n) + "; ratios undefined"), index(n) {}
};

struct UnsupportedCoefficientShape : Error {
    using Error::Error;
};

struct DegenerateOperator : Error {
    using Error::Error;
};

struct ParseError : Error {
    long long line = 0;
    explicit ParseError(const std::string& what, long long lineno = 0)
        : Error(lineno > 0 ? "line " + std::to_string(lineno) + ": " + what : what), line(lineno) {}
};

} // namespace recseq

#endif
