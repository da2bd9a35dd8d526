#ifndef RECSEQ_TERM_VECTOR_HPP
#define RECSEQ_TERM_VECTOR_HPP

#include "recseq/rational.hpp"

#include <vector>

namespace recseq {

/// A finite run of consecutive sequence values starting at start_index.
struct TermVector {
    long long start_index = 0;
    std::vector<Rational> terms;

    long long size() const { return static_cast<long long>(terms.size()); }
    /// Value at absolute index n (must lie inside the run).
    const Rational& at_index(long long n) const { return terms.at(n - start_index); }
};

} // namespace recseq

#endif
