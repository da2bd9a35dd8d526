#ifndef RECSEQ_BFILE_HPP
#define RECSEQ_BFILE_HPP

#include "recseq/term_vector.hpp"

#include <iosfwd>
#include <string>

namespace recseq {

/// Parse an OEIS-style b-file: one "n value" pair per line, '#' comments and
/// blank lines ignored, indices consecutive, values arbitrary-precision
/// integers or rationals with '/'. Throws ParseError carrying the line
/// number on malformed lines or index gaps.
TermVector parse_bfile(std::istream& in);
TermVector parse_bfile_path(const std::string& path);

/// Parse "2,3,5,9" / "2 3 5 9" inline term lists.
TermVector parse_term_list(const std::string& text, long long start_index = 0);

} // namespace recseq

#endif
