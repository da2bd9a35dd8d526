#include "recseq/bfile.hpp"

#include "recseq/errors.hpp"

#include <fstream>
#include <sstream>

namespace recseq {

TermVector parse_bfile(std::istream& in) {
    TermVector tv;
    std::string line;
    long long lineno = 0;
    bool have_first = false;
    long long expect = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream ls(line);
        std::string idx_tok, val_tok, extra;
        if (!(ls >> idx_tok >> val_tok))
            throw ParseError("malformed b-file line '" + line + "'", lineno);
        if (ls >> extra && !extra.empty() && extra[0] != '#')
            throw ParseError("trailing tokens on b-file line", lineno);
        long long idx;
        try {
            size_t used = 0;
            idx = std::stoll(idx_tok, &used);
            if (used != idx_tok.size()) throw std::invalid_argument(idx_tok);
        } catch (const std::exception&) {
            throw ParseError("malformed index '" + idx_tok + "'", lineno);
        }
        Rational value;
        try {
            value = parse_rational(val_tok);
        } catch (const ParseError&) {
            throw ParseError("malformed value '" + val_tok + "'", lineno);
        }
        if (!have_first) {
            tv.start_index = idx;
            expect = idx;
            have_first = true;
        }
        if (idx != expect)
            throw ParseError("non-consecutive index " + std::to_string(idx) + " (expected " +
                                 std::to_string(expect) + ")",
                             lineno);
        tv.terms.push_back(std::move(value));
        ++expect;
    }
    if (tv.terms.empty()) throw ParseError("b-file contains no terms");
    return tv;
}

TermVector parse_bfile_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open b-file '" + path + "'");
    return parse_bfile(in);
}

TermVector parse_term_list(const std::string& text, long long start_index) {
    TermVector tv;
    tv.start_index = start_index;
    std::string tok;
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t' || c == '\n') {
            if (!tok.empty()) {
                tv.terms.push_back(parse_rational(tok));
                tok.clear();
            }
        } else {
            tok += c;
        }
    }
    if (!tok.empty()) tv.terms.push_back(parse_rational(tok));
    if (tv.terms.empty()) throw ParseError("empty term list");
    return tv;
}

} // namespace recseq
