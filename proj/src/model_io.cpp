#include "recseq/model_io.hpp"

#include "recseq/bfile.hpp"
#include "recseq/errors.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>

namespace recseq {

using nlohmann::json;

namespace {

json rationals_to_json(const std::vector<Rational>& v) {
    json arr = json::array();
    for (const auto& q : v) arr.push_back(to_string(q));
    return arr;
}

std::vector<Rational> rationals_from_json(const json& arr) {
    std::vector<Rational> v;
    for (const auto& e : arr) v.push_back(parse_rational(e.get<std::string>()));
    return v;
}

json poly_to_json(const Polynomial& p) { return rationals_to_json(p.coeffs()); }

Polynomial poly_from_json(const json& arr) { return Polynomial(rationals_from_json(arr)); }

json cfinite_to_json(const CFiniteSeq& s) {
    json j;
    j["class"] = "cfinite";
    j["order"] = s.order();
    j["recurrence"] = rationals_to_json(s.annihilator());
    j["initials"] = rationals_to_json(s.initials());
    return j;
}

CFiniteSeq cfinite_from_json(const json& j) {
    return CFiniteSeq(rationals_from_json(j.at("recurrence")), rationals_from_json(j.at("initials")));
}

json model_to_json_obj(const SequenceModel& model) {
    json j;
    if (const auto* p = std::get_if<PolySeq>(&model)) {
        j["class"] = "polynomial";
        j["degree"] = p->poly.degree();
        j["poly"] = poly_to_json(p->poly);
    } else if (const auto* c = std::get_if<CFiniteSeq>(&model)) {
        j = cfinite_to_json(*c);
    } else if (const auto* h = std::get_if<HolonomicSeq>(&model)) {
        j["class"] = "holonomic";
        j["order"] = h->order();
        j["degree"] = h->degree();
        json polys = json::array();
        for (const auto& p : h->polys()) polys.push_back(poly_to_json(p));
        j["polys"] = polys;
        j["initials"] = rationals_to_json(h->initials());
        j["offset"] = h->offset();
    } else if (const auto* x = std::get_if<XRecursiveSeq>(&model)) {
        j["class"] = "xrecursive";
        j["order"] = x->order();
        json coeffs = json::array();
        for (const auto& c2 : x->coeffs()) coeffs.push_back(cfinite_to_json(c2));
        j["coeffs"] = coeffs;
        j["initials"] = rationals_to_json(x->initials());
    }
    return j;
}

} // namespace

std::string model_to_json(const SequenceModel& model, long long verified_terms) {
    json j = model_to_json_obj(model);
    if (verified_terms > 0) j["verified_terms"] = verified_terms;
    return j.dump();
}

SequenceModel parse_model_json(const std::string& text) {
    json j = json::parse(text);
    std::string cls = j.at("class").get<std::string>();
    if (cls == "polynomial") return PolySeq{poly_from_json(j.at("poly"))};
    if (cls == "cfinite") return cfinite_from_json(j);
    if (cls == "holonomic") {
        std::vector<Polynomial> polys;
        for (const auto& p : j.at("polys")) polys.push_back(poly_from_json(p));
        return HolonomicSeq(std::move(polys), rationals_from_json(j.at("initials")),
                            j.at("offset").get<long long>());
    }
    if (cls == "xrecursive") {
        std::vector<CFiniteSeq> coeffs;
        for (const auto& c : j.at("coeffs")) coeffs.push_back(cfinite_from_json(c));
        return XRecursiveSeq(std::move(coeffs), rationals_from_json(j.at("initials")));
    }
    throw ParseError("unknown model class '" + cls + "'");
}

namespace {

std::map<std::string, std::string> split_fields(const std::string& text) {
    std::map<std::string, std::string> fields;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        auto colon = part.find(':');
        if (colon == std::string::npos) throw ParseError("expected key:value in '" + part + "'");
        fields[part.substr(0, colon)] = part.substr(colon + 1);
    }
    return fields;
}

} // namespace

CFiniteSeq parse_cfinite_compact(const std::string& text) {
    auto fields = split_fields(text);
    if (!fields.count("rec")) throw ParseError("missing rec: field in C-finite model");
    std::vector<Rational> ann = parse_term_list(fields["rec"]).terms;
    std::vector<Rational> init;
    if (fields.count("init") && !fields["init"].empty()) init = parse_term_list(fields["init"]).terms;
    return CFiniteSeq(std::move(ann), std::move(init));
}

HolonomicSeq parse_holonomic_compact(const std::string& text) {
    auto fields = split_fields(text);
    if (!fields.count("polys")) throw ParseError("missing polys: field in holonomic model");
    std::vector<Polynomial> polys;
    std::stringstream ss(fields["polys"]);
    std::string part;
    while (std::getline(ss, part, '|')) polys.push_back(parse_polynomial(part, "n"));
    std::vector<Rational> init;
    if (fields.count("init") && !fields["init"].empty()) init = parse_term_list(fields["init"]).terms;
    long long offset = static_cast<long long>(polys.size()) - 1;
    if (fields.count("offset")) offset = std::stoll(fields["offset"]);
    return HolonomicSeq(std::move(polys), std::move(init), offset);
}

SequenceModel parse_model(const std::string& text) {
    size_t first = text.find_first_not_of(" \t");
    if (first == std::string::npos) throw ParseError("empty model");
    if (text[first] == '{') return parse_model_json(text);
    if (text.compare(first, 4, "rec:") == 0) return parse_cfinite_compact(text.substr(first));
    if (text.compare(first, 6, "polys:") == 0) return parse_holonomic_compact(text.substr(first));
    return PolySeq{parse_polynomial(text, "n")};
}

CFiniteSeq polynomial_as_cfinite(const PolySeq& ps) {
    const Polynomial& p = ps.poly;
    if (p.is_zero()) return cfinite_zero();
    const long d = p.degree();
    Polynomial cp = Polynomial({Rational(-1), Rational(1)}).pow(d + 1);  // (x-1)^{d+1}
    std::vector<Rational> init(d + 1);
    for (long i = 0; i <= d; ++i) init[i] = p.eval(Rational(i));
    return cfinite_from_charpoly(cp, std::move(init));
}

BasisAtom parse_basis_atom(const std::string& text) {
    std::string s = text;
    // trim
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw ParseError("empty basis atom");
    if (s.rfind("rec:", 0) == 0) return {s, parse_cfinite_compact(s)};
    // geometric: q^n
    auto caret = s.find("^n");
    if (caret != std::string::npos && caret + 2 == s.size()) {
        Rational q = parse_rational(s.substr(0, caret));
        return {s, cfinite_geometric(q)};
    }
    // Fibonacci forms F(n), F(n+k), F(n-k)
    if (s.rfind("F(", 0) == 0 && s.back() == ')') {
        std::string arg = s.substr(2, s.size() - 3);
        if (arg.rfind('n', 0) == 0) {
            long shift = 0;
            if (arg.size() > 1) shift = std::stol(arg.substr(1));
            return {s, cfinite_ring_shift(cfinite_fibonacci(), shift)};
        }
        throw ParseError("unsupported Fibonacci atom '" + s + "'");
    }
    // otherwise a polynomial in n
    return {s, polynomial_as_cfinite(PolySeq{parse_polynomial(s, "n")})};
}

std::string render_model(const SequenceModel& model) {
    std::ostringstream os;
    if (const auto* p = std::get_if<PolySeq>(&model)) {
        os << "a(n) = " << p->poly.to_string("n");
    } else if (const auto* c = std::get_if<CFiniteSeq>(&model)) {
        if (c->order() == 0) return "a(n) = 0";
        os << "a(n) = ";
        bool first = true;
        for (long i = 1; i <= c->order(); ++i) {
            Rational coeff = -c->annihilator()[i];
            if (coeff == 0) continue;
            if (!first) os << (coeff < 0 ? " - " : " + ");
            else if (coeff < 0) os << "-";
            Rational a = abs(coeff);
            if (a != 1) os << to_string(a) << "*";
            os << "a(n-" << i << ")";
            first = false;
        }
        if (first) os << "0";
        os << "   [";
        for (long i = 0; i < c->order(); ++i)
            os << (i ? ", " : "") << "a(" << i << ")=" << to_string(c->initials()[i]);
        os << "]";
    } else if (const auto* h = std::get_if<HolonomicSeq>(&model)) {
        bool first = true;
        for (long i = 0; i <= h->order(); ++i) {
            if (h->polys()[i].is_zero()) continue;
            if (!first) os << " + ";
            os << "(" << h->polys()[i].to_string("n") << ")*a(n";
            if (i > 0) os << "-" << i;
            os << ")";
            first = false;
        }
        os << " = 0,  n >= " << h->offset();
    } else if (const auto* x = std::get_if<XRecursiveSeq>(&model)) {
        os << "C0(n)*a(n)";
        for (long i = 1; i <= x->order(); ++i) os << " + C" << i << "(n)*a(n-" << i << ")";
        os << " = 0 with";
        for (long i = 0; i <= x->order(); ++i)
            os << "\n  C" << i << ": " << x->coeffs()[i].to_string();
    }
    return os.str();
}

std::vector<Rational> model_terms(const SequenceModel& model, long long count) {
    return std::visit([count](const auto& m) { return m.terms(count); }, model);
}

// --- identity expression parser ---

namespace {

struct ExprParser {
    const std::string& s;
    const std::map<std::string, CFiniteSeq>& atoms;
    size_t pos = 0;

    ExprParser(const std::string& text, const std::map<std::string, CFiniteSeq>& a)
        : s(text), atoms(a) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    CFiniteExpr parse_expr() {
        bool neg = eat('-');
        CFiniteExpr acc = parse_term();
        if (neg) acc = CFiniteExpr::negate(acc);
        while (true) {
            if (eat('+')) acc = CFiniteExpr::add(acc, parse_term());
            else if (eat('-')) acc = CFiniteExpr::sub(acc, parse_term());
            else break;
        }
        return acc;
    }

    CFiniteExpr parse_term() {
        CFiniteExpr acc = parse_factor();
        while (true) {
            skip_ws();
            if (eat('*')) acc = CFiniteExpr::multiply(acc, parse_factor());
            else break;
        }
        return acc;
    }

    CFiniteExpr parse_factor() {
        CFiniteExpr base = parse_primary();
        skip_ws();
        if (eat('^')) {
            long e = parse_integer();
            if (e < 1) throw ParseError("expression power must be >= 1");
            CFiniteExpr acc = base;
            for (long i = 1; i < e; ++i) acc = CFiniteExpr::multiply(acc, base);
            return acc;
        }
        return base;
    }

    long parse_integer() {
        skip_ws();
        bool neg = eat('-');
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer in expression");
        long v = std::stol(s.substr(start, pos - start));
        return neg ? -v : v;
    }

    CFiniteExpr parse_primary() {
        skip_ws();
        if (eat('(')) {
            CFiniteExpr e = parse_expr();
            if (!eat(')')) throw ParseError("missing ')' in expression");
            return e;
        }
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
                ++pos;
            return CFiniteExpr::constant(parse_rational(s.substr(start, pos - start)));
        }
        // identifier
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) throw ParseError("unexpected character in expression: '" + s.substr(pos) + "'");
        std::string name = s.substr(start, pos - start);
        if (name == "psum") {
            if (!eat('(')) throw ParseError("psum needs a parenthesized argument");
            CFiniteExpr inner = parse_expr();
            if (!eat(')')) throw ParseError("missing ')' after psum");
            return CFiniteExpr::partial_sum(inner);
        }
        auto it = atoms.find(name);
        if (it == atoms.end()) throw ParseError("unknown atom '" + name + "'");
        CFiniteExpr base = CFiniteExpr::atom(it->second, name);
        if (!eat('(')) return base;  // bare atom means atom(n)
        // argument a*n + b
        long mult = 1, off = 0;
        skip_ws();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            mult = parse_integer();
            eat('*');
        }
        skip_ws();
        if (pos < s.size() && s[pos] == 'n') {
            ++pos;
            skip_ws();
            if (pos < s.size() && s[pos] == '+') {
                ++pos;
                off = parse_integer();
            } else if (pos < s.size() && s[pos] == '-') {
                off = parse_integer();
            }
        } else {
            throw ParseError("atom argument must contain n, e.g. " + name + "(2n) or " + name + "(n+1)");
        }
        if (!eat(')')) throw ParseError("missing ')' after atom argument");
        if (mult < 1) throw ParseError("atom argument multiplier must be >= 1");
        if (off < 0) throw ParseError("negative offsets are not supported in atom arguments");
        // a*n + b = a*(n + b/a) + b%a: multisection first, then shift
        long r = off % mult, q = off / mult;
        CFiniteExpr e = base;
        if (mult > 1) e = CFiniteExpr::multisection(e, mult, r);
        else q = off;
        if (q > 0) e = CFiniteExpr::shift(e, q);
        return e;
    }
};

} // namespace

IdentityExpr parse_identity(const std::string& text, const std::map<std::string, CFiniteSeq>& atoms) {
    std::map<std::string, CFiniteSeq> table = atoms;
    if (!table.count("F")) table.emplace("F", cfinite_fibonacci());
    auto eq = text.find('=');
    IdentityExpr result{CFiniteExpr::constant(0), CFiniteExpr::constant(0), false};
    if (eq == std::string::npos) {
        ExprParser p(text, table);
        result.lhs = p.parse_expr();
        p.skip_ws();
        if (p.pos != text.size()) throw ParseError("trailing input in expression");
        return result;
    }
    std::string l = text.substr(0, eq), r = text.substr(eq + 1);
    ExprParser pl(l, table);
    result.lhs = pl.parse_expr();
    pl.skip_ws();
    if (pl.pos != l.size()) throw ParseError("trailing input before '='");
    ExprParser pr(r, table);
    result.rhs = pr.parse_expr();
    pr.skip_ws();
    if (pr.pos != r.size()) throw ParseError("trailing input after '='");
    result.has_rhs = true;
    return result;
}

} // namespace recseq
