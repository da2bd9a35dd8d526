#include "recseq/polynomial.hpp"

#include "recseq/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace recseq {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::variable() {
    return Polynomial(std::vector<Rational>{Rational(0), Rational(1)});
}

Polynomial Polynomial::monomial(long deg, const Rational& c) {
    std::vector<Rational> v(deg + 1, Rational(0));
    v[deg] = c;
    return Polynomial(std::move(v));
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return Rational(0);
    return coeffs_[i];
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> r(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    std::vector<Rational> r = coeffs_;
    for (auto& c : r) c = -c;
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Rational& c) const {
    std::vector<Rational> r = coeffs_;
    for (auto& x : r) x *= c;
    return Polynomial(std::move(r));
}

Rational Polynomial::eval(const Rational& x) const {
    Rational v(0);
    for (size_t i = coeffs_.size(); i-- > 0;) v = v * x + coeffs_[i];
    return v;
}

Polynomial Polynomial::shifted_arg(const Rational& m) const {
    // Horner in (x + m)
    Polynomial result;
    Polynomial xm({m, Rational(1)});
    for (size_t i = coeffs_.size(); i-- > 0;) result = result * xm + constant(coeffs_[i]);
    return result;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> r(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(r));
}

Polynomial Polynomial::pow(long e) const {
    Polynomial r = constant(1);
    Polynomial base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * base;
        base = base * base;
    }
    return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divrem(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw Error("polynomial division by zero");
    Polynomial rem = *this;
    std::vector<Rational> q(std::max<long>(degree() - divisor.degree() + 1, 0), Rational(0));
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        long d = rem.degree() - divisor.degree();
        Rational c = rem.leading() / divisor.leading();
        q[d] = c;
        rem = rem - divisor * monomial(d, c);
    }
    return {Polynomial(std::move(q)), rem};
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        Rational c = coeffs_[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        if (i == 0 || a != 1) os << recseq::to_string(a);
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (1 / a.leading());  // monic
}

bool is_squarefree(const Polynomial& p) {
    if (p.degree() <= 1) return true;
    return poly_gcd(p, p.derivative()).degree() == 0;
}

Polynomial poly_shift(const Polynomial& p, long m) { return p.shifted_arg(Rational(m)); }

std::vector<Polynomial> integer_normalize(std::vector<Polynomial> polys) {
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& p : polys)
        for (const auto& c : p.coeffs()) {
            Integer l;
            mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
            den_lcm = l;
        }
    for (const auto& p : polys)
        for (const auto& c : p.coeffs()) {
            Integer n = c.get_num() * den_lcm / c.get_den();
            Integer g;
            mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
            num_gcd = g;
        }
    if (num_gcd == 0) return polys;  // all zero
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    for (const auto& p : polys) {
        if (!p.is_zero()) {
            if (p.leading() * scale < 0) scale = -scale;
            break;
        }
    }
    for (auto& p : polys) p = p * scale;
    return polys;
}

std::vector<Rational> rational_roots(const Polynomial& p) {
    std::vector<Rational> roots;
    if (p.is_zero()) return roots;
    Polynomial q = p;
    // strip x^e factor: 0 is a root
    long low = 0;
    while (low <= q.degree() && q.coeff(low) == 0) ++low;
    if (low > 0) roots.push_back(Rational(0));
    if (low == q.degree() + 1) return roots;
    std::vector<Rational> shifted(q.coeffs().begin() + low, q.coeffs().end());
    q = Polynomial(shifted);
    if (q.degree() == 0) return roots;
    auto ints = integer_normalize({q});
    q = ints[0];
    Integer a0 = q.coeff(0).get_num();
    Integer ak = q.leading().get_num();
    auto ps = positive_divisors(a0);
    auto qs = positive_divisors(ak);
    if (ps.empty() || qs.empty()) return roots;  // factoring budget exceeded
    for (const auto& pn : ps)
        for (const auto& qd : qs)
            for (int s : {1, -1}) {
                Rational cand(s * pn, qd);
                cand.canonicalize();
                if (q.eval(cand) == 0 &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<long long> integer_roots(const Polynomial& p) {
    std::vector<long long> out;
    for (const auto& r : rational_roots(p))
        if (is_integer(r)) out.push_back(static_cast<long long>(r.get_num().get_si()));
    return out;
}

Polynomial interpolate_at_integers(long long x0, const std::vector<Rational>& values) {
    // Newton forward differences on unit-spaced nodes x0, x0+1, ...
    std::vector<Rational> diffs = values;
    std::vector<Rational> newton_coeffs;
    for (size_t level = 0; level < values.size(); ++level) {
        newton_coeffs.push_back(diffs[0]);
        for (size_t i = 0; i + 1 < diffs.size() - level; ++i) diffs[i] = diffs[i + 1] - diffs[i];
    }
    Polynomial result;
    Polynomial basis = Polynomial::constant(1);  // prod (x - x0 - i) / i!
    Rational fact(1);
    for (size_t j = 0; j < newton_coeffs.size(); ++j) {
        if (j > 0) {
            long node = static_cast<long>(x0) + static_cast<long>(j) - 1;
            basis = basis * Polynomial({Rational(-node), Rational(1)});
            fact *= Rational(static_cast<long>(j));
        }
        result = result + basis * (newton_coeffs[j] / fact);
    }
    return result;
}

namespace {

struct PolyParser {
    const std::string& s;
    const std::string& var;
    size_t pos = 0;

    explicit PolyParser(const std::string& text, const std::string& v) : s(text), var(v) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    Polynomial parse_expr() {
        Polynomial acc;
        bool neg = eat('-');
        if (!neg) eat('+');
        acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            if (eat('+')) acc = acc + parse_term();
            else if (eat('-')) acc = acc - parse_term();
            else break;
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (true) {
            skip_ws();
            if (eat('*')) {
                acc = acc * parse_factor();
            } else if (pos < s.size() &&
                       (s[pos] == '(' || std::isalpha(static_cast<unsigned char>(s[pos])))) {
                acc = acc * parse_factor();  // implicit multiplication: 2n, 3(n-1)
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_atom();
        skip_ws();
        if (eat('^')) {
            long e = parse_int();
            if (e < 0) throw ParseError("negative exponent in polynomial");
            base = base.pow(e);
        }
        return base;
    }

    long parse_int() {
        skip_ws();
        bool neg = eat('-');
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer in polynomial at '" + s.substr(pos) + "'");
        long v = std::stol(s.substr(start, pos - start));
        return neg ? -v : v;
    }

    Polynomial parse_atom() {
        skip_ws();
        if (eat('(')) {
            Polynomial inner = parse_expr();
            if (!eat(')')) throw ParseError("missing ')' in polynomial");
            return inner;
        }
        if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])))) {
            size_t start = pos;
            while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
                ++pos;
            return Polynomial::constant(parse_rational(s.substr(start, pos - start)));
        }
        if (s.compare(pos, var.size(), var) == 0) {
            pos += var.size();
            return Polynomial::variable();
        }
        throw ParseError("unexpected token in polynomial: '" + s.substr(pos) + "'");
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const std::string& var) {
    PolyParser p(text, var);
    Polynomial result = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("trailing input in polynomial: '" + text.substr(p.pos) + "'");
    return result;
}

} // namespace recseq
