#include "recseq/rational.hpp"

#include "recseq/errors.hpp"

#include <algorithm>
#include <cctype>

namespace recseq {

Rational parse_rational(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty()) throw ParseError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Integer n(s, 10);
            return Rational(n);
        }
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (num.empty() || den.empty()) throw ParseError("malformed rational '" + text + "'");
        Integer n(num, 10), d(den, 10);
        if (d == 0) throw ParseError("zero denominator in '" + text + "'");
        Rational q(n, d);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational '" + text + "'");
    }
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_pow(const Rational& q, long e) {
    if (e < 0) {
        if (q == 0) throw Error("0 has no negative power");
        return 1 / rational_pow(q, -e);
    }
    Rational r(1), base = q;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

bool is_rational_square(const Rational& q) {
    if (q < 0) return false;
    return mpz_perfect_square_p(q.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(q.get_den().get_mpz_t());
}

Rational rational_sqrt(const Rational& q) {
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
    return Rational(n, d);
}

std::vector<Integer> positive_divisors(const Integer& n) {
    Integer m = abs(n);
    if (m == 0) return {};
    // trial division; bail out on values too large to factor quickly
    const unsigned long budget = 2000000;
    std::vector<std::pair<Integer, int>> factors;
    Integer rest = m;
    for (unsigned long p = 2; p <= budget; p == 2 ? p = 3 : p += 2) {
        if (Integer(p) * p > rest) break;
        if (rest % p == 0) {
            int e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            factors.emplace_back(p, e);
        }
    }
    if (rest > 1) {
        if (rest > Integer(budget) * budget) return {};  // unfactored large cofactor
        factors.emplace_back(rest, 1);
    }
    std::vector<Integer> divs{1};
    for (auto& [p, e] : factors) {
        size_t base = divs.size();
        Integer pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace recseq
