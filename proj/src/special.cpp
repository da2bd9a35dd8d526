#include "recseq/special.hpp"

#include "recseq/errors.hpp"

#include <vector>

namespace recseq {

TermVector somos2014_terms(long long count) {
    if (count < 1) throw Error("somos2014_terms needs count >= 1");
    std::vector<Rational> t{Rational(1), Rational(1), Rational(2)};
    while (static_cast<long long>(t.size()) < count) {
        long long n = static_cast<long long>(t.size()) - 3;
        Rational den = t[n] * t[n + 1];
        if (den == 0) throw DivisionByZeroInRecurrence(n + 3);
        t.push_back((t[n] * t[n + 2] * t[n + 2] + t[n + 2] * t[n + 1] * t[n + 1]) / den);
    }
    t.resize(count);
    return {0, std::move(t)};
}

TermVector somos4_terms(long long count) {
    if (count < 1) throw Error("somos4_terms needs count >= 1");
    std::vector<Rational> t{Rational(1), Rational(1), Rational(1), Rational(1)};
    while (static_cast<long long>(t.size()) < count) {
        long long n = static_cast<long long>(t.size());
        if (t[n - 4] == 0) throw DivisionByZeroInRecurrence(n);
        t.push_back((t[n - 1] * t[n - 3] + t[n - 2] * t[n - 2]) / t[n - 4]);
    }
    t.resize(count);
    return {0, std::move(t)};
}

TermVector bell_like_terms(long long count) {
    if (count < 1) throw Error("bell_like_terms needs count >= 1");
    std::vector<Rational> b{Rational(1)};
    while (static_cast<long long>(b.size()) < count) {
        long long n = static_cast<long long>(b.size()) - 1;
        Rational s(0);
        for (long long j = 0; j <= n; ++j) {
            Integer binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
            s += Rational(binom) * b[j];
        }
        b.push_back(s);
    }
    return {0, std::move(b)};
}

TermVector bernoulli_coeff_terms(long long count) {
    if (count < 1) throw Error("bernoulli_coeff_terms needs count >= 1");
    std::vector<Rational> a{Rational(1)};
    std::vector<Integer> fact{1};  // fact[m] = m!
    auto factorial = [&fact](long long m) -> const Integer& {
        while (static_cast<long long>(fact.size()) <= m) fact.push_back(fact.back() * static_cast<long>(fact.size()));
        return fact[m];
    };
    while (static_cast<long long>(a.size()) < count) {
        long long n = static_cast<long long>(a.size());
        Rational s(0);
        for (long long j = 0; j < n; ++j) s += a[j] / Rational(factorial(n + 1 - j));
        a.push_back(-s);
    }
    return {0, std::move(a)};
}

TermVector tangent_coeff_terms(long long count) {
    if (count < 1) throw Error("tangent_coeff_terms needs count >= 1");
    // c_j: series coefficients of sin x cos x
    std::vector<Rational> c{Rational(0), Rational(1)};
    for (long long j = 2; j <= count + 2; ++j)
        c.push_back(Rational(-4) * c[j - 2] / Rational(static_cast<long>(j * (j - 1))));
    std::vector<Rational> a{Rational(0)};
    if (count > 1) a.push_back(Rational(1));
    while (static_cast<long long>(a.size()) < count) {
        long long n = static_cast<long long>(a.size());
        Rational s(0);
        for (long long j = 1; j < n; ++j) s += Rational(static_cast<long>(j)) * c[n - j + 1] * a[j];
        a.push_back(s / Rational(static_cast<long>(1 - n)));
    }
    return {0, std::move(a)};
}

} // namespace recseq
