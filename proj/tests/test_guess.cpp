#include "recseq/errors.hpp"
#include "recseq/guess.hpp"
#include "recseq/model_io.hpp"

#include <doctest.h>

#include "oracles.hpp"

using namespace recseq;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }

TermVector tv(std::initializer_list<long> xs) {
    TermVector t;
    for (long x : xs) t.terms.emplace_back(x);
    return t;
}

TermVector scaled(const TermVector& t, const Rational& lambda) {
    TermVector s = t;
    for (auto& v : s.terms) v *= lambda;
    return s;
}

} // namespace

TEST_CASE("guess_polynomial recovers n^2 - 2n") {
    auto p = guess_polynomial(tv({0, -1, 0, 3, 8, 15, 24, 35}));
    REQUIRE(p.has_value());
    CHECK(p->poly == Polynomial({Q(0), Q(-2), Q(1)}));
}

TEST_CASE("guess_polynomial: constants and misses") {
    auto c = guess_polynomial(tv({5, 5, 5, 5, 5, 5}));
    REQUIRE(c.has_value());
    CHECK(c->poly.degree() == 0);
    CHECK(c->poly.coeff(0) == Q(5));
    // Fibonacci is not polynomial: differencing never reaches a zero row
    CHECK_FALSE(guess_polynomial(tv({1, 1, 2, 3, 5, 8, 13, 21})).has_value());
}

TEST_CASE("guess_cfinite recovers the worked example") {
    auto g = guess_cfinite(tv({2, 3, 5, 9, 17, 33, 65, 129, 257, 513, 1025}));
    REQUIRE(g.has_value());
    CHECK(g->annihilator() == std::vector<Rational>{Q(1), Q(-3), Q(2)});
    CHECK(g->initials() == std::vector<Rational>{Q(2), Q(3)});
}

TEST_CASE("guess_cfinite recovers Fibonacci and geometric") {
    auto f = guess_cfinite(tv({0, 1, 1, 2, 3, 5, 8, 13, 21, 34}));
    REQUIRE(f.has_value());
    CHECK(f->annihilator() == std::vector<Rational>{Q(1), Q(-1), Q(-1)});
    GuessConfig cfg;
    cfg.margin = 4;
    auto g = guess_cfinite(tv({1, 2, 4, 8, 16, 32, 64}), cfg);
    REQUIRE(g.has_value());
    CHECK(g->order() == 1);
    CHECK(g->annihilator() == std::vector<Rational>{Q(1), Q(-2)});
}

TEST_CASE("guess_cfinite: insufficient data and no fit") {
    CHECK_THROWS_AS((void)guess_cfinite(tv({1, 2, 3})), InsufficientData);
    // factorial growth is not C-finite
    CHECK_FALSE(guess_cfinite(tv({1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880, 3628800, 39916800}))
                    .has_value());
}

TEST_CASE("guess_holonomic: factorial") {
    auto h = guess_holonomic(tv({1, 1, 2, 6, 24, 120, 720, 5040, 40320}));
    REQUIRE(h.has_value());
    CHECK(h->order() == 1);
    // a(n) - n a(n-1) = 0
    CHECK(h->polys()[0] == Polynomial({Q(1)}));
    CHECK(h->polys()[1] == Polynomial({Q(0), Q(-1)}));
}

TEST_CASE("guess_holonomic: harmonic numbers") {
    TermVector data;
    data.terms = {Q(0), Q(1), Q(3, 2), Q(11, 6), Q(25, 12), Q(137, 60),
                  Q(49, 20), Q(363, 140), Q(761, 280), Q(7129, 2520), Q(7381, 2520), Q(83711, 27720)};
    auto h = guess_holonomic(data);
    REQUIRE(h.has_value());
    CHECK(h->order() == 2);
    CHECK(h->polys()[0] == Polynomial({Q(0), Q(1)}));    // n
    CHECK(h->polys()[1] == Polynomial({Q(1), Q(-2)}));   // -(2n-1)
    CHECK(h->polys()[2] == Polynomial({Q(-1), Q(1)}));   // n-1
    // overdetermination: margin-many equations beyond the projective
    // unknown count are satisfied (10 equations vs 6-1 unknowns, margin 5)
    long long equations = data.size() - h->order();
    long eff_unknowns = (h->order() + 1) * (h->degree() + 1) - 1;
    CHECK(equations >= eff_unknowns + 5);
}

TEST_CASE("guess_holonomic degenerates to constant coefficients on C-finite input") {
    auto h = guess_holonomic(tv({2, 3, 5, 9, 17, 33, 65, 129, 257, 513, 1025}));
    REQUIRE(h.has_value());
    CHECK(h->order() == 2);
    CHECK(h->degree() == 0);
    CHECK(h->polys()[0] == Polynomial({Q(1)}));
    CHECK(h->polys()[1] == Polynomial({Q(-3)}));
    CHECK(h->polys()[2] == Polynomial({Q(2)}));
}

TEST_CASE("guess_xrecursive_first_order: somos 2014") {
    auto x = guess_xrecursive_first_order(tv({1, 1, 2, 6, 30, 240, 3120, 65520, 2227680, 122522400}));
    REQUIRE(x.has_value());
    CHECK(x->order() == 1);
    // ratio sequence rho(m) = a(m+1)/a(m) = F(m+2): annihilator (1,-1,-1), initials 1,2
    CFiniteSeq rho = cfinite_minimize(cfinite_ring_shift(cfinite_ring_neg(x->coeffs()[1]), 1));
    CHECK(rho.annihilator() == std::vector<Rational>{Q(1), Q(-1), Q(-1)});
    CHECK(rho.initials() == std::vector<Rational>{Q(1), Q(2)});
}

TEST_CASE("guess_xrecursive_first_order: the weighted summation sequence") {
    auto x = guess_xrecursive_first_order(
        tv({1, 1, 2, 6, 24, 144, 1296, 18144, 399168, 13970880}));
    REQUIRE(x.has_value());
    // coefficient sequence C with a(n) = C(n) a(n-1): C(m) satisfies
    // C(m) = 2 C(m-1) - C(m-3) and takes values 2, 3, 4 at the first three
    // indices following the exceptional head
    CFiniteSeq rho = cfinite_minimize(cfinite_ring_shift(cfinite_ring_neg(x->coeffs()[1]), 1));
    auto c = rho.terms(12);
    CHECK(c[1] == Q(2));
    CHECK(c[2] == Q(3));
    CHECK(c[3] == Q(4));
    for (size_t m = 4; m < c.size(); ++m) CHECK(c[m] == 2 * c[m - 1] - c[m - 3]);
}

TEST_CASE("guess_xrecursive_first_order: geometric degenerates to a constant ratio") {
    GuessConfig cfg;
    cfg.margin = 2;
    auto x = guess_xrecursive_first_order(tv({1, 2, 4, 8, 16}), cfg);
    REQUIRE(x.has_value());
    CFiniteSeq rho = cfinite_minimize(cfinite_ring_shift(cfinite_ring_neg(x->coeffs()[1]), 1));
    CHECK(rho == cfinite_const(Q(2)));
}

TEST_CASE("guess_xrecursive_first_order rejects zero terms") {
    CHECK_THROWS_AS((void)guess_xrecursive_first_order(tv({1, 0, 2, 3, 4, 5, 6})), ZeroTermInData);
}

TEST_CASE("guess_xrecursive_dict: a(n) = a(n-1) + 2^n a(n-2) with basis {1, 2^n}") {
    GuessConfig cfg;
    cfg.basis = {parse_basis_atom("1"), parse_basis_atom("2^n")};
    TermVector data;
    data.terms = {Q(1), Q(1)};
    for (long n = 2; n < 12; ++n)
        data.terms.push_back(data.terms[n - 1] + rational_pow(Q(2), n) * data.terms[n - 2]);
    auto x = guess_xrecursive_dict(data, cfg);
    REQUIRE(x.has_value());
    CHECK(x->order() == 2);
    CHECK(x->coeffs()[1] == cfinite_const(Q(-1)));
    CHECK(x->coeffs()[2] == cfinite_scale(cfinite_geometric(Q(2)), Q(-1)));
}

TEST_CASE("guess_xrecursive_dict: A089126 with basis {F(n), F(n-1)}") {
    GuessConfig cfg;
    cfg.basis = {parse_basis_atom("F(n)"), parse_basis_atom("F(n-1)")};
    TermVector data;
    auto fib = oracle::fibonacci(16);
    data.terms = {Q(1), Q(1)};
    for (long n = 2; n < 14; ++n)
        data.terms.push_back(fib[n] * data.terms[n - 1] + fib[n - 1] * data.terms[n - 2]);
    CHECK(data.terms[4] == Q(19));  // frozen spot value
    auto x = guess_xrecursive_dict(data, cfg);
    REQUIRE(x.has_value());
    CHECK(x->order() == 2);
    CHECK(x->coeffs()[1] == cfinite_scale(cfinite_fibonacci(), Q(-1)));
    CHECK(x->coeffs()[2] == cfinite_scale(cfinite_ring_shift(cfinite_fibonacci(), -1), Q(-1)));
}

TEST_CASE("guess_xrecursive_dict with basis {1} degenerates to guess_cfinite") {
    GuessConfig cfg;
    cfg.basis = {parse_basis_atom("1")};
    TermVector data = tv({0, 1, 1, 2, 3, 5, 8, 13, 21, 34});
    auto x = guess_xrecursive_dict(data, cfg);
    REQUIRE(x.has_value());
    auto c = guess_cfinite(data);
    REQUIRE(c.has_value());
    // same order-2 recurrence with constant coefficients -1, -1
    CHECK(x->order() == 2);
    CHECK(x->coeffs()[1] == cfinite_const(Q(-1)));
    CHECK(x->coeffs()[2] == cfinite_const(Q(-1)));
    CHECK(c->annihilator() == std::vector<Rational>{Q(1), Q(-1), Q(-1)});
}

TEST_CASE("guess diagnostics: the (2,2) counting") {
    auto d12 = guess_diagnostic(2, 2, 12);
    CHECK(d12.equations == 26);
    CHECK(d12.variables == 24);
    auto d10 = guess_diagnostic(2, 2, 10);
    CHECK(d10.equations == 20);
    CHECK(d10.variables == 20);
    auto d11 = guess_diagnostic(2, 2, 11);
    CHECK(d11.equations == 23);
    CHECK(d11.variables == 22);
    // equations exceed variables exactly when N > 10
    for (long long N = 6; N <= 16; ++N) {
        auto d = guess_diagnostic(2, 2, N);
        CHECK((d.equations > d.variables) == (N > 10));
    }
}

TEST_CASE("guess soundness: models reproduce their data") {
    TermVector data = tv({2, 3, 5, 9, 17, 33, 65, 129, 257, 513, 1025});
    auto c = guess_cfinite(data);
    REQUIRE(c.has_value());
    CHECK(c->terms(data.size()) == data.terms);
    auto h = guess_holonomic(data);
    REQUIRE(h.has_value());
    CHECK(h->terms(data.size()) == data.terms);
}

TEST_CASE("guess minimality: no smaller model fits") {
    TermVector data = tv({2, 3, 5, 9, 17, 33, 65, 129, 257, 513, 1025});
    auto c = guess_cfinite(data);
    REQUIRE(c.has_value());
    CHECK(oracle::hankel_min_order(data.terms, 4) == c->order());
    auto p = guess_polynomial(tv({0, -1, 0, 3, 8, 15, 24, 35}));
    REQUIRE(p.has_value());
    // exhaustive: no polynomial of smaller degree interpolates the data
    for (long d = 0; d < p->poly.degree(); ++d) {
        std::vector<Rational> nodes;
        for (long i = 0; i <= d; ++i) nodes.push_back(Q((i * i) - 2 * i));
        Polynomial cand = interpolate_at_integers(0, nodes);
        bool fits = true;
        for (long n = 0; n < 8; ++n)
            if (cand.eval(Q(n)) != Q(n * n - 2 * n)) fits = false;
        CHECK_FALSE(fits);
    }
}

TEST_CASE("guess robustness to scaling") {
    TermVector data = tv({2, 3, 5, 9, 17, 33, 65, 129, 257, 513, 1025});
    auto base = guess_cfinite(data);
    REQUIRE(base.has_value());
    for (const Rational& lambda : {Q(2), Q(-1), Q(1, 3)}) {
        auto g = guess_cfinite(scaled(data, lambda));
        REQUIRE(g.has_value());
        CHECK(g->annihilator() == base->annihilator());
        std::vector<Rational> scaled_init = base->initials();
        for (auto& v : scaled_init) v *= lambda;
        CHECK(g->initials() == scaled_init);
    }
    TermVector hdata;
    hdata.terms = {Q(1), Q(1), Q(2), Q(6), Q(24), Q(120), Q(720), Q(5040), Q(40320)};
    auto hbase = guess_holonomic(hdata);
    REQUIRE(hbase.has_value());
    for (const Rational& lambda : {Q(2), Q(-1), Q(1, 3)}) {
        auto h = guess_holonomic(scaled(hdata, lambda));
        REQUIRE(h.has_value());
        CHECK(h->polys() == hbase->polys());
    }
}

TEST_CASE("guess overdetermination: margin-many surplus equations hold") {
    // 11 terms, order 2: equations = 9 >= 2 + margin(5); all are satisfied,
    // not merely the square part, because the model reproduces every term
    TermVector data = tv({2, 3, 5, 9, 17, 33, 65, 129, 257, 513, 1025});
    GuessConfig cfg;
    auto c = guess_cfinite(data, cfg);
    REQUIRE(c.has_value());
    long long equations = data.size() - c->order();
    CHECK(equations >= c->order() + cfg.margin);
    CHECK(oracle::annihilates(c->annihilator(), data.terms));
}
