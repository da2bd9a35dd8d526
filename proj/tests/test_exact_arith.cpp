#include "recseq/cfinite.hpp"
#include "recseq/errors.hpp"
#include "recseq/linalg.hpp"
#include "recseq/polynomial.hpp"
#include "recseq/rational_function.hpp"

#include <doctest.h>

#include <random>

using namespace recseq;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }

Polynomial P(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return Polynomial(std::move(v));
}

} // namespace

TEST_CASE("rational parsing and canonical form") {
    CHECK(parse_rational("-3") == Q(-3));
    CHECK(parse_rational("6/4") == Q(3, 2));
    CHECK(parse_rational(" 1/3 ") == Q(1, 3));
    CHECK(to_string(Q(-1, 2)) == "-1/2");
    CHECK(to_string(Q(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    // canonicalization is idempotent by construction: mpq keeps lowest terms
    Rational q(6, -4);
    q.canonicalize();
    CHECK(q == Q(-3, 2));
    CHECK(q.get_den() > 0);
}

TEST_CASE("polynomial arithmetic and canonical form") {
    Polynomial p = P({1, 2, 1});  // 1 + 2x + x^2
    CHECK(p.degree() == 2);
    CHECK(Polynomial{}.degree() == -1);  // degree of zero is -1
    CHECK((p - p).degree() == -1);
    CHECK((p - p).is_zero());
    // normalization drops trailing zeros and is idempotent
    Polynomial q(std::vector<Rational>{Q(3), Q(0), Q(0)});
    CHECK(q.degree() == 0);
    CHECK(Polynomial(q.coeffs()) == q);
    CHECK(p.eval(Q(2)) == Q(9));
    CHECK((P({0, 1}) * P({0, 1})).degree() == 2);
}

TEST_CASE("poly_shift examples") {
    // p = n^2, m = 1 -> n^2 + 2n + 1
    CHECK(poly_shift(P({0, 0, 1}), 1) == P({1, 2, 1}));
    // p = n, m = -1 -> n - 1
    CHECK(poly_shift(P({0, 1}), -1) == P({-1, 1}));
    // p = 2n - 1, m = 2 -> 2n + 3, cross-checked by evaluation at 5 points
    Polynomial p = P({-1, 2});
    Polynomial shifted = poly_shift(p, 2);
    CHECK(shifted == P({3, 2}));
    for (long n = 0; n < 5; ++n) CHECK(shifted.eval(Q(n)) == p.eval(Q(n + 2)));
}

TEST_CASE("poly_shift composes additively") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coeff(-4, 4), shift(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> c;
        for (int i = 0; i < 4; ++i) c.emplace_back(coeff(rng));
        Polynomial p(std::move(c));
        long a = shift(rng), b = shift(rng);
        CHECK(poly_shift(poly_shift(p, a), b) == poly_shift(p, a + b));
    }
}

TEST_CASE("polynomial divrem and gcd") {
    Polynomial a = P({-1, 0, 1});           // x^2 - 1
    Polynomial b = P({1, 1});               // x + 1
    auto [q, r] = a.divrem(b);
    CHECK(q == P({-1, 1}));
    CHECK(r.is_zero());
    CHECK(poly_gcd(a, b) == P({1, 1}));     // monic
    CHECK(poly_gcd(Polynomial{}, Polynomial{}).is_zero());
    CHECK(is_squarefree(P({-1, 0, 1})));
    CHECK_FALSE(is_squarefree(P({1, 2, 1})));
}

TEST_CASE("integer and rational roots") {
    // (n-3)(n+1) = n^2 - 2n - 3
    auto roots = integer_roots(P({-3, -2, 1}));
    CHECK(roots == std::vector<long long>{-1, 3});
    // 2x - 1 has root 1/2
    auto rr = rational_roots(P({-1, 2}));
    REQUIRE(rr.size() == 1);
    CHECK(rr[0] == Q(1, 2));
}

TEST_CASE("interpolation through integer nodes") {
    // n^2 - 2n through 0,-1,0
    Polynomial p = interpolate_at_integers(0, {Q(0), Q(-1), Q(0)});
    CHECK(p == P({0, -2, 1}));
}

TEST_CASE("polynomial parser") {
    CHECK(parse_polynomial("n^2-2n") == P({0, -2, 1}));
    CHECK(parse_polynomial("-(2n-1)") == P({1, -2}));
    CHECK(parse_polynomial("3") == P({3}));
    CHECK(parse_polynomial("1/2n^2+1/2n") == Polynomial({Q(0), Q(1, 2), Q(1, 2)}));
    CHECK_THROWS_AS(parse_polynomial("n+"), ParseError);
}

TEST_CASE("rational function reduction and canonical denominator") {
    RationalFunction f(P({0, 1}), P({0, 0, 1}));  // x / x^2 = 1/x
    CHECK(f.num() == P({1}));
    CHECK(f.den() == P({0, 1}));
    RationalFunction g(P({2}), P({-4}));
    CHECK(g.num() == Polynomial({Q(-1, 2)}));
    CHECK(g.den() == P({1}));  // positive leading, integer-primitive
    RationalFunction h = RationalFunction(P({1}), P({1, 1})) + RationalFunction(P({1}), P({-1, 1}));
    // 1/(x+1) + 1/(x-1) = 2x/(x^2-1)
    CHECK(h.num() == P({0, 2}));
    CHECK(h.den() == P({-1, 0, 1}));
}

TEST_CASE("nullspace: single equation kernel") {
    RationalField f;
    Matrix<Rational> m(1, 2);
    m.at(0, 0) = Q(1);
    m.at(0, 1) = Q(-3);
    auto basis = solve_nullspace(m, f);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == std::vector<Rational>{Q(3), Q(1)});
}

TEST_CASE("nullspace: identity has trivial kernel") {
    RationalField f;
    Matrix<Rational> m(2, 2, Q(0));
    m.at(0, 0) = m.at(1, 1) = Q(1);
    CHECK(solve_nullspace(m, f).empty());
}

TEST_CASE("nullspace of the order-1 sum table specialized at a sample index") {
    // table rows (1, C0 D1, C0 C0' D1 D1') and (1, C1 D0, C1 C1' D0 D0')
    // with C, D the coefficients of a(n) = 2^n a(n-1), b(n) = F_n b(n-1),
    // specialized at n = 3 over Q
    RationalField f;
    Rational C1 = Q(1), C0 = Q(16), C0p = Q(32);   // 2^{n+1} at n=3,4
    Rational D1 = Q(1), D0 = Q(3), D0p = Q(5);     // F_{n+1} at n=3,4
    Matrix<Rational> m(2, 3);
    m.at(0, 0) = Q(1);
    m.at(0, 1) = C0 * D1;
    m.at(0, 2) = C0 * C0p * D1;
    m.at(1, 0) = Q(1);
    m.at(1, 1) = C1 * D0;
    m.at(1, 2) = C1 * D0 * D0p;
    auto basis = solve_nullspace(m, f);
    REQUIRE(!basis.empty());
    for (const auto& v : basis) {
        for (long row = 0; row < 2; ++row) {
            Rational acc(0);
            for (long col = 0; col < 3; ++col) acc += m.at(row, col) * v[col];
            CHECK(acc == 0);  // A v = 0 exactly under re-multiplication
        }
        bool nonzero = false;
        for (const auto& x : v)
            if (x != 0) nonzero = true;
        CHECK(nonzero);
    }
}

TEST_CASE("fraction-free elimination over Q matches rref pivot columns") {
    RationalField f;
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> entry(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
        Matrix<Rational> m(3, 4);
        for (long i = 0; i < 3; ++i)
            for (long j = 0; j < 4; ++j) m.at(i, j) = Q(entry(rng));
        Matrix<Rational> copy = m;
        auto elim = fraction_free_eliminate(m, f);
        REQUIRE(elim.status == EliminationStatus::Success);
        auto rref_pivots = rref_in_place(copy, f);
        CHECK(elim.pivot_cols == rref_pivots);
    }
}

TEST_CASE("fraction-free elimination over the C-finite ring: worked first-order sum table") {
    CFiniteRing ring;
    // a(n) = 2^n a(n-1): A0 = 1, A1 = -2^n;  b(n) = F_n b(n-1)
    CFiniteSeq pow2 = cfinite_geometric(Q(2));
    CFiniteSeq fib = cfinite_fibonacci();
    // entries as in the worked example: shifts of the coefficient sequences
    CFiniteSeq C0 = cfinite_ring_shift(pow2, 1);                       // 2^{n+1}
    CFiniteSeq C0p = cfinite_ring_shift(pow2, 2);
    CFiniteSeq D0 = cfinite_ring_shift(fib, 1);                        // F_{n+1}
    CFiniteSeq D0p = cfinite_ring_shift(fib, 2);
    Matrix<CFiniteSeq> m(2, 3, ring.zero());
    m.at(0, 0) = ring.one();
    m.at(0, 1) = C0;
    m.at(0, 2) = ring.mul(C0, C0p);
    m.at(1, 0) = ring.one();
    m.at(1, 1) = D0;
    m.at(1, 2) = ring.mul(D0, D0p);
    auto elim = fraction_free_eliminate(m, ring);
    REQUIRE(elim.status == EliminationStatus::Success);
    REQUIRE(elim.pivot_cols.size() == 2);
    // the second pivot is D0 - C0 = F_{n+1} - 2^{n+1} (row update r1 <- r1 - r0)
    CFiniteSeq expected_pivot = ring.sub(D0, C0);
    CHECK(elim.echelon.at(1, 1) == expected_pivot);
    auto kernel = ring_kernel_vector(elim, ring);
    REQUIRE(kernel.has_value());
    // re-multiply: A x = 0 termwise on 30 terms
    for (long row = 0; row < 2; ++row) {
        CFiniteSeq acc = ring.zero();
        for (long col = 0; col < 3; ++col) acc = ring.add(acc, ring.mul(m.at(row, col), (*kernel)[col]));
        CHECK(cfinite_is_zero(acc));
    }
}

TEST_CASE("fraction-free elimination reports zero-divisor pivots") {
    CFiniteRing ring;
    // (-1)^n - 1: annihilator (1, 0, -1), initials 0, -2
    CFiniteSeq zd({Q(1), Q(0), Q(-1)}, {Q(0), Q(-2)});
    Matrix<CFiniteSeq> m(1, 2, ring.zero());
    m.at(0, 0) = zd;
    m.at(0, 1) = cfinite_one();
    auto elim = fraction_free_eliminate(m, ring);
    REQUIRE(elim.status == EliminationStatus::ZeroDivisorPivot);
    CHECK(elim.fail_row == 0);
    CHECK(elim.fail_col == 0);
    CHECK(elim.offending == zd);
    CHECK(elim.offending_class == PivotClass::ZeroDivisor);
}

TEST_CASE("matrix multiply and determinant") {
    RationalField f;
    Matrix<Rational> a(2, 2), b(2, 2);
    a.at(0, 0) = Q(1); a.at(0, 1) = Q(2); a.at(1, 0) = Q(3); a.at(1, 1) = Q(4);
    b.at(0, 0) = Q(0); b.at(0, 1) = Q(1); b.at(1, 0) = Q(1); b.at(1, 1) = Q(0);
    auto c = matmul(a, b, f);
    CHECK(c.at(0, 0) == Q(2));
    CHECK(c.at(1, 1) == Q(3));
    CHECK(determinant(a, f) == Q(-2));
    Matrix<Rational> s(2, 2, Q(1));
    CHECK(determinant(s, f) == Q(0));
}

TEST_CASE("charpoly, minpoly, companion") {
    // companion of x^2 - x - 1 (Fibonacci)
    Polynomial cp = P({-1, -1, 1});
    auto m = companion_matrix(cp);
    CHECK(charpoly(m) == cp);
    CHECK(matrix_minpoly(m) == cp);
    // a diagonalizable matrix with repeated eigenvalue: minpoly < charpoly
    Matrix<Rational> d(2, 2, Q(0));
    d.at(0, 0) = d.at(1, 1) = Q(5);
    CHECK(charpoly(d) == P({25, -10, 1}));
    CHECK(matrix_minpoly(d) == P({-5, 1}));
}
