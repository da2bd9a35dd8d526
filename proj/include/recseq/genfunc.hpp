#ifndef RECSEQ_GENFUNC_HPP
#define RECSEQ_GENFUNC_HPP

#include "recseq/algebraic.hpp"
#include "recseq/cfinite.hpp"
#include "recseq/rational_function.hpp"
#include "recseq/sequences.hpp"

#include <string>
#include <vector>

namespace recseq {

/// Linear differential operator with polynomial coefficients:
///   q_0(x) f + q_1(x) f' + ... + q_k(x) f^(k) = rhs(x).
/// rhs = 0 for a homogeneous operator; recurrence-to-ODE conversion
/// naturally produces a polynomial right-hand side from the initial terms
/// (e.g. x^2 f' + (x-1) f = -1 for the factorial series), and homogenize()
/// trades it for one extra order.
struct OdeOperator {
    std::vector<Polynomial> coeffs;
    Polynomial rhs;

    long order() const { return static_cast<long>(coeffs.size()) - 1; }
    bool is_homogeneous() const { return rhs.is_zero(); }
    long coeff_degree() const;
    std::string to_string() const;
    bool operator==(const OdeOperator& o) const = default;
};

/// Apply (rhs * D - rhs') on the left to cancel the right-hand side.
OdeOperator homogenize(const OdeOperator& op);

/// Recurrence shape extracted from an ODE: polynomial coefficients in
/// backward form without initial values, valid from min_offset on.
struct HolonomicSkeleton {
    std::vector<Polynomial> polys;
    long long min_offset = 0;
    long order() const { return static_cast<long>(polys.size()) - 1; }
};

/// Truncated power series of num/den through x^T (den(0) != 0).
std::vector<Rational> series_of_rational_function(const RationalFunction& rf, long long T);

/// Rational generating function of a C-finite sequence; the denominator is
/// the annihilator polynomial 1 + c_1 x + ... + c_k x^k of the minimized
/// input and the numerator has degree at most k-1.
RationalFunction cfinite_gf(const CFiniteSeq& a);

/// Generating function q(x)/(1-x)^{deg+1} of a polynomial-as-sequence.
RationalFunction polyseq_gf(const PolySeq& p);

/// ODE satisfied by the generating function of a holonomic sequence. For a
/// sequence of order r and degree d the homogeneous part has order <= d and
/// coefficient degree <= r+d; the right-hand side collects the boundary
/// defects of the first offset terms. Series-verified before returning.
OdeOperator holonomic_rec_to_ode(const HolonomicSeq& a);

/// Coefficient recurrence of a homogeneous ODE (inverse direction).
HolonomicSkeleton ode_to_rec(const OdeOperator& op);

/// Operator annihilating the product of two D-finite series, of order at
/// most order(opf)*order(opg). Both operators must be homogeneous; the
/// initial coefficient runs seed the series for verification.
OdeOperator dfinite_multiply(const OdeOperator& opf, const OdeOperator& opg,
                             const std::vector<Rational>& f_init,
                             const std::vector<Rational>& g_init);

/// Functional-differential relation for the generating function of a
/// first-order X-recursive sequence a(n) = C_n a(n-1):
///   f(x) = inhomogeneous(x) + sum_terms q(x) * d^j/dx^j [ f(scale * x) ].
/// Derivatives are taken of the scaled composite, matching the worked
/// examples (a(n) = (n+1) 2^n a(n-1) gives f = a(0) + 2x^2 f'(2x) + 4x f(2x)).
/// Scales live in a single quotient ring Q[t]/(modulus) with squarefree
/// modulus; rational scales appear as constant residues.
struct ScaledDiffRelation {
    struct Term {
        AlgebraicScalar scale;
        int deriv_order = 0;
        std::vector<AlgebraicScalar> coeff;  // polynomial in x, constant first
    };
    Polynomial modulus;                      // shared extension modulus
    std::vector<Term> terms;
    std::vector<AlgebraicScalar> inhomogeneous;

    std::string to_string() const;
};

/// Construct the relation for a first-order X-recursive sequence whose
/// leading coefficient is a nonzero constant. Supported coefficient shapes:
/// polynomial(n) * beta^n with rational beta, and sums of geometric terms
/// with a squarefree characteristic polynomial whose irrational part is at
/// most quadratic; a finite exceptional head is absorbed into the
/// inhomogeneous polynomial. Anything else throws
/// UnsupportedCoefficientShape. The relation is series-verified to order
/// max(25, 2*order(C)+10) before being returned.
ScaledDiffRelation xrecursive_first_order_funceq(const XRecursiveSeq& a);

/// Exact truncated-series check of a relation against the sequence terms:
/// both sides must agree as series through x^T.
bool verify_series_relation(const ScaledDiffRelation& rel, const std::vector<Rational>& a_terms,
                            long long T);
bool verify_series_relation(const ScaledDiffRelation& rel, const XRecursiveSeq& a, long long T);

} // namespace recseq

#endif
