#ifndef RECSEQ_PROVER_HPP
#define RECSEQ_PROVER_HPP

#include "recseq/cfinite.hpp"

#include <memory>
#include <string>
#include <vector>

namespace recseq {

/// Expression over C-finite atoms, closed under the operations whose closure
/// order bounds are known: add (r+s), multiply (r*s), partial sum (r+1),
/// shift and multisection (r). Scaling by a rational constant keeps the
/// bound. The flagship identity F(2n) = 2 F(n) F(n+1) - F(n)^2 becomes a
/// tree with multisection, shift and product nodes.
class CFiniteExpr {
public:
    static CFiniteExpr atom(CFiniteSeq seq, std::string name = "a");
    static CFiniteExpr constant(const Rational& c);
    static CFiniteExpr add(CFiniteExpr l, CFiniteExpr r);
    static CFiniteExpr sub(CFiniteExpr l, CFiniteExpr r);
    static CFiniteExpr negate(CFiniteExpr e);
    static CFiniteExpr multiply(CFiniteExpr l, CFiniteExpr r);
    static CFiniteExpr scale(const Rational& c, CFiniteExpr e);
    /// e evaluated at n + m, m >= 0.
    static CFiniteExpr shift(CFiniteExpr e, long m);
    /// e evaluated at m*n + r, m >= 1, 0 <= r < m.
    static CFiniteExpr multisection(CFiniteExpr e, long m, long r);
    static CFiniteExpr partial_sum(CFiniteExpr e);

    /// Order bound from the closure-property table, computed recursively.
    long order_bound() const;
    /// Exact value at index n >= 0.
    Rational eval(long long n) const;
    std::string to_string() const;

    struct Node;  // tree node; defined in the implementation

private:
    std::shared_ptr<const Node> node_;
};

struct ZeroProof {
    bool proven = false;
    long bound = 0;
    long long counterexample_index = -1;
    Rational counterexample_value;
    std::vector<Rational> checked_values;  // values at 0..bound (or up to the counterexample)
    std::string transcript() const;
};

/// Prove that the expression is the zero sequence by checking indices
/// 0..order_bound(e): a C-finite sequence of order at most d that vanishes
/// at d+1 consecutive initial points is identically zero, so this check is
/// a complete proof, not a heuristic.
ZeroProof prove_zero(const CFiniteExpr& e);

/// prove_zero(lhs - rhs).
ZeroProof prove_identity(const CFiniteExpr& lhs, const CFiniteExpr& rhs);

} // namespace recseq

#endif
