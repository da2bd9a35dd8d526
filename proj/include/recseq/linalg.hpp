#ifndef RECSEQ_LINALG_HPP
#define RECSEQ_LINALG_HPP

#include "recseq/errors.hpp"
#include "recseq/polynomial.hpp"
#include "recseq/rational.hpp"
#include "recseq/rational_function.hpp"

#include <concepts>
#include <optional>
#include <vector>

namespace recseq {

/// Classification of a ring element for pivot selection.
/// In the sequence ring, Unit and ZeroDivisor follow the usual dichotomy for
/// sequences with infinitely many nonzero terms; EventuallyZero marks
/// elements that vanish from some index on.
enum class PivotClass { Unit, ZeroDivisor, EventuallyZero, Unknown };

/// Capability bundle a ring must supply for elimination. Fields additionally
/// provide division.
template <class R, class T>
concept EliminationRing = requires(const R r, const T a, const T b) {
    { r.zero() } -> std::convertible_to<T>;
    { r.one() } -> std::convertible_to<T>;
    { r.add(a, b) } -> std::convertible_to<T>;
    { r.sub(a, b) } -> std::convertible_to<T>;
    { r.mul(a, b) } -> std::convertible_to<T>;
    { r.neg(a) } -> std::convertible_to<T>;
    { r.is_zero(a) } -> std::convertible_to<bool>;
    { r.classify(a) } -> std::convertible_to<PivotClass>;
};

template <class R, class T>
concept FieldRing = EliminationRing<R, T> && requires(const R r, const T a, const T b) {
    { r.div(a, b) } -> std::convertible_to<T>;
};

struct RationalField {
    using value_type = Rational;
    Rational zero() const { return Rational(0); }
    Rational one() const { return Rational(1); }
    Rational add(const Rational& a, const Rational& b) const { return a + b; }
    Rational sub(const Rational& a, const Rational& b) const { return a - b; }
    Rational mul(const Rational& a, const Rational& b) const { return a * b; }
    Rational neg(const Rational& a) const { return -a; }
    Rational div(const Rational& a, const Rational& b) const { return a / b; }
    bool is_zero(const Rational& a) const { return a == 0; }
    PivotClass classify(const Rational& a) const {
        return a == 0 ? PivotClass::EventuallyZero : PivotClass::Unit;
    }
};

struct RationalFunctionField {
    using value_type = RationalFunction;
    RationalFunction zero() const { return {}; }
    RationalFunction one() const { return RationalFunction::constant(1); }
    RationalFunction add(const RationalFunction& a, const RationalFunction& b) const { return a + b; }
    RationalFunction sub(const RationalFunction& a, const RationalFunction& b) const { return a - b; }
    RationalFunction mul(const RationalFunction& a, const RationalFunction& b) const { return a * b; }
    RationalFunction neg(const RationalFunction& a) const { return -a; }
    RationalFunction div(const RationalFunction& a, const RationalFunction& b) const { return a / b; }
    bool is_zero(const RationalFunction& a) const { return a.is_zero(); }
    PivotClass classify(const RationalFunction& a) const {
        return a.is_zero() ? PivotClass::EventuallyZero : PivotClass::Unit;
    }
};

/// Row-major dense matrix over an arbitrary entry ring.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(long rows, long cols, const T& fill = T())
        : rows_(rows), cols_(cols), e_(rows * cols, fill) {}

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    T& at(long i, long j) { return e_[i * cols_ + j]; }
    const T& at(long i, long j) const { return e_[i * cols_ + j]; }

    void swap_rows(long i, long j) {
        for (long c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }

private:
    long rows_, cols_;
    std::vector<T> e_;
};

template <class T, class R>
    requires EliminationRing<R, T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b, const R& ring) {
    if (a.cols() != b.rows()) throw Error("matmul: shape mismatch");
    Matrix<T> c(a.rows(), b.cols(), ring.zero());
    for (long i = 0; i < a.rows(); ++i)
        for (long k = 0; k < a.cols(); ++k)
            for (long j = 0; j < b.cols(); ++j)
                c.at(i, j) = ring.add(c.at(i, j), ring.mul(a.at(i, k), b.at(k, j)));
    return c;
}

/// Reduced row echelon form in place; returns pivot columns.
template <class T, class F>
    requires FieldRing<F, T>
std::vector<long> rref_in_place(Matrix<T>& m, const F& f) {
    std::vector<long> pivots;
    long row = 0;
    for (long col = 0; col < m.cols() && row < m.rows(); ++col) {
        long p = -1;
        for (long i = row; i < m.rows(); ++i)
            if (!f.is_zero(m.at(i, col))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        m.swap_rows(row, p);
        T inv_pivot = f.div(f.one(), m.at(row, col));
        for (long c = col; c < m.cols(); ++c) m.at(row, c) = f.mul(m.at(row, c), inv_pivot);
        for (long i = 0; i < m.rows(); ++i) {
            if (i == row || f.is_zero(m.at(i, col))) continue;
            T factor = m.at(i, col);
            for (long c = col; c < m.cols(); ++c)
                m.at(i, c) = f.sub(m.at(i, c), f.mul(factor, m.at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Basis of { x : A x = 0 } over a field; empty when the kernel is trivial.
template <class T, class F>
    requires FieldRing<F, T>
std::vector<std::vector<T>> solve_nullspace(Matrix<T> a, const F& f) {
    std::vector<long> pivots = rref_in_place(a, f);
    std::vector<bool> is_pivot(a.cols(), false);
    for (long c : pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (long free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> v(a.cols(), f.zero());
        v[free] = f.one();
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = f.neg(a.at(static_cast<long>(r), free));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solve A x = rhs over a field, checking consistency of all equations.
/// Free variables are set to zero; returns nullopt when inconsistent.
template <class T, class F>
    requires FieldRing<F, T>
std::optional<std::vector<T>> solve_linear(const Matrix<T>& a, const std::vector<T>& rhs, const F& f) {
    Matrix<T> aug(a.rows(), a.cols() + 1, f.zero());
    for (long i = 0; i < a.rows(); ++i) {
        for (long j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = rhs[i];
    }
    std::vector<long> pivots = rref_in_place(aug, f);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // 0 = 1 row
    std::vector<T> x(a.cols(), f.zero());
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<long>(r), a.cols());
    return x;
}

enum class EliminationStatus { Success, ZeroDivisorPivot };

template <class T>
struct EliminationResult {
    Matrix<T> echelon;
    std::vector<long> pivot_cols;  // one entry per pivot row, in row order
    EliminationStatus status = EliminationStatus::Success;
    long fail_row = -1, fail_col = -1;
    T offending{};                 // the blocking entry when status != Success
    PivotClass offending_class = PivotClass::Unknown;
};

/// Fraction-free Gaussian elimination over a commutative ring. Row updates
/// are cross-multiplications r_i <- p*r_i - q*r_j with the pivot p certified
/// a non-zero-divisor by the ring's classifier. A column whose remaining
/// entries are all zero is skipped; a column with nonzero entries but no
/// usable pivot stops the elimination with ZeroDivisorPivot.
template <class T, class R>
    requires EliminationRing<R, T>
EliminationResult<T> fraction_free_eliminate(Matrix<T> m, const R& ring) {
    EliminationResult<T> res;
    long row = 0;
    for (long col = 0; col < m.cols() && row < m.rows(); ++col) {
        long pivot_row = -1;
        long first_nonzero = -1;
        for (long i = row; i < m.rows(); ++i) {
            if (ring.is_zero(m.at(i, col))) continue;
            if (first_nonzero < 0) first_nonzero = i;
            if (ring.classify(m.at(i, col)) == PivotClass::Unit) {
                pivot_row = i;
                break;
            }
        }
        if (first_nonzero < 0) continue;  // column already clear
        if (pivot_row < 0) {
            res.echelon = std::move(m);
            res.status = EliminationStatus::ZeroDivisorPivot;
            res.fail_row = first_nonzero;
            res.fail_col = col;
            res.offending = res.echelon.at(first_nonzero, col);
            res.offending_class = ring.classify(res.offending);
            return res;
        }
        m.swap_rows(row, pivot_row);
        const T pivot = m.at(row, col);
        for (long i = row + 1; i < m.rows(); ++i) {
            if (ring.is_zero(m.at(i, col))) continue;
            const T factor = m.at(i, col);
            for (long c = 0; c < m.cols(); ++c)
                m.at(i, c) = ring.sub(ring.mul(pivot, m.at(i, c)), ring.mul(factor, m.at(row, c)));
        }
        res.pivot_cols.push_back(col);
        ++row;
    }
    res.echelon = std::move(m);
    return res;
}

/// Nonzero kernel vector of an eliminated system, built without division:
/// the first free column is set to one, remaining free columns to zero, and
/// each pivot step scales the partial solution by the pivot before assigning
/// the pivot variable. All pivots are non-zero-divisors, so the result stays
/// nonzero. Returns nullopt when there is no free column.
template <class T, class R>
    requires EliminationRing<R, T>
std::optional<std::vector<T>> ring_kernel_vector(const EliminationResult<T>& elim, const R& ring) {
    if (elim.status != EliminationStatus::Success) return std::nullopt;
    const Matrix<T>& m = elim.echelon;
    std::vector<bool> is_pivot(m.cols(), false);
    for (long c : elim.pivot_cols) is_pivot[c] = true;
    long first_free = -1;
    for (long c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) {
            first_free = c;
            break;
        }
    if (first_free < 0) return std::nullopt;
    std::vector<T> x(m.cols(), ring.zero());
    x[first_free] = ring.one();
    for (long r = static_cast<long>(elim.pivot_cols.size()) - 1; r >= 0; --r) {
        long pc = elim.pivot_cols[r];
        T rhs = ring.zero();
        for (long c = pc + 1; c < m.cols(); ++c)
            rhs = ring.add(rhs, ring.mul(m.at(r, c), x[c]));
        const T pivot = m.at(r, pc);
        for (long c = pc + 1; c < m.cols(); ++c) x[c] = ring.mul(pivot, x[c]);
        x[pc] = ring.neg(rhs);
    }
    return x;
}

/// Determinant over a field by elimination.
template <class T, class F>
    requires FieldRing<F, T>
T determinant(Matrix<T> m, const F& f) {
    if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
    T det = f.one();
    for (long col = 0; col < m.cols(); ++col) {
        long p = -1;
        for (long i = col; i < m.rows(); ++i)
            if (!f.is_zero(m.at(i, col))) {
                p = i;
                break;
            }
        if (p < 0) return f.zero();
        if (p != col) {
            m.swap_rows(col, p);
            det = f.neg(det);
        }
        det = f.mul(det, m.at(col, col));
        for (long i = col + 1; i < m.rows(); ++i) {
            if (f.is_zero(m.at(i, col))) continue;
            T factor = f.div(m.at(i, col), m.at(col, col));
            for (long c = col; c < m.cols(); ++c)
                m.at(i, c) = f.sub(m.at(i, c), f.mul(factor, m.at(col, c)));
        }
    }
    return det;
}

/// Incrementally feed vectors; add() reports, for the first vector that is
/// linearly dependent on the ones before it, the coefficients lambda with
/// v_new = sum lambda_i * v_i. Used for minimal-order recurrence/operator
/// searches where the first dependence gives the minimal relation.
template <class T, class F>
    requires FieldRing<F, T>
class DependenceFinder {
public:
    explicit DependenceFinder(long dim, const F& f) : dim_(dim), f_(f) {}

    std::optional<std::vector<T>> add(std::vector<T> v) {
        std::vector<T> combo(history_ + 1, f_.zero());
        combo[history_] = f_.one();
        for (size_t b = 0; b < basis_.size(); ++b) {
            long lead = lead_[b];
            if (f_.is_zero(v[lead])) continue;
            T factor = f_.div(v[lead], basis_[b][lead]);
            for (long c = 0; c < dim_; ++c) v[c] = f_.sub(v[c], f_.mul(factor, basis_[b][c]));
            for (size_t h = 0; h < combos_[b].size(); ++h)
                combo[h] = f_.sub(combo[h], f_.mul(factor, combos_[b][h]));
        }
        long lead = -1;
        for (long c = 0; c < dim_; ++c)
            if (!f_.is_zero(v[c])) {
                lead = c;
                break;
            }
        if (lead < 0) {
            // dependence: v_new - reductions = 0, i.e. sum combo_h * input_h = 0
            // report lambda with input_new = sum lambda_i input_i (i < new)
            std::vector<T> lambda(history_, f_.zero());
            for (long h = 0; h < history_; ++h) lambda[h] = f_.neg(combo[h]);
            ++history_;
            return lambda;
        }
        basis_.push_back(std::move(v));
        combos_.push_back(std::move(combo));
        lead_.push_back(lead);
        ++history_;
        return std::nullopt;
    }

private:
    long dim_;
    F f_;
    long history_ = 0;
    std::vector<std::vector<T>> basis_;
    std::vector<std::vector<T>> combos_;  // basis_[b] = sum combos_[b][h] * input_h
    std::vector<long> lead_;
};

/// Characteristic polynomial of a rational matrix (Faddeev-LeVerrier).
Polynomial charpoly(const Matrix<Rational>& m);

/// Minimal polynomial of a rational matrix: first monic dependence among
/// I, M, M^2, ...
Polynomial matrix_minpoly(const Matrix<Rational>& m);

/// Companion matrix of a monic characteristic polynomial x^k + p_1 x^{k-1} +
/// ... + p_k, acting on state (a(n), ..., a(n+k-1)).
Matrix<Rational> companion_matrix(const Polynomial& charpoly_monic);

Matrix<Rational> kronecker(const Matrix<Rational>& a, const Matrix<Rational>& b);

} // namespace recseq

#endif
