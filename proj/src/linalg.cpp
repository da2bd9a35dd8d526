#include "recseq/linalg.hpp"

namespace recseq {

Polynomial charpoly(const Matrix<Rational>& m) {
    if (m.rows() != m.cols()) throw Error("charpoly of non-square matrix");
    const long n = m.rows();
    RationalField f;
    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr(M_1);
    // M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    Matrix<Rational> mk = m;
    for (long k = 1; k <= n; ++k) {
        if (k > 1) {
            Matrix<Rational> adj = mk;
            for (long i = 0; i < n; ++i) adj.at(i, i) += c[n - k + 1];
            mk = matmul(m, adj, f);
        }
        Rational tr(0);
        for (long i = 0; i < n; ++i) tr += mk.at(i, i);
        c[n - k] = -tr / Rational(k);
    }
    return Polynomial(std::move(c));
}

Polynomial matrix_minpoly(const Matrix<Rational>& m) {
    if (m.rows() != m.cols()) throw Error("minpoly of non-square matrix");
    const long n = m.rows();
    RationalField f;
    DependenceFinder<Rational, RationalField> finder(n * n, f);
    Matrix<Rational> power(n, n, Rational(0));
    for (long i = 0; i < n; ++i) power.at(i, i) = 1;
    for (long deg = 0; deg <= n; ++deg) {
        std::vector<Rational> flat;
        flat.reserve(n * n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) flat.push_back(power.at(i, j));
        if (auto lambda = finder.add(std::move(flat))) {
            // M^deg = sum lambda_i M^i  =>  minpoly = x^deg - sum lambda_i x^i
            std::vector<Rational> coeffs(deg + 1, Rational(0));
            coeffs[deg] = 1;
            for (long i = 0; i < deg; ++i) coeffs[i] = -(*lambda)[i];
            return Polynomial(std::move(coeffs));
        }
        power = matmul(power, m, f);
    }
    throw Error("matrix_minpoly: no dependence found");  // unreachable
}

Matrix<Rational> companion_matrix(const Polynomial& cp) {
    const long k = cp.degree();
    if (k < 1 || cp.leading() != 1) throw Error("companion_matrix needs a monic polynomial of degree >= 1");
    Matrix<Rational> m(k, k, Rational(0));
    for (long i = 0; i + 1 < k; ++i) m.at(i, i + 1) = 1;
    // state (a(n),...,a(n+k-1)): a(n+k) = -p_1 a(n+k-1) - ... - p_k a(n)
    for (long j = 0; j < k; ++j) m.at(k - 1, j) = -cp.coeff(j);
    return m;
}

Matrix<Rational> kronecker(const Matrix<Rational>& a, const Matrix<Rational>& b) {
    Matrix<Rational> m(a.rows() * b.rows(), a.cols() * b.cols(), Rational(0));
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            for (long p = 0; p < b.rows(); ++p)
                for (long q = 0; q < b.cols(); ++q)
                    m.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
    return m;
}

} // namespace recseq
