#include "recseq/guess.hpp"

#include "recseq/errors.hpp"
#include "recseq/linalg.hpp"

#include <algorithm>

namespace recseq {

GuessDiagnostic guess_diagnostic(long k, long coeff_order, long long N) {
    // data a(1..N); recurrence equations need full history: n in [k+1, N];
    // each coefficient sequence C_i is determined on n in [k+1, N] and its
    // own recurrence needs m back-values inside that window.
    GuessDiagnostic d;
    d.N = N;
    d.equations = (N - k) + k * (N - k - coeff_order);
    d.variables = k * (N - k) + static_cast<long long>(k) * coeff_order;
    return d;
}

std::optional<PolySeq> guess_polynomial(const TermVector& data, long margin) {
    const long long len = data.size();
    if (len < 2) throw InsufficientData("guess_polynomial needs at least 2 terms");
    if (margin < 1) margin = 1;
    // repeated differencing: the first all-zero level gives the degree
    std::vector<Rational> diffs = data.terms;
    long degree = 0;
    bool reached_zero = false;
    for (long level = 0; !diffs.empty(); ++level) {
        bool all_zero = true;
        for (const auto& v : diffs)
            if (v != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) {
            degree = level - 1;
            reached_zero = true;
            break;
        }
        std::vector<Rational> next(diffs.size() - 1);
        for (size_t i = 0; i + 1 < diffs.size(); ++i) next[i] = diffs[i + 1] - diffs[i];
        diffs = std::move(next);
    }
    if (!reached_zero) return std::nullopt;
    if (degree < 0) return PolySeq{Polynomial{}};  // all terms zero
    if (len < degree + 1 + margin) return std::nullopt;
    std::vector<Rational> nodes(data.terms.begin(), data.terms.begin() + degree + 1);
    Polynomial p = interpolate_at_integers(0, nodes);
    // confirm on every provided term
    for (long long i = 0; i < len; ++i)
        if (p.eval(Rational(static_cast<long>(i))) != data.terms[i]) return std::nullopt;
    return PolySeq{std::move(p)};
}

namespace {

std::optional<CFiniteSeq> fit_cfinite_order(const std::vector<Rational>& t, long k) {
    const long long len = static_cast<long long>(t.size());
    if (k == 0) {
        for (const auto& v : t)
            if (v != 0) return std::nullopt;
        return cfinite_zero();
    }
    RationalField f;
    Matrix<Rational> m(len - k, k);
    std::vector<Rational> rhs(len - k);
    for (long long p = k; p < len; ++p) {
        for (long i = 1; i <= k; ++i) m.at(p - k, i - 1) = t[p - i];
        rhs[p - k] = -t[p];
    }
    auto sol = solve_linear(m, rhs, f);
    if (!sol) return std::nullopt;
    std::vector<Rational> ann(k + 1);
    ann[0] = 1;
    for (long i = 1; i <= k; ++i) ann[i] = (*sol)[i - 1];
    return CFiniteSeq(std::move(ann), std::vector<Rational>(t.begin(), t.begin() + k));
}

} // namespace

std::optional<CFiniteSeq> guess_cfinite(const TermVector& data, const GuessConfig& cfg) {
    const long long len = data.size();
    const long margin = std::max<long>(cfg.margin, 1);
    if (len < 2 + margin)
        throw InsufficientData("guess_cfinite needs at least 2 + margin terms");
    for (long k = 0; k <= cfg.max_order; ++k) {
        if (len - k < k + margin) break;  // not enough surplus equations at this order
        if (auto fit = fit_cfinite_order(data.terms, k)) return cfinite_minimize(*fit);
    }
    return std::nullopt;
}

std::optional<HolonomicSeq> guess_holonomic(const TermVector& data, const GuessConfig& cfg) {
    const long long len = data.size();
    const long margin = std::max<long>(cfg.margin, 1);
    RationalField f;
    bool any_cell_posed = false;
    for (long k = 0; k <= cfg.max_order; ++k) {
        for (long d = 0; d <= cfg.max_degree; ++d) {
            const long unknowns = (k + 1) * (d + 1);
            const long long equations = len - k;
            // the system is homogeneous, so one unknown is projective
            if (equations < unknowns - 1 + margin) continue;
            any_cell_posed = true;
            Matrix<Rational> m(equations, unknowns, Rational(0));
            for (long long p = k; p < len; ++p)
                for (long i = 0; i <= k; ++i) {
                    Rational npow(1);
                    for (long e = 0; e <= d; ++e) {
                        m.at(p - k, i * (d + 1) + e) = npow * data.terms[p - i];
                        npow *= Rational(static_cast<long>(p));
                    }
                }
            auto kernel = solve_nullspace(m, f);
            for (const auto& vec : kernel) {
                std::vector<Polynomial> polys(k + 1);
                for (long i = 0; i <= k; ++i) {
                    std::vector<Rational> c(vec.begin() + i * (d + 1), vec.begin() + (i + 1) * (d + 1));
                    polys[i] = Polynomial(std::move(c));
                }
                if (polys[0].is_zero()) continue;
                polys = integer_normalize(std::move(polys));
                long long offset = k;
                for (long long root : integer_roots(polys[0]))
                    if (root >= offset) offset = root + 1;
                if (offset >= len) continue;  // leading coefficient vanishing too deep into the data
                std::vector<Rational> init(data.terms.begin(), data.terms.begin() + offset);
                return HolonomicSeq(std::move(polys), std::move(init), offset);
            }
        }
    }
    if (!any_cell_posed)
        throw InsufficientData("guess_holonomic: too few terms for any (order, degree) cell");
    return std::nullopt;
}

std::optional<XRecursiveSeq> guess_xrecursive_first_order(const TermVector& data,
                                                          const GuessConfig& cfg) {
    const long long len = data.size();
    for (long long i = 0; i < len; ++i)
        if (data.terms[i] == 0) throw ZeroTermInData(data.start_index + i);
    if (len < 2) throw InsufficientData("guess_xrecursive_first_order needs at least 2 terms");
    TermVector ratios{0, {}};
    ratios.terms.reserve(len - 1);
    for (long long i = 1; i < len; ++i) ratios.terms.push_back(data.terms[i] / data.terms[i - 1]);
    auto rho = guess_cfinite(ratios, cfg);
    if (!rho && cfg.margin > 1) {
        // how much surplus data certifies an X-recursive guess is open; when
        // the configured margin cannot be met, retry once with the minimal
        // surplus of one confirming equation rather than refusing outright
        GuessConfig relaxed = cfg;
        relaxed.margin = 1;
        rho = guess_cfinite(ratios, relaxed);
    }
    if (!rho) return std::nullopt;
    // relation a(n) - r(n) a(n-1) = 0 with r(n) = rho(n-1)
    CFiniteSeq c1 = cfinite_ring_shift(cfinite_ring_neg(*rho), -1);
    XRecursiveSeq model({cfinite_one(), std::move(c1)}, {data.terms[0]});
    if (model.terms(len) != data.terms) return std::nullopt;
    return model;
}

std::optional<XRecursiveSeq> guess_xrecursive_dict(const TermVector& data, const GuessConfig& cfg) {
    if (cfg.basis.empty()) throw Error("guess_xrecursive_dict needs a non-empty basis");
    const long long len = data.size();
    const long margin = std::max<long>(cfg.margin, 1);
    const long B = static_cast<long>(cfg.basis.size());
    RationalField f;
    std::vector<std::vector<Rational>> atom_terms;
    for (const auto& atom : cfg.basis) atom_terms.push_back(atom.seq.terms(len));
    bool any_posed = false;
    for (long k = 1; k <= cfg.max_order; ++k) {
        const long unknowns = k * B;
        const long long equations = len - k;
        if (equations < unknowns + margin) continue;
        any_posed = true;
        // a(p) + sum_{i,j} lambda_{i,j} atom_j(p) a(p-i) = 0
        Matrix<Rational> m(equations, unknowns);
        std::vector<Rational> rhs(equations);
        for (long long p = k; p < len; ++p) {
            for (long i = 1; i <= k; ++i)
                for (long j = 0; j < B; ++j)
                    m.at(p - k, (i - 1) * B + j) = atom_terms[j][p] * data.terms[p - i];
            rhs[p - k] = -data.terms[p];
        }
        auto sol = solve_linear(m, rhs, f);
        if (!sol) continue;
        std::vector<CFiniteSeq> coeffs{cfinite_one()};
        for (long i = 1; i <= k; ++i) {
            CFiniteSeq ci = cfinite_zero();
            for (long j = 0; j < B; ++j)
                ci = cfinite_ring_add(ci, cfinite_scale(cfg.basis[j].seq, (*sol)[(i - 1) * B + j]));
            coeffs.push_back(std::move(ci));
        }
        XRecursiveSeq model(std::move(coeffs),
                            std::vector<Rational>(data.terms.begin(), data.terms.begin() + k));
        if (model.terms(len) == data.terms) return model;
    }
    if (!any_posed)
        throw InsufficientData("guess_xrecursive_dict: too few terms for any order with this basis");
    return std::nullopt;
}

} // namespace recseq
