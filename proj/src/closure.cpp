#include "recseq/closure.hpp"

#include "recseq/errors.hpp"
#include "recseq/genfunc.hpp"

#include <algorithm>

namespace recseq {

namespace {

void check_against_oracle(const std::vector<Rational>& got, const std::vector<Rational>& oracle,
                          const char* what) {
    if (got != oracle) throw std::logic_error(std::string(what) + ": construction disagrees with termwise oracle");
}

} // namespace

ClosureReport<CFiniteSeq> cfinite_add(const CFiniteSeq& a, const CFiniteSeq& b) {
    const long bound = a.order() + b.order();
    const long long verify = 2 * bound + 4;
    CFiniteSeq result = cfinite_ring_add(a, b);
    auto ta = a.terms(verify), tb = b.terms(verify);
    std::vector<Rational> oracle(verify);
    for (long long i = 0; i < verify; ++i) oracle[i] = ta[i] + tb[i];
    check_against_oracle(result.terms(verify), oracle, "cfinite_add");
    return {std::move(result), bound, verify};
}

ClosureReport<CFiniteSeq> cfinite_mul(const CFiniteSeq& a, const CFiniteSeq& b) {
    const long bound = a.order() * b.order();
    const long long verify = 2 * bound + 4;
    CFiniteSeq result = cfinite_ring_mul(a, b);
    auto ta = a.terms(verify), tb = b.terms(verify);
    std::vector<Rational> oracle(verify);
    for (long long i = 0; i < verify; ++i) oracle[i] = ta[i] * tb[i];
    check_against_oracle(result.terms(verify), oracle, "cfinite_mul");
    return {std::move(result), bound, verify};
}

ClosureReport<CFiniteSeq> cfinite_partial_sum(const CFiniteSeq& a) {
    const long bound = a.order() + 1;
    const long long verify = 2 * bound + 4;
    CFiniteSeq result = cfinite_partial_sum_seq(a);
    auto ta = a.terms(verify);
    std::vector<Rational> oracle(verify);
    Rational acc(0);
    for (long long i = 0; i < verify; ++i) {
        acc += ta[i];
        oracle[i] = acc;
    }
    check_against_oracle(result.terms(verify), oracle, "cfinite_partial_sum");
    return {std::move(result), bound, verify};
}

ClosureReport<CFiniteSeq> cfinite_multisection(const CFiniteSeq& a, long m, long r) {
    const long bound = std::max<long>(a.order(), 1);
    const long long verify = 2 * bound + 4;
    CFiniteSeq result = cfinite_multisection_seq(a, m, r);
    auto ta = a.terms(static_cast<long long>(m) * (verify - 1) + r + 1);
    std::vector<Rational> oracle(verify);
    for (long long i = 0; i < verify; ++i) oracle[i] = ta[m * i + r];
    check_against_oracle(result.terms(verify), oracle, "cfinite_multisection");
    return {std::move(result), a.order(), verify};
}

// --- holonomic closures ---

namespace {

// reduction vectors: a(n+s) = sum_j u[s][j](n) * a(n+j), j < order
std::vector<std::vector<RationalFunction>> shift_reductions(const HolonomicSeq& a, long max_shift) {
    const long r = a.order();
    std::vector<std::vector<RationalFunction>> u;
    for (long s = 0; s <= max_shift; ++s) {
        std::vector<RationalFunction> v(r);
        if (s < r) {
            v[s] = RationalFunction::constant(1);
        } else {
            Polynomial n = Polynomial::variable();
            RationalFunction lead(poly_shift(a.polys()[0], s), Polynomial::constant(1));
            for (long t = 1; t <= r; ++t) {
                RationalFunction coeff =
                    -RationalFunction(poly_shift(a.polys()[t], s), Polynomial::constant(1)) / lead;
                for (long j = 0; j < r; ++j) v[j] = v[j] + coeff * u[s - t][j];
            }
        }
        u.push_back(std::move(v));
    }
    return u;
}

long long max_integer_root(const Polynomial& p) {
    long long m = -1;
    for (long long r : integer_roots(p)) m = std::max(m, r);
    return m;
}

// base-n validity of the reduction table for input a used up to max_shift
long long reduction_valid_from(const HolonomicSeq& a) {
    long long n0 = std::max<long long>(0, a.offset() - a.order());
    n0 = std::max(n0, max_integer_root(a.polys()[0]) + 1 - a.order());
    return n0;
}

struct DependenceResult {
    std::vector<Polynomial> polys;  // backward form p_0 ... p_M
    long M = 0;                     // recurrence order
};

// feed shift vectors until the first linear dependence; convert to cleared
// backward-form polynomial coefficients
template <class VecProducer>
DependenceResult first_recurrence(long dim, VecProducer produce, long max_rows) {
    RationalFunctionField f;
    DependenceFinder<RationalFunction, RationalFunctionField> finder(dim, f);
    for (long s = 0; s <= max_rows; ++s) {
        auto lambda = finder.add(produce(s));
        if (!lambda) continue;
        const long M = s;
        // c(n+M) = sum lambda_i(n) c(n+i); clear denominators
        Polynomial common = Polynomial::constant(1);
        for (const auto& l : *lambda) {
            Polynomial g = poly_gcd(common, l.den());
            common = common * l.den().divrem(g).first;
        }
        std::vector<Polynomial> mu(M + 1);
        mu[M] = common;
        for (long i = 0; i < M; ++i) {
            auto scaled = (*lambda)[i] * RationalFunction::from_poly(common);
            if (!scaled.is_polynomial()) throw std::logic_error("denominator clearing failed");
            mu[i] = -(scaled.num() * (Rational(1) / scaled.den().coeff(0)));
        }
        // backward: p_j(m) = mu[M-j](m - M)
        std::vector<Polynomial> polys(M + 1);
        for (long j = 0; j <= M; ++j) polys[j] = poly_shift(mu[M - j], -M);
        return {integer_normalize(std::move(polys)), M};
    }
    throw DegenerateOperator("no linear dependence within the closure bound");
}

ClosureReport<HolonomicSeq> finish_holonomic(std::vector<Polynomial> polys, long M, long bound,
                                             long long n0, const std::vector<Rational>& oracle,
                                             const char* what) {
    long long offset = std::max<long long>(M, n0 + M);
    offset = std::max(offset, max_integer_root(polys[0]) + 1);
    if (offset + M >= static_cast<long long>(oracle.size()))
        throw std::logic_error(std::string(what) + ": validity offset exceeds the verification window");
    std::vector<Rational> init(oracle.begin(), oracle.begin() + offset);
    HolonomicSeq result(std::move(polys), std::move(init), offset);
    check_against_oracle(result.terms(oracle.size()), oracle, what);
    return {std::move(result), bound, static_cast<long long>(oracle.size())};
}

} // namespace

ClosureReport<HolonomicSeq> holonomic_add(const HolonomicSeq& a, const HolonomicSeq& b) {
    const long ra = a.order(), rb = b.order();
    const long bound = ra + rb;
    const long long verify = std::max<long long>(2 * bound + 4, 20);
    auto ua = shift_reductions(a, bound + 1);
    auto ub = shift_reductions(b, bound + 1);
    auto rec = first_recurrence(
        ra + rb,
        [&](long s) {
            std::vector<RationalFunction> v;
            v.reserve(ra + rb);
            for (long j = 0; j < ra; ++j) v.push_back(ua[s][j]);
            for (long j = 0; j < rb; ++j) v.push_back(ub[s][j]);
            return v;
        },
        bound);
    long long n0 = std::max(reduction_valid_from(a), reduction_valid_from(b));
    long long window = verify + n0 + 2 * bound + 4;
    auto ta = a.terms(window), tb = b.terms(window);
    std::vector<Rational> oracle(window);
    for (long long i = 0; i < window; ++i) oracle[i] = ta[i] + tb[i];
    return finish_holonomic(std::move(rec.polys), rec.M, bound, n0, oracle, "holonomic_add");
}

ClosureReport<HolonomicSeq> holonomic_hadamard(const HolonomicSeq& a, const HolonomicSeq& b) {
    const long ra = a.order(), rb = b.order();
    const long bound = std::max<long>(ra * rb, 1);
    const long long verify = std::max<long long>(2 * bound + 4, 20);
    auto ua = shift_reductions(a, bound + 1);
    auto ub = shift_reductions(b, bound + 1);
    auto rec = first_recurrence(
        ra * rb,
        [&](long s) {
            std::vector<RationalFunction> v;
            v.reserve(ra * rb);
            for (long j = 0; j < ra; ++j)
                for (long l = 0; l < rb; ++l) v.push_back(ua[s][j] * ub[s][l]);
            return v;
        },
        bound);
    long long n0 = std::max(reduction_valid_from(a), reduction_valid_from(b));
    long long window = verify + n0 + 2 * bound + 4;
    auto ta = a.terms(window), tb = b.terms(window);
    std::vector<Rational> oracle(window);
    for (long long i = 0; i < window; ++i) oracle[i] = ta[i] * tb[i];
    return finish_holonomic(std::move(rec.polys), rec.M, bound, n0, oracle, "holonomic_hadamard");
}

ClosureReport<HolonomicSeq> holonomic_partial_sum(const HolonomicSeq& a) {
    const long ra = a.order();
    const long bound = ra + 1;
    const long long verify = std::max<long long>(2 * bound + 4, 20);
    auto ua = shift_reductions(a, bound + 1);
    auto rec = first_recurrence(
        ra + 1,
        [&](long s) {
            // basis {a(n+j): j < ra} + {c(n)}; c(n+s) = c(n) + sum_{t=1..s} a(n+t)
            std::vector<RationalFunction> v(ra + 1);
            v[ra] = RationalFunction::constant(1);
            for (long t = 1; t <= s; ++t)
                for (long j = 0; j < ra; ++j) v[j] = v[j] + ua[t][j];
            return v;
        },
        bound);
    long long n0 = reduction_valid_from(a);
    long long window = verify + n0 + 2 * bound + 4;
    auto ta = a.terms(window);
    std::vector<Rational> oracle(window);
    Rational acc(0);
    for (long long i = 0; i < window; ++i) {
        acc += ta[i];
        oracle[i] = acc;
    }
    return finish_holonomic(std::move(rec.polys), rec.M, bound, n0, oracle, "holonomic_partial_sum");
}

ClosureReport<HolonomicSeq> holonomic_cauchy(const HolonomicSeq& a, const HolonomicSeq& b) {
    OdeOperator opa = homogenize(holonomic_rec_to_ode(a));
    OdeOperator opb = homogenize(holonomic_rec_to_ode(b));
    const long bound = opa.order() * opb.order();
    const long long verify = std::max<long long>(2 * bound + 4, 20);
    long long window = verify + 4 * bound + 16;
    auto ta = a.terms(window), tb = b.terms(window);
    OdeOperator prod = dfinite_multiply(opa, opb, ta, tb);
    HolonomicSkeleton skel = ode_to_rec(prod);
    std::vector<Rational> oracle(window);
    for (long long n = 0; n < window; ++n) {
        Rational s(0);
        for (long long i = 0; i <= n; ++i) s += ta[i] * tb[n - i];
        oracle[n] = s;
    }
    long long offset = std::max<long long>(skel.min_offset, skel.order());
    offset = std::max(offset, max_integer_root(skel.polys[0]) + 1);
    if (offset + skel.order() >= window)
        throw std::logic_error("holonomic_cauchy: validity offset exceeds the verification window");
    std::vector<Rational> init(oracle.begin(), oracle.begin() + offset);
    HolonomicSeq result(skel.polys, std::move(init), offset);
    check_against_oracle(result.terms(window), oracle, "holonomic_cauchy");
    const long result_order = result.order();
    return {std::move(result), result_order, window};
}

// --- X-recursive closures ---

namespace {

struct XReduction {
    // prefactor * a(n+s) = sum_j coeff[j] * a(n+j), termwise for all n >= 0
    CFiniteSeq prefactor;
    std::vector<CFiniteSeq> coeff;
};

// iterated forward substitution in the C-finite coefficient ring
std::vector<XReduction> x_shift_reductions(const XRecursiveSeq& a, long max_shift, const CFiniteRing& ring) {
    const long k = a.order();
    std::vector<XReduction> red;
    for (long s = 0; s <= max_shift; ++s) {
        XReduction r{ring.one(), std::vector<CFiniteSeq>(k, ring.zero())};
        if (s < k) {
            r.coeff[s] = ring.one();
        } else {
            // A_0(n+s) a(n+s) = -sum_t A_t(n+s) a(n+s-t)
            CFiniteSeq lead = cfinite_ring_shift(a.coeffs()[0], s);
            // common multiplier: product of prefactors of every reduced term
            std::vector<long> needs;
            for (long t = 1; t <= k; ++t)
                if (s - t >= k) needs.push_back(t);
            CFiniteSeq common = ring.one();
            for (long t : needs) common = ring.mul(common, red[s - t].prefactor);
            r.prefactor = ring.mul(lead, common);
            for (long t = 1; t <= k; ++t) {
                CFiniteSeq at = ring.neg(cfinite_ring_shift(a.coeffs()[t], s));
                if (s - t >= k) {
                    CFiniteSeq excl = ring.one();
                    for (long t2 : needs)
                        if (t2 != t) excl = ring.mul(excl, red[s - t2].prefactor);
                    CFiniteSeq factor = ring.mul(at, excl);
                    for (long j = 0; j < k; ++j)
                        r.coeff[j] = ring.add(r.coeff[j], ring.mul(factor, red[s - t].coeff[j]));
                } else {
                    r.coeff[s - t] = ring.add(r.coeff[s - t], ring.mul(at, common));
                }
            }
        }
        red.push_back(std::move(r));
    }
    return red;
}

struct XTable {
    Matrix<CFiniteSeq> m;             // equations x unknowns
    std::vector<CFiniteSeq> row_mult; // R_s multiplying c(n+s) in row s
};

XClosureResult assemble_xclosure(const XTable& table, long bound,
                                 const std::vector<Rational>& oracle, const CFiniteRing& ring,
                                 const char* what) {
    auto elim = fraction_free_eliminate(table.m, ring);
    if (elim.status == EliminationStatus::ZeroDivisorPivot) {
        XClosureFailure fail;
        fail.row = elim.fail_row;
        fail.col = elim.fail_col;
        fail.pivot = elim.offending;
        fail.pivot_class = elim.offending_class;
        fail.reason = elim.offending_class == PivotClass::ZeroDivisor
                          ? "pivot is a zero divisor in the sequence ring"
                          : (elim.offending_class == PivotClass::EventuallyZero
                                 ? "pivot is eventually zero (zero in the sequence ring)"
                                 : "pivot has unknown zero-divisor status");
        return fail;
    }
    auto x = ring_kernel_vector(elim, ring);
    if (!x) throw std::logic_error(std::string(what) + ": elimination left no free unknown");
    const long rows = static_cast<long>(table.row_mult.size());
    std::vector<CFiniteSeq> relation(rows);
    long top = -1;
    for (long s = 0; s < rows; ++s) {
        relation[s] = ring.mul((*x)[s], table.row_mult[s]);
        if (!ring.is_zero(relation[s])) top = s;
    }
    if (top <= 0) {
        // degenerate: the combination collapses; only sustainable when the
        // target sequence is identically zero
        for (const auto& v : oracle)
            if (v != 0) throw std::logic_error(std::string(what) + ": degenerate relation for a nonzero sequence");
        XRecursiveSeq zero({cfinite_one(), cfinite_zero()}, {Rational(0)});
        return ClosureReport<XRecursiveSeq>{std::move(zero), bound, static_cast<long long>(oracle.size())};
    }
    // backward form: C_j(m) = relation[top - j](m - top)
    std::vector<CFiniteSeq> coeffs(top + 1);
    for (long j = 0; j <= top; ++j) coeffs[j] = cfinite_ring_shift(relation[top - j], -top);
    std::vector<Rational> init(oracle.begin(), oracle.begin() + top);
    XRecursiveSeq result(std::move(coeffs), std::move(init));
    check_against_oracle(result.terms(oracle.size()), oracle, what);
    return ClosureReport<XRecursiveSeq>{std::move(result), bound, static_cast<long long>(oracle.size())};
}

template <class TableBuilder, class OracleBuilder>
XClosureResult run_xclosure(long base_rows, const XClosureOptions& opt, TableBuilder build,
                            OracleBuilder oracle_of, const char* what) {
    CFiniteRing ring{opt.zd_scan, opt.zd_max_period};
    std::optional<XClosureFailure> first_failure;
    for (long extra = 0; extra <= opt.retry_depth; ++extra) {
        const long rows = base_rows + extra;
        XTable table = build(rows, ring);
        const long bound = rows - 1;
        long long verify = std::max<long long>(opt.min_verify_terms, 2 * bound + 4);
        auto result = assemble_xclosure(table, bound, oracle_of(verify), ring, what);
        if (std::holds_alternative<ClosureReport<XRecursiveSeq>>(result)) return result;
        if (!first_failure) first_failure = std::get<XClosureFailure>(result);
    }
    return *first_failure;
}

} // namespace

XClosureResult xrecursive_add(const XRecursiveSeq& a, const XRecursiveSeq& b,
                              const XClosureOptions& opt) {
    const long ka = a.order(), kb = b.order();
    auto build = [&](long rows, const CFiniteRing& ring) {
        auto ra = x_shift_reductions(a, rows - 1, ring);
        auto rb = x_shift_reductions(b, rows - 1, ring);
        XTable t{Matrix<CFiniteSeq>(ka + kb, rows, ring.zero()), {}};
        for (long s = 0; s < rows; ++s) {
            // R_s (a(n+s)+b(n+s)) = Qb_s * sum alpha a(n+j) + Qa_s * sum beta b(n+j)
            t.row_mult.push_back(ring.mul(ra[s].prefactor, rb[s].prefactor));
            for (long j = 0; j < ka; ++j)
                t.m.at(j, s) = ring.mul(rb[s].prefactor, ra[s].coeff[j]);
            for (long j = 0; j < kb; ++j)
                t.m.at(ka + j, s) = ring.mul(ra[s].prefactor, rb[s].coeff[j]);
        }
        return t;
    };
    auto oracle_of = [&](long long count) {
        auto ta = a.terms(count), tb = b.terms(count);
        std::vector<Rational> o(count);
        for (long long i = 0; i < count; ++i) o[i] = ta[i] + tb[i];
        return o;
    };
    return run_xclosure(ka + kb + 1, opt, build, oracle_of, "xrecursive_add");
}

XClosureResult xrecursive_hadamard(const XRecursiveSeq& a, const XRecursiveSeq& b,
                                   const XClosureOptions& opt) {
    const long ka = a.order(), kb = b.order();
    auto build = [&](long rows, const CFiniteRing& ring) {
        auto ra = x_shift_reductions(a, rows - 1, ring);
        auto rb = x_shift_reductions(b, rows - 1, ring);
        XTable t{Matrix<CFiniteSeq>(ka * kb, rows, ring.zero()), {}};
        for (long s = 0; s < rows; ++s) {
            t.row_mult.push_back(ring.mul(ra[s].prefactor, rb[s].prefactor));
            for (long j = 0; j < ka; ++j)
                for (long l = 0; l < kb; ++l)
                    t.m.at(j * kb + l, s) = ring.mul(ra[s].coeff[j], rb[s].coeff[l]);
        }
        return t;
    };
    auto oracle_of = [&](long long count) {
        auto ta = a.terms(count), tb = b.terms(count);
        std::vector<Rational> o(count);
        for (long long i = 0; i < count; ++i) o[i] = ta[i] * tb[i];
        return o;
    };
    return run_xclosure(ka * kb + 1, opt, build, oracle_of, "xrecursive_hadamard");
}

XClosureResult xrecursive_partial_sum(const XRecursiveSeq& a, const XClosureOptions& opt) {
    const long ka = a.order();
    auto build = [&](long rows, const CFiniteRing& ring) {
        auto ra = x_shift_reductions(a, rows - 1, ring);
        // basis {a(n+j): j < ka} + {c(n)}; c(n+s) = c(n) + sum_{t<=s} a(n+t)
        XTable t{Matrix<CFiniteSeq>(ka + 1, rows, ring.zero()), {}};
        for (long s = 0; s < rows; ++s) {
            std::vector<long> needs;
            for (long tt = 1; tt <= s; ++tt)
                if (tt >= ka) needs.push_back(tt);
            CFiniteSeq common = ring.one();
            for (long tt : needs) common = ring.mul(common, ra[tt].prefactor);
            t.row_mult.push_back(common);
            t.m.at(ka, s) = common;  // coefficient of c(n)
            for (long tt = 1; tt <= s; ++tt) {
                if (tt >= ka) {
                    CFiniteSeq excl = ring.one();
                    for (long t2 : needs)
                        if (t2 != tt) excl = ring.mul(excl, ra[t2].prefactor);
                    for (long j = 0; j < ka; ++j)
                        t.m.at(j, s) = ring.add(t.m.at(j, s), ring.mul(excl, ra[tt].coeff[j]));
                } else {
                    t.m.at(tt, s) = ring.add(t.m.at(tt, s), common);
                }
            }
        }
        return t;
    };
    auto oracle_of = [&](long long count) {
        auto ta = a.terms(count);
        std::vector<Rational> o(count);
        Rational acc(0);
        for (long long i = 0; i < count; ++i) {
            acc += ta[i];
            o[i] = acc;
        }
        return o;
    };
    return run_xclosure(ka + 2, opt, build, oracle_of, "xrecursive_partial_sum");
}

} // namespace recseq
