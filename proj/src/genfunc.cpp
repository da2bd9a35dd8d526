#include "recseq/genfunc.hpp"

#include "recseq/errors.hpp"
#include "recseq/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace recseq {

long OdeOperator::coeff_degree() const {
    long d = 0;
    for (const auto& q : coeffs) d = std::max(d, q.degree());
    return d;
}

std::string OdeOperator::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t s = 0; s < coeffs.size(); ++s) {
        if (coeffs[s].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << coeffs[s].to_string("x") << ")*f";
        for (size_t i = 0; i < s; ++i) os << "'";
        first = false;
    }
    if (first) os << "0";
    os << " = " << rhs.to_string("x");
    return os.str();
}

OdeOperator homogenize(const OdeOperator& op) {
    if (op.is_homogeneous()) return op;
    const Polynomial& r = op.rhs;
    Polynomial rp = r.derivative();
    // (r D - r') applied to sum q_s D^s
    std::vector<Polynomial> out(op.coeffs.size() + 1);
    for (size_t s = 0; s < op.coeffs.size(); ++s) {
        out[s + 1] = out[s + 1] + r * op.coeffs[s];
        out[s] = out[s] + r * op.coeffs[s].derivative() - rp * op.coeffs[s];
    }
    OdeOperator h{integer_normalize(std::move(out)), Polynomial{}};
    if (h.coeffs.back().is_zero()) throw DegenerateOperator("homogenization lost the leading coefficient");
    return h;
}

std::vector<Rational> series_of_rational_function(const RationalFunction& rf, long long T) {
    const Polynomial& den = rf.den();
    if (den.coeff(0) == 0) throw Error("series expansion at a pole of the denominator");
    std::vector<Rational> s(T + 1, Rational(0));
    Rational d0 = den.coeff(0);
    for (long long n = 0; n <= T; ++n) {
        Rational acc = rf.num().coeff(n);
        for (long long j = 1; j <= std::min<long long>(n, den.degree()); ++j)
            acc -= den.coeff(j) * s[n - j];
        s[n] = acc / d0;
    }
    return s;
}

RationalFunction cfinite_gf(const CFiniteSeq& a_in) {
    CFiniteSeq a = cfinite_minimize(a_in);
    const long k = a.order();
    if (k == 0) return {};
    Polynomial den(a.annihilator());
    auto t = a.terms(k);
    std::vector<Rational> num(k, Rational(0));
    for (long n = 0; n < k; ++n) {
        Rational acc = t[n];
        for (long i = 1; i <= n; ++i) acc += a.annihilator()[i] * t[n - i];
        num[n] = acc;
    }
    RationalFunction gf(Polynomial(std::move(num)), std::move(den));
    // postcondition: truncated expansion reproduces the terms
    long long T = 2 * k + 4;
    if (series_of_rational_function(gf, T) != a.terms(T + 1))
        throw std::logic_error("cfinite_gf: series check failed");
    return gf;
}

RationalFunction polyseq_gf(const PolySeq& p) {
    if (p.poly.is_zero()) return {};
    const long k = p.poly.degree();
    // binomial-basis expansion: poly(n) = sum_j b_j C(n, j) with b_j the
    // j-th forward difference at 0; sum C(n,j) x^n = x^j/(1-x)^{j+1}
    std::vector<Rational> diffs = p.terms(k + 1);
    Polynomial one_minus_x({Rational(1), Rational(-1)});
    Polynomial num;
    for (long j = 0; j <= k; ++j) {
        num = num + Polynomial::monomial(j, diffs[0]) * one_minus_x.pow(k - j);
        std::vector<Rational> next(diffs.size() - 1);
        for (size_t i = 0; i + 1 < diffs.size(); ++i) next[i] = diffs[i + 1] - diffs[i];
        diffs = std::move(next);
    }
    RationalFunction gf(std::move(num), one_minus_x.pow(k + 1));
    long long T = 2 * k + 6;
    if (series_of_rational_function(gf, T) != p.terms(T + 1))
        throw std::logic_error("polyseq_gf: series check failed");
    return gf;
}

namespace {

// second-kind Stirling numbers up to row n
std::vector<std::vector<Rational>> stirling2(long n) {
    std::vector<std::vector<Rational>> s(n + 1, std::vector<Rational>(n + 1, Rational(0)));
    s[0][0] = 1;
    for (long j = 1; j <= n; ++j)
        for (long t = 1; t <= j; ++t)
            s[j][t] = s[j - 1][t] * Rational(t) + s[j - 1][t - 1];
    return s;
}

// coefficients through x^T of q(x) * D^s applied to a series
std::vector<Rational> apply_poly_diff(const Polynomial& q, long s, const std::vector<Rational>& f,
                                      long long T) {
    std::vector<Rational> out(T + 1, Rational(0));
    for (long long n = 0; n <= T; ++n) {
        for (long u = 0; u <= std::min<long long>(q.degree(), n); ++u) {
            long long m = n - u + s;  // f-series index feeding x^n
            if (m >= static_cast<long long>(f.size())) continue;
            Rational fall(1);
            for (long i = 0; i < s; ++i) fall *= Rational(static_cast<long>(m - i));
            out[n] += q.coeff(u) * fall * f[m];
        }
    }
    return out;
}

// residual of (op applied to series) - rhs, valid through T - order(op)
std::vector<Rational> ode_residual(const OdeOperator& op, const std::vector<Rational>& f, long long T) {
    std::vector<Rational> res(T + 1, Rational(0));
    for (long s = 0; s <= op.order(); ++s) {
        auto part = apply_poly_diff(op.coeffs[s], s, f, T);
        for (long long n = 0; n <= T; ++n) res[n] += part[n];
    }
    for (long long n = 0; n <= std::min<long long>(T, op.rhs.degree()); ++n) res[n] -= op.rhs.coeff(n);
    return res;
}

} // namespace

OdeOperator holonomic_rec_to_ode(const HolonomicSeq& a) {
    const long r = a.order();
    const long d = a.degree();
    // sum_i x^i p_i(theta) f = rhs,  p~_i(n) = p_i(n+i),  theta^j = sum S2(j,s) x^s D^s
    auto s2 = stirling2(std::max<long>(d, 1));
    std::vector<Polynomial> q(d + 1);
    for (long i = 0; i <= r; ++i) {
        Polynomial pt = poly_shift(a.polys()[i], i);
        for (long j = 0; j <= pt.degree(); ++j) {
            Rational cj = pt.coeff(j);
            if (cj == 0) continue;
            if (j == 0) {
                q[0] = q[0] + Polynomial::monomial(i, cj);
                continue;
            }
            for (long s = 1; s <= j; ++s)
                q[s] = q[s] + Polynomial::monomial(i + s, cj * s2[j][s]);
        }
    }
    while (q.size() > 1 && q.back().is_zero()) q.pop_back();
    // boundary defects: rhs = sum_{n < offset} (sum_i p_i(n) a(n-i)) x^n, a(m<0)=0
    auto init = a.terms(a.offset());
    std::vector<Rational> rhs_coeffs(std::max<long long>(a.offset(), 1), Rational(0));
    for (long long n = 0; n < a.offset(); ++n) {
        Rational defect(0);
        for (long i = 0; i <= r && i <= n; ++i)
            defect += a.polys()[i].eval(Rational(static_cast<long>(n))) * init[n - i];
        rhs_coeffs[n] = defect;
    }
    Polynomial rhs(std::move(rhs_coeffs));
    // joint content normalization of coefficients and rhs
    std::vector<Polynomial> all = q;
    all.push_back(rhs);
    all = integer_normalize(std::move(all));
    rhs = all.back();
    all.pop_back();
    OdeOperator op{std::move(all), std::move(rhs)};
    if (op.coeffs.back().is_zero() && op.order() > 0) throw DegenerateOperator("rec_to_ode: zero leading coefficient");
    // sign convention: positive leading coefficient of the top-order term
    if (!op.coeffs.back().is_zero() && op.coeffs.back().leading() < 0) {
        for (auto& p : op.coeffs) p = -p;
        op.rhs = -op.rhs;
    }
    // series verification
    long long T = 2 * (r + d) + 10;
    auto f = a.terms(T + 1);
    auto res = ode_residual(op, f, T - op.order());
    for (const auto& v : res)
        if (v != 0) throw std::logic_error("holonomic_rec_to_ode: series check failed");
    return op;
}

HolonomicSkeleton ode_to_rec(const OdeOperator& op) {
    if (!op.is_homogeneous()) throw DegenerateOperator("ode_to_rec needs a homogeneous operator");
    // coefficient of x^n in x^u D^s f: (n+s-u)(n+s-u-1)...(n-u+1) a(n+s-u);
    // for n < u the term is absent, but its falling factorial vanishes
    // anyway once every touched index is >= 0, so the collected recurrence
    // holds for all n with n + delta_min >= 0
    long delta_max = 0, delta_min = 0;
    for (long s = 0; s <= op.order(); ++s) {
        const Polynomial& q = op.coeffs[s];
        for (long u = 0; u <= q.degree(); ++u) {
            if (q.coeff(u) == 0) continue;
            delta_max = std::max(delta_max, s - u);
            delta_min = std::min(delta_min, s - u);
        }
    }
    std::vector<Polynomial> by_delta(delta_max - delta_min + 1);
    Polynomial n = Polynomial::variable();
    for (long s = 0; s <= op.order(); ++s) {
        const Polynomial& q = op.coeffs[s];
        for (long u = 0; u <= q.degree(); ++u) {
            if (q.coeff(u) == 0) continue;
            Polynomial fall = Polynomial::constant(q.coeff(u));
            for (long i = 0; i < s; ++i)
                fall = fall * (n + Polynomial::constant(Rational(s - u - i)));
            by_delta[s - u - delta_min] = by_delta[s - u - delta_min] + fall;
        }
    }
    while (by_delta.size() > 1 && by_delta.back().is_zero()) {
        by_delta.pop_back();
        --delta_max;
    }
    if (by_delta.back().is_zero()) throw DegenerateOperator("ode_to_rec: empty operator");
    // backward form at m = n + delta_max: polys[j](m) = by_delta[delta_max - j](m - delta_max)
    const long K = delta_max - delta_min;
    std::vector<Polynomial> polys(K + 1);
    for (long j = 0; j <= K; ++j)
        polys[j] = poly_shift(by_delta[K - j], -delta_max);
    HolonomicSkeleton skel{integer_normalize(std::move(polys)), K};
    return skel;
}

namespace {

// extend a coefficient run with the recurrence of a homogeneous operator
std::vector<Rational> extend_series(const OdeOperator& op, const std::vector<Rational>& init,
                                    long long count) {
    HolonomicSkeleton skel = ode_to_rec(op);
    const long K = skel.order();
    std::vector<Rational> t(init.begin(), init.end());
    if (static_cast<long long>(t.size()) < skel.min_offset)
        throw InsufficientData("not enough initial coefficients to expand the series");
    while (static_cast<long long>(t.size()) < count) {
        long long m = static_cast<long long>(t.size());
        Rational lead = skel.polys[0].eval(Rational(static_cast<long>(m)));
        if (lead == 0) throw LeadingCoefficientVanishes(m);
        Rational acc(0);
        for (long j = 1; j <= K; ++j)
            acc += skel.polys[j].eval(Rational(static_cast<long>(m))) * t[m - j];
        t.push_back(-acc / lead);
    }
    t.resize(count);
    return t;
}

} // namespace

OdeOperator dfinite_multiply(const OdeOperator& opf_in, const OdeOperator& opg_in,
                             const std::vector<Rational>& f_init,
                             const std::vector<Rational>& g_init) {
    OdeOperator opf = opf_in.is_homogeneous() ? opf_in : homogenize(opf_in);
    OdeOperator opg = opg_in.is_homogeneous() ? opg_in : homogenize(opg_in);
    if (opf.order() < 1 || opg.order() < 1)
        throw DegenerateOperator("dfinite_multiply needs operators of order >= 1");
    const long rf = opf.order();
    const long rg = opg.order();
    const long dim = rf * rg;
    RationalFunctionField field;
    // basis F_i G_j (i < rf, j < rg); reduce top derivatives through the ODEs
    auto reduce_row = [&](const OdeOperator& op, long r) {
        std::vector<RationalFunction> red(r);
        RationalFunction lead(op.coeffs[r], Polynomial::constant(1));
        for (long s = 0; s < r; ++s)
            red[s] = -RationalFunction(op.coeffs[s], Polynomial::constant(1)) / lead;
        return red;  // F^(r) = sum red[s] F^(s)
    };
    auto f_red = reduce_row(opf, rf);
    auto g_red = reduce_row(opg, rg);
    auto idx = [&](long i, long j) { return i * rg + j; };
    // h^(m) as vectors over the basis
    std::vector<RationalFunction> v(dim);
    v[idx(0, 0)] = RationalFunction::constant(1);
    DependenceFinder<RationalFunction, RationalFunctionField> finder(dim, field);
    std::vector<std::vector<RationalFunction>> rows;
    for (long m = 0;; ++m) {
        rows.push_back(v);
        auto lambda = finder.add(v);
        if (lambda) {
            const long M = m;
            // h^(M) = sum lambda_s h^(s): operator sum q_s D^s with q_M = cleared lcm
            Polynomial common = Polynomial::constant(1);
            for (const auto& l : *lambda) {
                Polynomial g = poly_gcd(common, l.den());
                common = common * l.den().divrem(g).first;
            }
            std::vector<Polynomial> coeffs(M + 1);
            coeffs[M] = common;
            for (long s = 0; s < M; ++s) {
                auto scaled = (*lambda)[s] * RationalFunction::from_poly(common);
                if (!scaled.is_polynomial()) throw std::logic_error("dfinite_multiply: clearing failed");
                coeffs[s] = -(scaled.num() * (Rational(1) / scaled.den().coeff(0)));
            }
            OdeOperator out{integer_normalize(std::move(coeffs)), Polynomial{}};
            if (out.coeffs.back().leading() < 0)
                for (auto& p : out.coeffs) p = -p;
            if (M > rf * rg) throw std::logic_error("dfinite_multiply: order bound exceeded");
            // verification: operator must annihilate the product series
            long long T = 2 * dim + 10 + out.coeff_degree() + out.order();
            auto fs = extend_series(opf, f_init, T + 1);
            auto gs = extend_series(opg, g_init, T + 1);
            std::vector<Rational> hs(T + 1, Rational(0));
            for (long long n = 0; n <= T; ++n)
                for (long long i = 0; i <= n; ++i) hs[n] += fs[i] * gs[n - i];
            auto res = ode_residual(out, hs, T - out.order());
            for (const auto& x : res)
                if (x != 0) throw std::logic_error("dfinite_multiply: series check failed");
            return out;
        }
        if (m > dim) throw std::logic_error("dfinite_multiply: no dependence found");
        // differentiate: d/dx sum c_ij F_i G_j
        std::vector<RationalFunction> next(dim);
        for (long i = 0; i < rf; ++i)
            for (long j = 0; j < rg; ++j) {
                const RationalFunction& c = v[idx(i, j)];
                if (c.is_zero()) continue;
                // c' term
                RationalFunction dc(c.num().derivative() * c.den() - c.num() * c.den().derivative(),
                                    c.den() * c.den());
                next[idx(i, j)] = next[idx(i, j)] + dc;
                // F_{i+1} G_j
                if (i + 1 < rf) {
                    next[idx(i + 1, j)] = next[idx(i + 1, j)] + c;
                } else {
                    for (long s = 0; s < rf; ++s)
                        next[idx(s, j)] = next[idx(s, j)] + c * f_red[s];
                }
                // F_i G_{j+1}
                if (j + 1 < rg) {
                    next[idx(i, j + 1)] = next[idx(i, j + 1)] + c;
                } else {
                    for (long s = 0; s < rg; ++s)
                        next[idx(i, s)] = next[idx(i, s)] + c * g_red[s];
                }
            }
        v = std::move(next);
    }
}

// --- X-recursive functional equation ---

namespace {

using AlgPoly = std::vector<AlgebraicScalar>;

AlgebraicScalar alg_zero(const Polynomial& mod) { return AlgebraicScalar::from_rational(mod, 0); }

std::string alg_poly_to_string(const AlgPoly& p) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i].is_zero()) continue;
        if (!first) os << " + ";
        bool rational_one = p[i].is_rational() && p[i].rational_value() == 1;
        if (!rational_one || i == 0) {
            if (p[i].is_rational()) os << to_string(p[i].rational_value());
            else os << "(" << p[i].to_string() << ")";
        }
        if (i > 0) {
            if (!rational_one) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace

std::string ScaledDiffRelation::to_string() const {
    std::ostringstream os;
    os << "f(x) = ";
    bool first = true;
    bool inhom_nonzero = false;
    for (const auto& c : inhomogeneous)
        if (!c.is_zero()) inhom_nonzero = true;
    if (inhom_nonzero) {
        os << alg_poly_to_string(inhomogeneous);
        first = false;
    }
    for (const auto& t : terms) {
        if (!first) os << " + ";
        os << "(" << alg_poly_to_string(t.coeff) << ")*f";
        for (int i = 0; i < t.deriv_order; ++i) os << "'";
        os << "(";
        if (t.scale.is_rational()) os << recseq::to_string(t.scale.rational_value());
        else os << "(" << t.scale.to_string() << ")";
        os << "x)";
        first = false;
    }
    if (first) os << "0";
    if (modulus.degree() > 1) os << "   where t^... : " << modulus.to_string("t") << " = 0";
    return os.str();
}

ScaledDiffRelation xrecursive_first_order_funceq(const XRecursiveSeq& a) {
    if (a.order() != 1) throw UnsupportedCoefficientShape("only first-order X-recursive sequences are supported");
    // leading coefficient must be a nonzero constant
    CFiniteSeq lead = cfinite_minimize(a.coeffs()[0]);
    if (cfinite_is_zero(lead) || lead.order() != 1 || lead.annihilator()[1] != -1)
        throw UnsupportedCoefficientShape("leading coefficient must be a nonzero constant");
    Rational gamma0 = lead.initials()[0];
    // a(n) = C_n a(n-1) with C = -C1/gamma0
    CFiniteSeq c = cfinite_minimize(cfinite_scale(a.coeffs()[1], Rational(-1) / gamma0));
    const long k = c.order();
    if (k == 0) throw UnsupportedCoefficientShape("coefficient sequence is identically zero");

    // generating function of C: num/den with den the annihilator polynomial
    Polynomial den(c.annihilator());
    auto ct = c.terms(std::max<long long>(k, 1));
    std::vector<Rational> numco(k, Rational(0));
    for (long n = 0; n < k; ++n) {
        Rational acc = ct[n];
        for (long i = 1; i <= n; ++i) acc += c.annihilator()[i] * ct[n - i];
        numco[n] = acc;
    }
    Polynomial num(std::move(numco));
    auto [w, nrem] = num.divrem(den);  // C(x) = w(x) + nrem(x)/den(x)

    ScaledDiffRelation rel;
    std::vector<std::pair<AlgebraicScalar, AlgebraicScalar>> spectral;  // (scale, gamma)
    std::vector<std::tuple<Rational, long, Rational>> poly_terms;       // (beta, j, e_j)
    Polynomial trivial_mod = Polynomial::variable();

    const long D = den.degree();
    if (D == 0) {
        rel.modulus = trivial_mod;
    } else {
        // shape (i): den = den(0) * (1 - beta x)^D
        Rational beta = -den.coeff(1) / (Rational(D) * den.coeff(0));
        Polynomial shape_i = Polynomial({Rational(1), -beta}).pow(D) * den.coeff(0);
        if (beta != 0 && shape_i == den) {
            rel.modulus = trivial_mod;
            // C~(n) = C_n - w_n = p(n) beta^n
            std::vector<Rational> samples;
            auto cterms = c.terms(D + k + 5);
            for (long n = 0; n < D; ++n)
                samples.push_back((cterms[n] - w.coeff(n)) / rational_pow(beta, n));
            Polynomial p = interpolate_at_integers(0, samples);
            for (long n = 0; n < D + k + 5; ++n)
                if (p.eval(Rational(n)) * rational_pow(beta, n) + w.coeff(n) != cterms[n])
                    throw std::logic_error("funceq: polynomial-times-geometric decomposition failed");
            // p(m+1) = sum_j e_j (m)_j  (falling-factorial basis)
            Polynomial g = poly_shift(p, 1);
            Polynomial nvar = Polynomial::variable();
            std::vector<Rational> e(g.degree() + 1, Rational(0));
            for (long j = g.degree(); j >= 0; --j) {
                e[j] = g.coeff(j);
                Polynomial fall = Polynomial::constant(e[j]);
                for (long i = 0; i < j; ++i) fall = fall * (nvar - Polynomial::constant(Rational(i)));
                g = g - fall;
            }
            if (!g.is_zero()) throw std::logic_error("funceq: falling-factorial expansion failed");
            for (long j = 0; j < static_cast<long>(e.size()); ++j)
                if (e[j] != 0) poly_terms.emplace_back(beta, j, e[j]);
        } else {
            // shape (ii): squarefree denominator, partial fractions
            if (!is_squarefree(den))
                throw UnsupportedCoefficientShape(
                    "coefficient sequence has a repeated irrational root");
            // char poly of the nonzero roots: reversal of den (monic since den(0)=1)
            std::vector<Rational> mt(D + 1);
            for (long j = 0; j <= D; ++j) mt[D - j] = den.coeff(j);
            Polynomial mtilde(std::move(mt));
            std::vector<Rational> rroots = rational_roots(mtilde);
            Polynomial m2 = mtilde;
            for (const auto& r : rroots) {
                auto [q2, rem2] = m2.divrem(Polynomial({-r, Rational(1)}));
                if (!rem2.is_zero()) throw std::logic_error("funceq: root division failed");
                m2 = q2;
            }
            Polynomial dend = den.derivative();
            if (m2.degree() == 0) {
                rel.modulus = trivial_mod;
                for (const auto& alpha : rroots) {
                    Rational inv = Rational(1) / alpha;
                    Rational g = -alpha * nrem.eval(inv) / dend.eval(inv);
                    spectral.emplace_back(AlgebraicScalar::from_rational(trivial_mod, alpha),
                                          AlgebraicScalar::from_rational(trivial_mod, g));
                }
            } else if (m2.degree() == 2) {
                rel.modulus = m2 * (Rational(1) / m2.leading());
                AlgebraicScalar t = AlgebraicScalar::generator(rel.modulus);
                AlgebraicScalar inv_t = t.inverse();
                AlgebraicScalar gq = -(t * inv_t.eval_poly(nrem) * (inv_t.eval_poly(dend)).inverse());
                // conjugate root: t -> s - t with s = -(coefficient of t)
                AlgebraicScalar conj_image =
                    AlgebraicScalar(rel.modulus,
                                    Polynomial({-rel.modulus.coeff(1), Rational(-1)}));
                spectral.emplace_back(t, gq);
                spectral.emplace_back(conj_image, gq.map_generator(conj_image));
                for (const auto& alpha : rroots) {
                    Rational inv = Rational(1) / alpha;
                    Rational g = -alpha * nrem.eval(inv) / dend.eval(inv);
                    spectral.emplace_back(AlgebraicScalar::from_rational(rel.modulus, alpha),
                                          AlgebraicScalar::from_rational(rel.modulus, g));
                }
            } else {
                throw UnsupportedCoefficientShape(
                    "irrational part of the characteristic polynomial has degree > 2");
            }
        }
    }
    const Polynomial& mod = rel.modulus;
    // terms
    for (auto& [beta, j, ej] : poly_terms) {
        ScaledDiffRelation::Term t;
        t.scale = AlgebraicScalar::from_rational(mod, beta);
        t.deriv_order = static_cast<int>(j);
        t.coeff.assign(j + 2, alg_zero(mod));
        t.coeff[j + 1] = AlgebraicScalar::from_rational(mod, ej * beta);
        rel.terms.push_back(std::move(t));
    }
    for (auto& [alpha, g] : spectral) {
        ScaledDiffRelation::Term t;
        t.scale = alpha;
        t.deriv_order = 0;
        t.coeff.assign(2, alg_zero(mod));
        t.coeff[1] = g * alpha;
        rel.terms.push_back(std::move(t));
    }
    // inhomogeneous: a(0) + sum_{n=1..deg w} w_n a(n-1) x^n
    auto aterms = a.terms(std::max<long long>(w.degree() + 1, 1));
    rel.inhomogeneous.assign(w.degree() + 2 > 1 ? w.degree() + 2 : 1, alg_zero(mod));
    rel.inhomogeneous[0] = AlgebraicScalar::from_rational(mod, aterms[0]);
    for (long n = 1; n <= w.degree() + 1; ++n)
        if (w.coeff(n) != 0)
            rel.inhomogeneous[n] = AlgebraicScalar::from_rational(mod, w.coeff(n) * aterms[n - 1]);
    while (rel.inhomogeneous.size() > 1 && rel.inhomogeneous.back().is_zero())
        rel.inhomogeneous.pop_back();

    long long T = std::max<long long>(25, 2 * k + 10);
    if (!verify_series_relation(rel, a, T))
        throw std::logic_error("xrecursive_first_order_funceq: series verification failed");
    return rel;
}

bool verify_series_relation(const ScaledDiffRelation& rel, const std::vector<Rational>& a_terms,
                            long long T) {
    const Polynomial& mod = rel.modulus;
    int max_d = 0;
    for (const auto& t : rel.terms) max_d = std::max(max_d, t.deriv_order);
    const long long TT = T + max_d;
    if (static_cast<long long>(a_terms.size()) < TT + 1)
        throw Error("verify_series_relation needs T + max_derivative + 1 sequence terms");
    std::vector<AlgebraicScalar> rhs(T + 1, alg_zero(mod));
    for (size_t i = 0; i < rel.inhomogeneous.size() && i <= static_cast<size_t>(T); ++i)
        rhs[i] = rhs[i] + rel.inhomogeneous[i];
    for (const auto& term : rel.terms) {
        // g = f(scale * x): g_n = a(n) scale^n, then composite derivatives
        std::vector<AlgebraicScalar> g(TT + 1, alg_zero(mod));
        AlgebraicScalar sp = AlgebraicScalar::from_rational(mod, 1);
        for (long long n = 0; n <= TT; ++n) {
            g[n] = sp * a_terms[n];
            sp = sp * term.scale;
        }
        for (int dpass = 0; dpass < term.deriv_order; ++dpass) {
            for (long long n = 0; n + 1 <= TT; ++n) g[n] = g[n + 1] * Rational(static_cast<long>(n + 1));
            g[TT] = alg_zero(mod);
        }
        for (long long n = 0; n <= T; ++n) {
            for (size_t u = 0; u < term.coeff.size() && static_cast<long long>(u) <= n; ++u)
                rhs[n] = rhs[n] + term.coeff[u] * g[n - u];
        }
    }
    for (long long n = 0; n <= T; ++n)
        if (!(rhs[n] - AlgebraicScalar::from_rational(mod, a_terms[n])).is_zero()) return false;
    return true;
}

bool verify_series_relation(const ScaledDiffRelation& rel, const XRecursiveSeq& a, long long T) {
    int max_d = 0;
    for (const auto& t : rel.terms) max_d = std::max(max_d, t.deriv_order);
    return verify_series_relation(rel, a.terms(T + max_d + 2), T);
}

} // namespace recseq
