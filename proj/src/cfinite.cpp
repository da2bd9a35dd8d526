#include "recseq/cfinite.hpp"

#include "recseq/errors.hpp"

#include <algorithm>
#include <sstream>

namespace recseq {

CFiniteSeq::CFiniteSeq(std::vector<Rational> annihilator, std::vector<Rational> initials)
    : annihilator_(std::move(annihilator)), initials_(std::move(initials)) {
    if (annihilator_.empty() || annihilator_[0] != 1)
        throw Error("annihilator must be monic with c0 = 1");
    if (initials_.size() + 1 != annihilator_.size())
        throw Error("initials must have length order = annihilator length - 1");
}

Polynomial CFiniteSeq::char_poly() const {
    const long k = order();
    std::vector<Rational> cp(k + 1);
    for (long i = 0; i <= k; ++i) cp[k - i] = annihilator_[i];
    return Polynomial(std::move(cp));
}

std::vector<Rational> CFiniteSeq::terms(long long count) const {
    std::vector<Rational> t;
    if (count <= 0) return t;
    t.reserve(count);
    const long k = order();
    for (long long n = 0; n < count; ++n) {
        if (n < k) {
            t.push_back(initials_[n]);
        } else {
            Rational v(0);
            for (long i = 1; i <= k; ++i) v -= annihilator_[i] * t[n - i];
            t.push_back(v);
        }
    }
    return t;
}

Rational CFiniteSeq::at(long long n) const {
    auto t = terms(n + 1);
    return t[n];
}

std::string CFiniteSeq::to_string() const {
    std::ostringstream os;
    os << "rec:";
    for (size_t i = 0; i < annihilator_.size(); ++i)
        os << (i ? "," : "") << recseq::to_string(annihilator_[i]);
    os << ";init:";
    for (size_t i = 0; i < initials_.size(); ++i)
        os << (i ? "," : "") << recseq::to_string(initials_[i]);
    return os.str();
}

CFiniteSeq cfinite_const(const Rational& c) {
    if (c == 0) return cfinite_zero();
    return CFiniteSeq({Rational(1), Rational(-1)}, {c});
}

CFiniteSeq cfinite_zero() { return {}; }
CFiniteSeq cfinite_one() { return cfinite_const(Rational(1)); }

CFiniteSeq cfinite_geometric(const Rational& ratio, const Rational& first) {
    if (first == 0 || ratio == 0) {
        if (first == 0) return cfinite_zero();
        // first, 0, 0, ...
        return CFiniteSeq({Rational(1), Rational(0)}, {first});
    }
    return CFiniteSeq({Rational(1), -ratio}, {first});
}

CFiniteSeq cfinite_fibonacci(const Rational& a0, const Rational& a1) {
    return CFiniteSeq({Rational(1), Rational(-1), Rational(-1)}, {a0, a1});
}

CFiniteSeq cfinite_from_charpoly(const Polynomial& cp, std::vector<Rational> initials) {
    const long k = cp.degree();
    if (k < 0 || cp.leading() != 1) throw Error("characteristic polynomial must be monic");
    if (static_cast<long>(initials.size()) != k) throw Error("need order-many initial terms");
    std::vector<Rational> ann(k + 1);
    for (long i = 0; i <= k; ++i) ann[i] = cp.coeff(k - i);
    return CFiniteSeq(std::move(ann), std::move(initials));
}

bool cfinite_is_zero(const CFiniteSeq& a) {
    for (const auto& v : a.initials())
        if (v != 0) return false;
    return true;
}

namespace {

// Least-order annihilator fitting every position of the window, or nullopt.
std::optional<CFiniteSeq> fit_order(const std::vector<Rational>& t, long k) {
    const long long len = static_cast<long long>(t.size());
    if (k == 0) {
        for (const auto& v : t)
            if (v != 0) return std::nullopt;
        return cfinite_zero();
    }
    if (len - k < 1) return std::nullopt;
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

CFiniteSeq cfinite_minimize(const CFiniteSeq& a) {
    const long k = a.order();
    if (k == 0) return a;
    auto t = a.terms(2 * k + 4);
    for (long kp = 0; kp <= k; ++kp)
        if (auto fit = fit_order(t, kp)) return *fit;
    return a;  // unreachable: the input's own order always fits
}

CFiniteSeq cfinite_ring_add(const CFiniteSeq& a, const CFiniteSeq& b) {
    if (cfinite_is_zero(a)) return cfinite_minimize(b);
    if (cfinite_is_zero(b)) return cfinite_minimize(a);
    Polynomial cp = a.char_poly() * b.char_poly();
    const long k = cp.degree();
    auto ta = a.terms(k), tb = b.terms(k);
    std::vector<Rational> init(k);
    for (long i = 0; i < k; ++i) init[i] = ta[i] + tb[i];
    return cfinite_minimize(cfinite_from_charpoly(cp, std::move(init)));
}

CFiniteSeq cfinite_ring_mul(const CFiniteSeq& a, const CFiniteSeq& b) {
    if (cfinite_is_zero(a) || cfinite_is_zero(b)) return cfinite_zero();
    Matrix<Rational> ka = companion_matrix(a.char_poly());
    Matrix<Rational> kb = companion_matrix(b.char_poly());
    Polynomial cp = charpoly(kronecker(ka, kb));
    const long k = cp.degree();
    auto ta = a.terms(k), tb = b.terms(k);
    std::vector<Rational> init(k);
    for (long i = 0; i < k; ++i) init[i] = ta[i] * tb[i];
    return cfinite_minimize(cfinite_from_charpoly(cp, std::move(init)));
}

CFiniteSeq cfinite_ring_neg(const CFiniteSeq& a) { return cfinite_scale(a, Rational(-1)); }

CFiniteSeq cfinite_ring_sub(const CFiniteSeq& a, const CFiniteSeq& b) {
    return cfinite_ring_add(a, cfinite_ring_neg(b));
}

CFiniteSeq cfinite_scale(const CFiniteSeq& a, const Rational& c) {
    if (c == 0 || cfinite_is_zero(a)) return cfinite_zero();
    std::vector<Rational> init = a.initials();
    for (auto& v : init) v *= c;
    return CFiniteSeq(a.annihilator(), std::move(init));
}

CFiniteSeq cfinite_ring_shift(const CFiniteSeq& a, long m) {
    const long k = a.order();
    if (k == 0) return a;
    if (m >= 0) {
        auto t = a.terms(m + k);
        std::vector<Rational> init(t.begin() + m, t.end());
        return cfinite_minimize(CFiniteSeq(a.annihilator(), std::move(init)));
    }
    const long back = -m;
    if (a.annihilator().back() != 0) {
        // extend backward: a(n-k) = -(a(n) + c_1 a(n-1) + ... + c_{k-1} a(n-k+1)) / c_k
        std::vector<Rational> window = a.initials();  // a(lowest .. lowest+k-1)
        for (long step = 0; step < back; ++step) {
            // impose the recurrence at n = lowest+k-1 to define a(lowest-1)
            Rational acc = window[k - 1];
            for (long i = 1; i < k; ++i) acc += a.annihilator()[i] * window[k - 1 - i];
            Rational prev = -acc / a.annihilator()[k];
            window.insert(window.begin(), prev);
            window.pop_back();
        }
        return cfinite_minimize(CFiniteSeq(a.annihilator(), std::move(window)));
    }
    // trailing coefficient zero: pad with zeros in front, raising the order
    std::vector<Rational> ann(a.annihilator());
    ann.resize(ann.size() + back, Rational(0));
    std::vector<Rational> init(back, Rational(0));
    for (const auto& v : a.initials()) init.push_back(v);
    return CFiniteSeq(std::move(ann), std::move(init));
}

CFiniteSeq cfinite_multisection_seq(const CFiniteSeq& a, long m, long r) {
    if (m < 1 || r < 0 || r >= m) throw Error("multisection needs m >= 1 and 0 <= r < m");
    const long k = a.order();
    if (k == 0) return a;
    if (m == 1 && r == 0) return cfinite_minimize(a);
    RationalField f;
    Matrix<Rational> mc = companion_matrix(a.char_poly());
    Matrix<Rational> power(k, k, Rational(0));
    for (long i = 0; i < k; ++i) power.at(i, i) = 1;
    for (long i = 0; i < m; ++i) power = matmul(power, mc, f);
    Polynomial mp = matrix_minpoly(power);
    const long d = mp.degree();
    std::vector<Rational> init(d);
    auto t = a.terms(static_cast<long long>(m) * (d > 0 ? d - 1 : 0) + r + 1);
    for (long i = 0; i < d; ++i) init[i] = t[static_cast<long long>(m) * i + r];
    return cfinite_minimize(cfinite_from_charpoly(mp, std::move(init)));
}

CFiniteSeq cfinite_partial_sum_seq(const CFiniteSeq& a) {
    Polynomial cp = a.char_poly() * Polynomial({Rational(-1), Rational(1)});  // (x - 1)
    const long k = cp.degree();
    auto t = a.terms(k);
    std::vector<Rational> init(k);
    Rational acc(0);
    for (long i = 0; i < k; ++i) {
        acc += t[i];
        init[i] = acc;
    }
    return cfinite_minimize(cfinite_from_charpoly(cp, std::move(init)));
}

std::string ZeroDivisorVerdict::describe() const {
    std::ostringstream os;
    switch (tag) {
        case Tag::Unit:
            os << "unit (no zero among the first " << scanned << " terms)";
            break;
        case Tag::EventuallyZero:
            os << "eventually zero (zero tail from index " << first_zero << ")";
            break;
        case Tag::ZeroDivisor:
            os << "zero divisor (zeros exactly at n == ";
            for (size_t i = 0; i < residues.size(); ++i) os << (i ? "," : "") << residues[i];
            os << " mod " << period << "; e.g. nonzero at n=" << first_nonzero << ")";
            break;
        case Tag::Unknown:
            os << "unknown (zeros in scan fit no full arithmetic progression)";
            break;
    }
    return os.str();
}

ZeroDivisorVerdict cfinite_is_zero_divisor(const CFiniteSeq& a, long scan, long max_period) {
    ZeroDivisorVerdict v;
    const long k = a.order();
    scan = std::max<long>(scan, 4 * k);
    if (max_period < 1) max_period = 1;
    v.scanned = scan;
    auto t = a.terms(scan);
    std::vector<long long> zeros;
    for (long long n = 0; n < scan; ++n) {
        if (t[n] == 0) {
            zeros.push_back(n);
            if (v.first_zero < 0) v.first_zero = n;
        } else if (v.first_nonzero < 0) {
            v.first_nonzero = n;
        }
    }
    if (zeros.empty()) {
        v.tag = ZeroDivisorVerdict::Tag::Unit;
        return v;
    }
    // an order-long run of zeros forces a zero tail
    long run = 0;
    for (long long n = 0; n < scan; ++n) {
        run = (t[n] == 0) ? run + 1 : 0;
        if (run >= std::max<long>(k, 1) || k == 0) {
            v.tag = ZeroDivisorVerdict::Tag::EventuallyZero;
            v.first_zero = n - run + 1;
            return v;
        }
    }
    // try to match the zero set with a union of full residue classes
    for (long p = 1; p <= max_period; ++p) {
        std::vector<bool> class_all_zero(p, true), class_any(p, false);
        for (long long n = 0; n < scan; ++n) {
            class_any[n % p] = true;
            if (t[n] != 0) class_all_zero[n % p] = false;
        }
        std::vector<long> residues;
        for (long r = 0; r < p; ++r)
            if (class_any[r] && class_all_zero[r]) residues.push_back(r);
        if (residues.empty()) continue;
        bool exact = true;
        for (long long z : zeros)
            if (!class_all_zero[z % p]) {
                exact = false;
                break;
            }
        if (!exact) continue;
        // persistence: each progression's multisection must be the zero sequence
        bool persistent = true;
        for (long r : residues)
            if (!cfinite_is_zero(cfinite_multisection_seq(a, p, r))) {
                persistent = false;
                break;
            }
        if (!persistent) continue;
        v.tag = ZeroDivisorVerdict::Tag::ZeroDivisor;
        v.period = p;
        v.residues = residues;
        return v;
    }
    v.tag = ZeroDivisorVerdict::Tag::Unknown;
    return v;
}

PivotClass CFiniteRing::classify(const CFiniteSeq& a) const {
    auto verdict = cfinite_is_zero_divisor(a, zd_scan, zd_max_period);
    switch (verdict.tag) {
        case ZeroDivisorVerdict::Tag::Unit: return PivotClass::Unit;
        case ZeroDivisorVerdict::Tag::ZeroDivisor: return PivotClass::ZeroDivisor;
        case ZeroDivisorVerdict::Tag::EventuallyZero: return PivotClass::EventuallyZero;
        case ZeroDivisorVerdict::Tag::Unknown: return PivotClass::Unknown;
    }
    return PivotClass::Unknown;
}

} // namespace recseq
