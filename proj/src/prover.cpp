#include "recseq/prover.hpp"

#include "recseq/errors.hpp"

#include <algorithm>

#include <sstream>

namespace recseq {

struct CFiniteExpr::Node {
    enum class Kind { Atom, Const, Add, Neg, Mul, Scale, Shift, Multisection, PartialSum };
    Kind kind;
    CFiniteSeq seq;        // Atom
    Rational value;        // Const / Scale
    long m = 0, r = 0;     // Shift / Multisection
    std::string name;
    std::shared_ptr<const Node> left, right;
};

static std::shared_ptr<const CFiniteExpr::Node> make_node(CFiniteExpr::Node n) {
    return std::make_shared<const CFiniteExpr::Node>(std::move(n));
}

CFiniteExpr CFiniteExpr::atom(CFiniteSeq seq, std::string name) {
    CFiniteExpr e;
    Node n{Node::Kind::Atom, std::move(seq), Rational(0), 0, 0, std::move(name), nullptr, nullptr};
    e.node_ = make_node(std::move(n));
    return e;
}

CFiniteExpr CFiniteExpr::constant(const Rational& c) {
    CFiniteExpr e;
    Node n{Node::Kind::Const, {}, c, 0, 0, {}, nullptr, nullptr};
    e.node_ = make_node(std::move(n));
    return e;
}

CFiniteExpr CFiniteExpr::add(CFiniteExpr l, CFiniteExpr r) {
    CFiniteExpr e;
    Node n{Node::Kind::Add, {}, Rational(0), 0, 0, {}, l.node_, r.node_};
    e.node_ = make_node(std::move(n));
    return e;
}

CFiniteExpr CFiniteExpr::sub(CFiniteExpr l, CFiniteExpr r) { return add(std::move(l), negate(std::move(r))); }

CFiniteExpr CFiniteExpr::negate(CFiniteExpr x) {
    CFiniteExpr e;
    Node n{Node::Kind::Neg, {}, Rational(0), 0, 0, {}, x.node_, nullptr};
    e.node_ = make_node(std::move(n));
    return e;
}

CFiniteExpr CFiniteExpr::multiply(CFiniteExpr l, CFiniteExpr r) {
    CFiniteExpr e;
    Node n{Node::Kind::Mul, {}, Rational(0), 0, 0, {}, l.node_, r.node_};
    e.node_ = make_node(std::move(n));
    return e;
}

CFiniteExpr CFiniteExpr::scale(const Rational& c, CFiniteExpr x) {
    CFiniteExpr e;
    Node n{Node::Kind::Scale, {}, c, 0, 0, {}, x.node_, nullptr};
    e.node_ = make_node(std::move(n));
    return e;
}

CFiniteExpr CFiniteExpr::shift(CFiniteExpr x, long m) {
    if (m < 0) throw Error("expression shift must be non-negative");
    CFiniteExpr e;
    Node n{Node::Kind::Shift, {}, Rational(0), m, 0, {}, x.node_, nullptr};
    e.node_ = make_node(std::move(n));
    return e;
}

CFiniteExpr CFiniteExpr::multisection(CFiniteExpr x, long m, long r) {
    if (m < 1 || r < 0 || r >= m) throw Error("multisection needs m >= 1 and 0 <= r < m");
    CFiniteExpr e;
    Node n{Node::Kind::Multisection, {}, Rational(0), m, r, {}, x.node_, nullptr};
    e.node_ = make_node(std::move(n));
    return e;
}

CFiniteExpr CFiniteExpr::partial_sum(CFiniteExpr x) {
    CFiniteExpr e;
    Node n{Node::Kind::PartialSum, {}, Rational(0), 0, 0, {}, x.node_, nullptr};
    e.node_ = make_node(std::move(n));
    return e;
}

namespace {

long bound_of(const CFiniteExpr::Node& n) {
    using K = CFiniteExpr::Node::Kind;
    switch (n.kind) {
        case K::Atom: return n.seq.order();
        case K::Const: return n.value == 0 ? 0 : 1;
        case K::Add: return bound_of(*n.left) + bound_of(*n.right);
        case K::Mul: return bound_of(*n.left) * bound_of(*n.right);
        case K::Neg:
        case K::Scale:
        case K::Shift:
        case K::Multisection: return bound_of(*n.left);
        case K::PartialSum: return bound_of(*n.left) + 1;
    }
    return 0;
}

Rational eval_node(const CFiniteExpr::Node& n, long long idx) {
    using K = CFiniteExpr::Node::Kind;
    switch (n.kind) {
        case K::Atom: return n.seq.at(idx);
        case K::Const: return n.value;
        case K::Add: return eval_node(*n.left, idx) + eval_node(*n.right, idx);
        case K::Mul: return eval_node(*n.left, idx) * eval_node(*n.right, idx);
        case K::Neg: return -eval_node(*n.left, idx);
        case K::Scale: return n.value * eval_node(*n.left, idx);
        case K::Shift: return eval_node(*n.left, idx + n.m);
        case K::Multisection: return eval_node(*n.left, n.m * idx + n.r);
        case K::PartialSum: {
            Rational s(0);
            for (long long i = 0; i <= idx; ++i) s += eval_node(*n.left, i);
            return s;
        }
    }
    return Rational(0);
}

std::string print_node(const CFiniteExpr::Node& n) {
    using K = CFiniteExpr::Node::Kind;
    switch (n.kind) {
        case K::Atom: return n.name + "(n)";
        case K::Const: return to_string(n.value);
        case K::Add: return "(" + print_node(*n.left) + " + " + print_node(*n.right) + ")";
        case K::Mul: return print_node(*n.left) + "*" + print_node(*n.right);
        case K::Neg: return "-" + print_node(*n.left);
        case K::Scale: return to_string(n.value) + "*" + print_node(*n.left);
        case K::Shift: return "shift_" + std::to_string(n.m) + "[" + print_node(*n.left) + "]";
        case K::Multisection:
            return "msec_" + std::to_string(n.m) + "," + std::to_string(n.r) + "[" +
                   print_node(*n.left) + "]";
        case K::PartialSum: return "psum[" + print_node(*n.left) + "]";
    }
    return "?";
}

} // namespace

long CFiniteExpr::order_bound() const { return bound_of(*node_); }

Rational CFiniteExpr::eval(long long n) const { return eval_node(*node_, n); }

std::string CFiniteExpr::to_string() const { return print_node(*node_); }

std::string ZeroProof::transcript() const {
    std::ostringstream os;
    if (proven) {
        os << "Proven (bound " << bound << ", checked n=0.." << bound << ")\n";
        for (size_t i = 0; i < checked_values.size(); ++i)
            os << "  n=" << i << ": " << to_string(checked_values[i]) << "\n";
    } else {
        os << "Counterexample at n=" << counterexample_index << ": value "
           << to_string(counterexample_value) << " (bound " << bound << ")\n";
    }
    return os.str();
}

ZeroProof prove_zero(const CFiniteExpr& e) {
    ZeroProof proof;
    proof.bound = e.order_bound();
    for (long long n = 0; n <= proof.bound; ++n) {
        Rational v = e.eval(n);
        proof.checked_values.push_back(v);
        if (v != 0) {
            proof.proven = false;
            proof.counterexample_index = n;
            proof.counterexample_value = v;
            return proof;
        }
    }
    proof.proven = true;
    return proof;
}

ZeroProof prove_identity(const CFiniteExpr& lhs, const CFiniteExpr& rhs) {
    return prove_zero(CFiniteExpr::sub(lhs, rhs));
}

} // namespace recseq
