#ifndef RECSEQ_MODEL_IO_HPP
#define RECSEQ_MODEL_IO_HPP

#include "recseq/guess.hpp"
#include "recseq/prover.hpp"
#include "recseq/sequences.hpp"

#include <map>
#include <string>
#include <variant>

namespace recseq {

using SequenceModel = std::variant<PolySeq, CFiniteSeq, HolonomicSeq, XRecursiveSeq>;

/// One-line JSON for a model; parse_model_json inverts it exactly.
/// Rationals are emitted as strings so arbitrary precision survives.
std::string model_to_json(const SequenceModel& model, long long verified_terms = 0);
SequenceModel parse_model_json(const std::string& json_text);

/// Compact C-finite form "rec:1,-3,2;init:2,3".
CFiniteSeq parse_cfinite_compact(const std::string& text);

/// Compact holonomic form "polys:n|-(2n-1)|n-1;init:0,1;offset:2".
HolonomicSeq parse_holonomic_compact(const std::string& text);

/// Model from any accepted source: JSON object, compact C-finite ("rec:..."),
/// compact holonomic ("polys:..."), or a polynomial in n ("n^2-2n").
SequenceModel parse_model(const std::string& text);

/// Basis atom: polynomial in n, "q^n" geometric, "F(n)", "F(n+k)", "F(n-k)",
/// or a compact C-finite form. The name is kept for reporting.
BasisAtom parse_basis_atom(const std::string& text);

/// Polynomial sequences are C-finite with annihilator (N-1)^{deg+1}.
CFiniteSeq polynomial_as_cfinite(const PolySeq& p);

/// Human-readable recurrence, e.g. "a(n) = 3*a(n-1) - 2*a(n-2)".
std::string render_model(const SequenceModel& model);

/// Generate terms from any model class.
std::vector<Rational> model_terms(const SequenceModel& model, long long count);

/// Identity mini-language for the prover. Atoms: F (Fibonacci, F(0)=0) plus
/// user-declared C-finite atoms. Forms: F(n), F(n+2), F(2n), F(2n+1),
/// products, integer powers, rational constants, psum(expr) for partial
/// sums. An '=' splits the identity into lhs and rhs.
struct IdentityExpr {
    CFiniteExpr lhs, rhs;
    bool has_rhs = false;
};
IdentityExpr parse_identity(const std::string& text,
                            const std::map<std::string, CFiniteSeq>& atoms = {});

} // namespace recseq

#endif
