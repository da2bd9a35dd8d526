// recseq: guess, evaluate, combine and prove facts about sequences in the
// polynomial / C-finite / holonomic / X-recursive ansatz classes.

#include "recseq/bfile.hpp"
#include "recseq/closure.hpp"
#include "recseq/errors.hpp"
#include "recseq/genfunc.hpp"
#include "recseq/guess.hpp"
#include "recseq/model_io.hpp"
#include "recseq/prover.hpp"
#include "recseq/special.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <optional>

using namespace recseq;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoResult = 1;  // NoFit / Counterexample / ClosureFailure
constexpr int kExitError = 2;     // usage or input errors

struct InputOpts {
    std::string terms;
    std::string bfile;
    TermVector load() const {
        if (!terms.empty() && !bfile.empty()) throw ParseError("give either --terms or --bfile, not both");
        if (!terms.empty()) return parse_term_list(terms);
        if (!bfile.empty()) return parse_bfile_path(bfile);
        throw ParseError("missing input: --terms or --bfile");
    }
};

json terms_json(const std::vector<Rational>& t, long long start = 0) {
    json j;
    j["start_index"] = start;
    json arr = json::array();
    for (const auto& v : t) arr.push_back(to_string(v));
    j["terms"] = arr;
    return j;
}

int run_guess(const InputOpts& in, const std::string& ansatz, GuessConfig cfg,
              const std::vector<std::string>& basis, bool as_json) {
    TermVector data = in.load();
    for (const auto& b : basis) cfg.basis.push_back(parse_basis_atom(b));
    if (data.start_index != 0 && !as_json)
        std::cout << "# note: data starts at index " << data.start_index
                  << "; the model describes the sequence re-based at 0\n";

    auto finish = [&](const SequenceModel& model, const std::string& cls) {
        long long verified = data.size();
        if (as_json) {
            json j = json::parse(model_to_json(model, verified));
            std::cout << j.dump() << "\n";
        } else {
            std::cout << cls << ": " << render_model(model) << "\n";
        }
        return kExitOk;
    };

    auto try_class = [&](const std::string& cls) -> std::optional<int> {
        if (cls == "polynomial") {
            if (auto p = guess_polynomial(data, cfg.margin)) return finish(*p, "polynomial");
        } else if (cls == "cfinite") {
            if (auto c = guess_cfinite(data, cfg)) return finish(*c, "C-finite");
        } else if (cls == "holonomic") {
            if (auto h = guess_holonomic(data, cfg)) return finish(*h, "holonomic");
        } else if (cls == "xrecursive") {
            if (auto x = guess_xrecursive_first_order(data, cfg)) return finish(*x, "X-recursive");
        } else if (cls == "xrecursive-dict") {
            if (cfg.basis.empty()) throw ParseError("xrecursive-dict needs --basis atoms");
            if (auto x = guess_xrecursive_dict(data, cfg)) return finish(*x, "X-recursive (dict)");
        }
        return std::nullopt;
    };

    const std::vector<std::string> known{"polynomial", "cfinite", "holonomic", "xrecursive",
                                         "xrecursive-dict"};
    if (ansatz == "auto") {
        for (const auto& cls : known) {
            if (cls == "xrecursive-dict" && cfg.basis.empty()) continue;
            try {
                if (auto rc = try_class(cls)) return *rc;
            } catch (const InsufficientData&) {
                // not enough terms for this class; fall through to the next
            } catch (const ZeroTermInData&) {
                // ratios undefined; the ratio strategy is not a candidate
            }
        }
    } else {
        if (std::find(known.begin(), known.end(), ansatz) == known.end())
            throw ParseError("unknown ansatz '" + ansatz + "'");
        // errors (too few terms, zero terms for ratios) surface as exit 2
        if (auto rc = try_class(ansatz)) return *rc;
    }
    std::cout << "no fit within the configured bounds\n";
    return kExitNoResult;
}

int run_eval(const std::string& model_text, const std::string& preset, long long count, bool as_json) {
    std::vector<Rational> t;
    if (!preset.empty()) {
        if (preset == "somos2014") t = somos2014_terms(count).terms;
        else if (preset == "somos4") t = somos4_terms(count).terms;
        else if (preset == "bell") t = bell_like_terms(count).terms;
        else if (preset == "bernoulli") t = bernoulli_coeff_terms(count).terms;
        else if (preset == "tangent") t = tangent_coeff_terms(count).terms;
        else throw ParseError("unknown preset '" + preset + "'");
    } else if (!model_text.empty()) {
        t = model_terms(parse_model(model_text), count);
    } else {
        throw ParseError("eval needs --model or --preset");
    }
    if (as_json) {
        std::cout << terms_json(t).dump() << "\n";
    } else {
        for (size_t i = 0; i < t.size(); ++i) std::cout << i << " " << to_string(t[i]) << "\n";
    }
    return kExitOk;
}

int run_closure(const std::string& op, const std::string& a_text, const std::string& b_text,
                long m, long r, bool as_json) {
    SequenceModel a = parse_model(a_text);
    // polynomial sequences are C-finite; lift them for closure arithmetic
    if (auto* p = std::get_if<PolySeq>(&a)) a = polynomial_as_cfinite(*p);
    std::optional<SequenceModel> b;
    if (!b_text.empty()) {
        b = parse_model(b_text);
        if (auto* p = std::get_if<PolySeq>(&*b)) *b = polynomial_as_cfinite(*p);
    }

    auto report = [&](const SequenceModel& result, long bound, long long verified) {
        if (as_json) {
            json j = json::parse(model_to_json(result, verified));
            j["order_bound"] = bound;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << render_model(result) << "\n";
            std::cout << "order bound " << bound << ", verified on " << verified << " terms\n";
        }
        return kExitOk;
    };

    if (auto* ca = std::get_if<CFiniteSeq>(&a)) {
        if (op == "multisection") {
            auto res = cfinite_multisection(*ca, m, r);
            return report(res.result, res.claimed_order_bound, res.verified_terms);
        }
        if (op == "partial-sum") {
            auto res = cfinite_partial_sum(*ca);
            return report(res.result, res.claimed_order_bound, res.verified_terms);
        }
        if (!b) throw ParseError("closure op '" + op + "' needs --b");
        auto* cb = std::get_if<CFiniteSeq>(&*b);
        if (!cb) throw ParseError("both operands must be C-finite for this op");
        if (op == "add") {
            auto res = cfinite_add(*ca, *cb);
            return report(res.result, res.claimed_order_bound, res.verified_terms);
        }
        if (op == "mul" || op == "hadamard") {
            auto res = cfinite_mul(*ca, *cb);
            return report(res.result, res.claimed_order_bound, res.verified_terms);
        }
        throw ParseError("unsupported C-finite closure op '" + op + "'");
    }
    if (auto* ha = std::get_if<HolonomicSeq>(&a)) {
        if (op == "partial-sum") {
            auto res = holonomic_partial_sum(*ha);
            return report(res.result, res.claimed_order_bound, res.verified_terms);
        }
        if (!b) throw ParseError("closure op '" + op + "' needs --b");
        auto* hb = std::get_if<HolonomicSeq>(&*b);
        if (!hb) throw ParseError("both operands must be holonomic for this op");
        if (op == "add") {
            auto res = holonomic_add(*ha, *hb);
            return report(res.result, res.claimed_order_bound, res.verified_terms);
        }
        if (op == "mul" || op == "hadamard") {
            auto res = holonomic_hadamard(*ha, *hb);
            return report(res.result, res.claimed_order_bound, res.verified_terms);
        }
        if (op == "cauchy") {
            auto res = holonomic_cauchy(*ha, *hb);
            return report(res.result, res.claimed_order_bound, res.verified_terms);
        }
        throw ParseError("unsupported holonomic closure op '" + op + "'");
    }
    if (auto* xa = std::get_if<XRecursiveSeq>(&a)) {
        XClosureResult res = [&]() -> XClosureResult {
            if (op == "partial-sum") return xrecursive_partial_sum(*xa);
            if (!b) throw ParseError("closure op '" + op + "' needs --b");
            auto* xb = std::get_if<XRecursiveSeq>(&*b);
            if (!xb) throw ParseError("both operands must be X-recursive for this op");
            if (op == "add") return xrecursive_add(*xa, *xb);
            if (op == "mul" || op == "hadamard") return xrecursive_hadamard(*xa, *xb);
            throw ParseError("unsupported X-recursive closure op '" + op + "'");
        }();
        if (auto* ok = std::get_if<ClosureReport<XRecursiveSeq>>(&res))
            return report(ok->result, ok->claimed_order_bound, ok->verified_terms);
        const auto& fail = std::get<XClosureFailure>(res);
        if (as_json) {
            json j;
            j["failure"] = "ZeroDivisorPivot";
            j["row"] = fail.row;
            j["col"] = fail.col;
            j["pivot"] = fail.pivot.to_string();
            j["reason"] = fail.reason;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "closure failed: " << fail.reason << "\n";
            std::cout << "pivot at table position (" << fail.row << "," << fail.col
                      << "): " << fail.pivot.to_string() << "\n";
        }
        return kExitNoResult;
    }
    throw ParseError("unsupported model class for closure");
}

int run_gf(const std::string& model_text, const InputOpts& in, const std::string& ansatz,
           long long trunc, bool as_json) {
    SequenceModel model = [&]() -> SequenceModel {
        if (!model_text.empty()) return parse_model(model_text);
        TermVector data = in.load();
        GuessConfig cfg;
        if (ansatz == "polynomial") {
            if (auto p = guess_polynomial(data)) return *p;
            throw ParseError("no polynomial fit for the given terms");
        }
        if (ansatz == "cfinite" || ansatz == "auto") {
            if (auto c = guess_cfinite(data, cfg)) return *c;
            throw ParseError("no C-finite fit for the given terms");
        }
        throw ParseError("gf from terms supports --ansatz cfinite or polynomial");
    }();

    if (auto* p = std::get_if<PolySeq>(&model)) {
        RationalFunction gf = polyseq_gf(*p);
        if (as_json) {
            json j;
            j["kind"] = "rational";
            j["num"] = json::parse(model_to_json(SequenceModel{PolySeq{gf.num()}})).at("poly");
            j["den"] = json::parse(model_to_json(SequenceModel{PolySeq{gf.den()}})).at("poly");
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "f(x) = " << gf.to_string("x") << "\n";
        }
        return kExitOk;
    }
    if (auto* c = std::get_if<CFiniteSeq>(&model)) {
        RationalFunction gf = cfinite_gf(*c);
        if (as_json) {
            json j;
            j["kind"] = "rational";
            j["num"] = json::parse(model_to_json(SequenceModel{PolySeq{gf.num()}})).at("poly");
            j["den"] = json::parse(model_to_json(SequenceModel{PolySeq{gf.den()}})).at("poly");
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "f(x) = " << gf.to_string("x") << "\n";
        }
        return kExitOk;
    }
    if (auto* h = std::get_if<HolonomicSeq>(&model)) {
        OdeOperator op = holonomic_rec_to_ode(*h);
        if (as_json) {
            json j;
            j["kind"] = "ode";
            json coeffs = json::array();
            for (const auto& q : op.coeffs)
                coeffs.push_back(json::parse(model_to_json(SequenceModel{PolySeq{q}})).at("poly"));
            j["coeffs"] = coeffs;
            j["rhs"] = json::parse(model_to_json(SequenceModel{PolySeq{op.rhs}})).at("poly");
            std::cout << j.dump() << "\n";
        } else {
            std::cout << op.to_string() << "\n";
        }
        return kExitOk;
    }
    if (auto* x = std::get_if<XRecursiveSeq>(&model)) {
        ScaledDiffRelation rel = xrecursive_first_order_funceq(*x);
        bool ok = verify_series_relation(rel, *x, std::max<long long>(trunc, 25));
        if (as_json) {
            json j;
            j["kind"] = "scaled-differential";
            j["relation"] = rel.to_string();
            j["verified_to"] = std::max<long long>(trunc, 25);
            j["verified"] = ok;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << rel.to_string() << "\n";
            std::cout << "series-verified to order " << std::max<long long>(trunc, 25)
                      << (ok ? ": ok" : ": FAILED") << "\n";
        }
        return ok ? kExitOk : kExitNoResult;
    }
    throw ParseError("unsupported model class for gf");
}

int run_prove(const std::string& ident, const std::vector<std::string>& atom_defs, bool as_json) {
    std::map<std::string, CFiniteSeq> atoms;
    for (const auto& def : atom_defs) {
        auto eq = def.find('=');
        if (eq == std::string::npos) throw ParseError("atom definition needs NAME=MODEL");
        atoms.emplace(def.substr(0, eq), parse_cfinite_compact(def.substr(eq + 1)));
    }
    IdentityExpr expr = parse_identity(ident, atoms);
    ZeroProof proof = expr.has_rhs ? prove_identity(expr.lhs, expr.rhs) : prove_zero(expr.lhs);
    if (as_json) {
        json j;
        j["proven"] = proof.proven;
        j["bound"] = proof.bound;
        if (!proof.proven) {
            j["counterexample_index"] = proof.counterexample_index;
            j["counterexample_value"] = to_string(proof.counterexample_value);
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << proof.transcript();
    }
    return proof.proven ? kExitOk : kExitNoResult;
}

int run_zdtest(const std::string& model_text, long scan, long max_period, bool as_json) {
    CFiniteSeq c = parse_cfinite_compact(model_text);
    auto verdict = cfinite_is_zero_divisor(c, scan, max_period);
    if (as_json) {
        json j;
        switch (verdict.tag) {
            case ZeroDivisorVerdict::Tag::Unit: j["verdict"] = "Unit"; break;
            case ZeroDivisorVerdict::Tag::ZeroDivisor: j["verdict"] = "ZeroDivisor"; break;
            case ZeroDivisorVerdict::Tag::EventuallyZero: j["verdict"] = "EventuallyZero"; break;
            case ZeroDivisorVerdict::Tag::Unknown: j["verdict"] = "Unknown"; break;
        }
        j["period"] = verdict.period;
        j["residues"] = verdict.residues;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << verdict.describe() << "\n";
    }
    return kExitOk;
}

int run_diag(long order, long coeff_order, long long N, bool as_json) {
    GuessDiagnostic d = guess_diagnostic(order, coeff_order, N);
    if (as_json) {
        json j;
        j["equations"] = d.equations;
        j["variables"] = d.variables;
        j["N"] = d.N;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "N=" << d.N << ": " << d.equations << " equations, " << d.variables
                  << " variables" << (d.equations > d.variables ? " (overdetermined)" : "") << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact recurrence toolkit: polynomial, C-finite, holonomic and X-recursive sequences"};
    app.require_subcommand(1);
    app.fallthrough();  // allow --json after the subcommand name as well
    bool as_json = false;
    app.add_flag("--json", as_json, "line-oriented JSON output");

    // guess
    auto* guess = app.add_subcommand("guess", "fit the smallest recurrence in an ansatz class");
    InputOpts gin;
    std::string ansatz = "auto";
    GuessConfig cfg;
    std::vector<std::string> basis;
    guess->add_option("--terms", gin.terms, "inline comma-separated terms");
    guess->add_option("--bfile", gin.bfile, "OEIS-style b-file");
    guess->add_option("--ansatz", ansatz,
                      "auto|polynomial|cfinite|holonomic|xrecursive|xrecursive-dict");
    guess->add_option("--max-order", cfg.max_order, "maximum recurrence order");
    guess->add_option("--max-degree", cfg.max_degree, "maximum coefficient degree (holonomic)");
    guess->add_option("--margin", cfg.margin, "surplus confirming equations");
    guess->add_option("--basis", basis, "coefficient atoms for the dictionary strategy")
        ->take_all();

    // eval
    auto* eval = app.add_subcommand("eval", "generate terms of a model or preset");
    std::string eval_model, preset;
    long long count = 10;
    eval->add_option("--model", eval_model, "model (JSON, rec:...;init:..., polys:..., or a polynomial in n)");
    eval->add_option("--preset", preset, "somos2014|somos4|bell|bernoulli|tangent");
    eval->add_option("--count", count, "number of terms");

    // closure
    auto* closure = app.add_subcommand("closure", "constructive closure properties");
    std::string cop, ca, cb;
    long cm = 2, cr = 0;
    closure->add_option("--op", cop, "add|mul|hadamard|partial-sum|multisection|cauchy")->required();
    closure->add_option("--a", ca, "first operand model")->required();
    closure->add_option("--b", cb, "second operand model");
    closure->add_option("--m", cm, "multisection modulus");
    closure->add_option("--r", cr, "multisection offset");

    // gf
    auto* gf = app.add_subcommand("gf", "generating-function translations");
    std::string gf_model;
    InputOpts gfin;
    std::string gf_ansatz = "auto";
    long long trunc = 25;
    gf->add_option("--model", gf_model, "model to translate");
    gf->add_option("--terms", gfin.terms, "inline terms (guessed first)");
    gf->add_option("--bfile", gfin.bfile, "b-file input (guessed first)");
    gf->add_option("--ansatz", gf_ansatz, "cfinite|polynomial when guessing from terms");
    gf->add_option("--trunc", trunc, "series verification order");

    // prove
    auto* prove = app.add_subcommand("prove", "closure-bound identity prover for C-finite expressions");
    std::string ident;
    std::vector<std::string> atom_defs;
    prove->add_option("identity", ident, "e.g. \"F(2n) = 2*F(n)*F(n+1) - F(n)^2\"")->required();
    prove->add_option("--atom", atom_defs, "extra atom NAME=rec:...;init:...")->take_all();

    // zdtest
    auto* zdtest = app.add_subcommand("zdtest", "heuristic zero-divisor classification");
    std::string zd_model;
    long scan = 200, max_period = 30;
    zdtest->add_option("--cfinite", zd_model, "C-finite model rec:...;init:...")->required();
    zdtest->add_option("--scan", scan, "terms to scan");
    zdtest->add_option("--max-period", max_period, "largest progression modulus to try");

    // diag
    auto* diag = app.add_subcommand("diag", "equation/variable counts for the nonlinear ansatz");
    long d_order = 2, d_coeff = 2;
    long long d_N = 12;
    diag->add_option("--order", d_order, "recurrence order k");
    diag->add_option("--coeff-order", d_coeff, "order of the C-finite coefficients");
    diag->add_option("--N", d_N, "number of data terms");

    CLI11_PARSE(app, argc, argv);

    try {
        if (guess->parsed()) return run_guess(gin, ansatz, cfg, basis, as_json);
        if (eval->parsed()) return run_eval(eval_model, preset, count, as_json);
        if (closure->parsed()) return run_closure(cop, ca, cb, cm, cr, as_json);
        if (gf->parsed()) return run_gf(gf_model, gfin, gf_ansatz, trunc, as_json);
        if (prove->parsed()) return run_prove(ident, atom_defs, as_json);
        if (zdtest->parsed()) return run_zdtest(zd_model, scan, max_period, as_json);
        if (diag->parsed()) return run_diag(d_order, d_coeff, d_N, as_json);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
