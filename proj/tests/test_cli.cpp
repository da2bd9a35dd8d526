#include "recseq/bfile.hpp"
#include "recseq/errors.hpp"
#include "recseq/model_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace recseq;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }

#ifdef RECSEQ_CLI_PATH
struct CliRun {
    int exit_code;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    std::string cmd = std::string(RECSEQ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[512];
    while (fgets(buf, sizeof buf, pipe)) out += buf;
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}
#endif

} // namespace

TEST_CASE("b-file parsing: the Somos prefix") {
    std::istringstream in("0 1\n1 1\n2 2\n3 6\n4 30\n");
    TermVector tv = parse_bfile(in);
    CHECK(tv.start_index == 0);
    CHECK(tv.terms == std::vector<Rational>{Q(1), Q(1), Q(2), Q(6), Q(30)});
}

TEST_CASE("b-file parsing: comments and blank lines are skipped") {
    std::istringstream in("# A003266-like prefix\n\n1 1\n2 1\n3 2\n");
    TermVector tv = parse_bfile(in);
    CHECK(tv.start_index == 1);
    CHECK(tv.terms.size() == 3);
}

TEST_CASE("b-file parsing: gap detection names the line") {
    std::istringstream in("0 1\n2 5\n");
    try {
        parse_bfile(in);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("non-consecutive") != std::string::npos);
    }
}

TEST_CASE("b-file parsing: malformed lines name the line") {
    std::istringstream in("0 1\nx y\n");
    try {
        parse_bfile(in);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("b-file parsing: rational values with '/'") {
    std::istringstream in("0 0\n1 1\n2 3/2\n3 11/6\n");
    TermVector tv = parse_bfile(in);
    CHECK(tv.terms[2] == Q(3, 2));
    CHECK(tv.terms[3] == Q(11, 6));
}

TEST_CASE("model JSON round-trips to an identical model") {
    std::vector<SequenceModel> models;
    models.emplace_back(PolySeq{parse_polynomial("n^2-2n")});
    models.emplace_back(parse_cfinite_compact("rec:1,-3,2;init:2,3"));
    models.emplace_back(HolonomicSeq(
        {parse_polynomial("n"), parse_polynomial("-(2n-1)"), parse_polynomial("n-1")},
        {Q(0), Q(1)}, 2));
    models.emplace_back(XRecursiveSeq(
        {cfinite_one(), cfinite_scale(cfinite_fibonacci(), Q(-1))}, {Q(1)}));
    for (const auto& m : models) {
        SequenceModel back = parse_model_json(model_to_json(m, 11));
        CHECK(model_terms(back, 9) == model_terms(m, 9));
        CHECK(model_to_json(back) == model_to_json(m));
    }
}

TEST_CASE("rendering a model and regenerating terms reproduces the prefix") {
    SequenceModel m = parse_cfinite_compact("rec:1,-3,2;init:2,3");
    std::string rendered = render_model(m);
    CHECK(rendered.find("3*a(n-1)") != std::string::npos);
    CHECK(rendered.find("2*a(n-2)") != std::string::npos);
    // the compact form round-trips through to_string
    const auto& c = std::get<CFiniteSeq>(m);
    CFiniteSeq back = parse_cfinite_compact(c.to_string());
    CHECK(back == c);
}

TEST_CASE("basis atom parsing") {
    BasisAtom one = parse_basis_atom("1");
    CHECK(one.seq == cfinite_one());
    BasisAtom pw = parse_basis_atom("2^n");
    CHECK(pw.seq == cfinite_geometric(Q(2)));
    BasisAtom f = parse_basis_atom("F(n)");
    CHECK(f.seq == cfinite_fibonacci());
    BasisAtom fm = parse_basis_atom("F(n-1)");
    CHECK(fm.seq.terms(4) == std::vector<Rational>{Q(1), Q(0), Q(1), Q(1)});
    BasisAtom nn = parse_basis_atom("n");
    CHECK(nn.seq.terms(4) == std::vector<Rational>{Q(0), Q(1), Q(2), Q(3)});
    CHECK_THROWS_AS(parse_basis_atom("F(m)"), ParseError);
}

#ifdef RECSEQ_CLI_PATH

TEST_CASE("cli: guess prints the C-finite recurrence and exits 0") {
    auto r = run_cli("guess --terms 2,3,5,9,17,33,65,129,257,513,1025");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("C-finite") != std::string::npos);
    CHECK(r.out.find("3*a(n-1)") != std::string::npos);
    CHECK(r.out.find("2*a(n-2)") != std::string::npos);
}

TEST_CASE("cli: guess --json round-trips through the model parser") {
    auto r = run_cli("--json guess --terms 2,3,5,9,17,33,65,129,257,513,1025");
    REQUIRE(r.exit_code == 0);
    SequenceModel m = parse_model_json(r.out);
    auto t = model_terms(m, 11);
    CHECK(t[10] == Q(1025));
}

TEST_CASE("cli: guess exit code 1 on no fit") {
    auto r = run_cli("guess --ansatz polynomial --terms 1,1,2,3,5,8,13,21");
    CHECK(r.exit_code == 1);
}

TEST_CASE("cli: gf output for the worked example") {
    auto r = run_cli("gf --ansatz cfinite --terms 2,3,5,9,17,33,65,129,257,513,1025");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("(-3*x + 2)/(2*x^2 - 3*x + 1)") != std::string::npos);
}

TEST_CASE("cli: prove the flagship identity, exit codes 0 and 1") {
    auto good = run_cli("prove \"F(2n) = 2*F(n)*F(n+1) - F(n)^2\"");
    CHECK(good.exit_code == 0);
    CHECK(good.out.find("Proven (bound 10, checked n=0..10)") != std::string::npos);
    auto bad = run_cli("prove \"F(2n) = 2*F(n)*F(n+1)\"");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("Counterexample") != std::string::npos);
}

TEST_CASE("cli: eval presets and b-file round-trip") {
    auto r = run_cli("eval --preset somos2014 --count 10");
    CHECK(r.exit_code == 0);
    // output is b-file shaped; feed it back through a temp file
    std::string path = "/tmp/recseq_test_bfile.txt";
    {
        std::ofstream out(path);
        out << r.out;
    }
    TermVector tv = parse_bfile_path(path);
    CHECK(tv.terms.size() == 10);
    CHECK(tv.terms[9] == Q(122522400));
    std::remove(path.c_str());
}

TEST_CASE("cli: closure failure exits 1 and names the pivot") {
    // engineered order-2 pair blocked by (-1)^n - 1
    std::string a = "'{\"class\":\"xrecursive\",\"order\":2,\"coeffs\":["
                    "{\"class\":\"cfinite\",\"order\":1,\"recurrence\":[\"1\",\"-1\"],\"initials\":[\"1\"]},"
                    "{\"class\":\"cfinite\",\"order\":0,\"recurrence\":[\"1\"],\"initials\":[]},"
                    "{\"class\":\"cfinite\",\"order\":1,\"recurrence\":[\"1\",\"-1\"],\"initials\":[\"-1\"]}],"
                    "\"initials\":[\"1\",\"2\"]}'";
    std::string b = "'{\"class\":\"xrecursive\",\"order\":2,\"coeffs\":["
                    "{\"class\":\"cfinite\",\"order\":1,\"recurrence\":[\"1\",\"-1\"],\"initials\":[\"1\"]},"
                    "{\"class\":\"cfinite\",\"order\":0,\"recurrence\":[\"1\"],\"initials\":[]},"
                    "{\"class\":\"cfinite\",\"order\":2,\"recurrence\":[\"1\",\"0\",\"-1\"],\"initials\":[\"-1\",\"1\"]}],"
                    "\"initials\":[\"1\",\"3\"]}'";
    auto r = run_cli("closure --op add --a " + a + " --b " + b);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("zero divisor") != std::string::npos);

    auto ok = run_cli("closure --op add --a 'rec:1,-1,-1;init:0,1' --b 'rec:1,-2;init:1'");
    CHECK(ok.exit_code == 0);
}

TEST_CASE("cli: zdtest and diag") {
    auto zd = run_cli("zdtest --cfinite 'rec:1,0,-1;init:0,-2'");
    CHECK(zd.exit_code == 0);
    CHECK(zd.out.find("zero divisor") != std::string::npos);
    auto dg = run_cli("--json diag --order 2 --coeff-order 2 --N 12");
    CHECK(dg.exit_code == 0);
    CHECK(dg.out.find("26") != std::string::npos);
    CHECK(dg.out.find("24") != std::string::npos);
    auto usage = run_cli("guess");
    CHECK(usage.exit_code == 2);
}

#endif  // RECSEQ_CLI_PATH
