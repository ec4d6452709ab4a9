/*
 * test_cli.cpp
 * ------------
 * Definition DSL, element expression parser, and the command front end.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lierine/cli.hpp"

#include <random>

using namespace lierine;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("shipped definition files parse and round-trip") {
    for (const char* path :
         {"docs/heisenberg.def", "docs/rainfog.def", "docs/weyl-semidirect.def"}) {
        DefinitionDocument doc = parse_definition(slurp(path));
        std::string printed = print_definition(doc);
        CHECK(print_definition(parse_definition(printed)) == printed);
    }
}

TEST_CASE("definition errors carry locations") {
    CHECK_THROWS_AS(parse_definition("algebra g Q\nalgebra g Q\n"), ParseError);
    try {
        parse_definition("algebra g Q P\nbracket g [Q, Z] = P\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("Z") != std::string::npos);
    }
}

TEST_CASE("element expressions evaluate through the normal form") {
    DefinitionDocument doc = parse_definition(slurp("docs/heisenberg.def"));
    ElementScope sc = scope_for_context(doc.find_algebra("g")->ctx);
    CHECK(parse_element("P*Q", sc).elem.str() == "Q*P + C");
    CHECK(parse_element("2/3 * Q^2", sc).elem.str() == "2/3*Q^2");
    CHECK(parse_element("(Q + P)^2 - Q^2 - P^2 - 2*Q*P", sc).elem.str() == "C");
}

TEST_CASE("print-then-parse is the identity on random elements") {
    DefinitionDocument heis = parse_definition(slurp("docs/heisenberg.def"));
    DefinitionDocument weyl = parse_definition(slurp("docs/weyl-semidirect.def"));
    std::mt19937_64 eng(42);
    auto uniform = [&](int lo, int hi) {
        return (int)(lo + eng() % (std::uint64_t)(hi - lo + 1));
    };
    for (const CtxPtr& ctx : {heis.find_algebra("g")->ctx, weyl.find_algebra("g")->ctx}) {
        ElementScope sc = scope_for_context(ctx);
        for (int t = 0; t < 250; ++t) {
            UEAElement u(ctx);
            for (int terms = uniform(1, 3); terms > 0; --terms) {
                PBWMonomial m;
                for (int len = uniform(0, 4); len > 0; --len)
                    m.push_back(uniform(0, ctx->rank() - 1));
                std::sort(m.begin(), m.end());
                Poly a(ctx->nvars());
                ExpVec e(ctx->nvars(), 0);
                for (int i = 0; i < ctx->nvars(); ++i) e[i] = uniform(0, 2);
                a.add_term(e, Rational(uniform(-6, 6), uniform(1, 4)));
                if (!a.is_zero()) u.add_term(m, a);
            }
            std::string printed = u.str();
            Value back = parse_element(printed, sc);
            UEAElement v = back.kind == Value::Kind::Scalar
                               ? UEAElement::from_poly(ctx, back.poly)
                               : back.elem;
            CHECK(v == u);
            CHECK(v.str() == printed);
        }
    }
}

TEST_CASE("crossed expressions parse in a section scope") {
    DefinitionDocument doc = parse_definition(slurp("docs/heisenberg.def"));
    auto cc = cli::detail::crossed_for_section(doc, *doc.find_section("ordered"));
    Value v = parse_element("C # X*Y + 2 # 1", scope_for_crossed(cc.get()));
    REQUIRE(v.kind == Value::Kind::Crossed);
    CHECK(v.crossed.str() == "C # X*Y + 2 # 1");
}

TEST_CASE("run_command emits versioned reports with correct exit codes") {
    auto run = [](std::vector<std::string> args) { return cli::run_command(args); };
    cli::CommandResult ok = run({"cocycle", "--file", "docs/heisenberg.def", "--section",
                                 "ordered", "--pair", "Y^2,X^2"});
    CHECK(ok.exit_code == 0);
    CHECK(ok.report["schema_version"] == 1);
    CHECK(ok.report["pass"] == true);
    CHECK(ok.report["results"][0]["output"] == "2*C^2");

    cli::CommandResult fail = run({"cocycle-axioms", "--file", "docs/heisenberg.def",
                                   "--section", "ordered", "--degree", "2", "--perturb"});
    CHECK(fail.exit_code == 1);
    CHECK(fail.report["pass"] == false);

    cli::CommandResult usage = run({"mul", "--file", "docs/heisenberg.def"});
    CHECK(usage.exit_code == 2);

    cli::CommandResult missing = run({"validate", "--file", "docs/does-not-exist.def"});
    CHECK(missing.exit_code == 2);
}

TEST_CASE("reports are deterministic modulo wall time") {
    auto strip = [](cli::CommandResult r) {
        r.report.erase("wall_time_ms");
        return r.report.dump();
    };
    std::vector<std::string> args = {"kernel-basis", "--file", "docs/heisenberg.def",
                                     "--morphism", "pi", "--degree", "3"};
    CHECK(strip(cli::run_command(args)) == strip(cli::run_command(args)));
}

TEST_CASE("validate command certifies the shipped fixtures") {
    for (const char* f : {"docs/heisenberg.def", "docs/weyl-semidirect.def"}) {
        cli::CommandResult r = cli::run_command({"validate", "--file", f});
        CHECK(r.exit_code == 0);
    }
}
