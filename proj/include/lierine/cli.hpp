/*
 * cli.hpp
 * -------
 * Command implementations behind the `lierine` front end.  Every subcommand
 * produces a versioned JSON report (command, inputs, per-assertion results,
 * wall time) and an exit code: 0 all assertions pass, 1 an assertion failed,
 * 2 usage or parse error.
 */
#pragma once

#include "acceptance.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace lierine::cli {

using nlohmann::json;

struct CommandResult {
    json report;
    int exit_code = 0;
};

namespace detail {

constexpr int kSchemaVersion = 1;

struct Reporter {
    json results = json::array();
    bool all_pass = true;

    void assert_that(const std::string& name, bool pass, const std::string& output = "",
                     const std::string& expected = "") {
        json r = {{"name", name}, {"pass", pass}};
        if (!output.empty()) r["output"] = output;
        if (!expected.empty()) r["expected"] = expected;
        results.push_back(std::move(r));
        all_pass = all_pass && pass;
    }
    void output(const std::string& name, const std::string& value) {
        results.push_back({{"name", name}, {"output", value}});
    }
};

inline std::string read_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Element argument: literal expression, or "-" to read one line from stdin.
inline std::string element_arg(const std::string& arg) {
    if (arg != "-") return arg;
    std::string line;
    if (!std::getline(std::cin, line)) throw std::runtime_error("no element on stdin");
    return line;
}

inline const DefinitionDocument::AlgebraEntry& need_algebra(const DefinitionDocument& doc,
                                                            const std::string& name) {
    if (auto* a = doc.find_algebra(name)) return *a;
    throw std::runtime_error("unknown algebra: " + name);
}

inline const DefinitionDocument::SectionEntry& need_section(const DefinitionDocument& doc,
                                                            const std::string& name) {
    if (auto* s = doc.find_section(name)) return *s;
    throw std::runtime_error("unknown section: " + name);
}

// Assemble the crossed-product context attached to a named section, using
// the kernel generators declared for its projection morphism.
inline std::shared_ptr<CrossedContext> crossed_for_section(
    const DefinitionDocument& doc, const DefinitionDocument::SectionEntry& s) {
    auto* pi = doc.find_morphism(s.pi);
    if (!pi) throw std::runtime_error("unknown morphism: " + s.pi);
    auto kit = doc.kernels.find(s.pi);
    if (kit == doc.kernels.end())
        throw std::runtime_error("morphism " + s.pi + " has no declared kernel generators");
    const auto& g = need_algebra(doc, pi->source);
    const auto& h = need_algebra(doc, pi->target);
    HopfKernelContext kc{pi->morphism, g.ctx, h.ctx, kit->second};
    return std::make_shared<CrossedContext>(std::move(kc), s.section);
}

inline UEAElement parse_plain(const std::string& text, const CtxPtr& ctx) {
    Value v = parse_element(text, scope_for_context(ctx));
    if (v.kind == Value::Kind::Scalar) return UEAElement::from_poly(ctx, v.poly);
    if (v.kind != Value::Kind::Elem) throw std::runtime_error("expected an algebra element");
    return v.elem;
}

// Kernel-monomial elements iota(B) of degree <= k, coefficients of degree
// <= cdeg, used as test sets for the axiom checks.
inline std::vector<UEAElement> kernel_monomials(const CrossedContext& cc, int k, int cdeg) {
    std::vector<UEAElement> out;
    const CtxPtr& g = cc.kernel.g_ctx;
    std::vector<int> gens = cc.kernel.n_gens;
    std::function<void(PBWMonomial, size_t, int)> rec = [&](PBWMonomial m, size_t gi, int left) {
        Poly c = Poly::constant(g->nvars(), 1);
        out.push_back(UEAElement::monomial(g, m, c));
        if (g->nvars() > 0 && cdeg > 0 && m.size() < 2)
            out.push_back(UEAElement::monomial(g, m, Poly::variable(g->nvars(), 0)));
        if (left == 0) return;
        for (size_t i = gi; i < gens.size(); ++i) {
            PBWMonomial next = m;
            next.push_back(gens[i]);
            std::sort(next.begin(), next.end());
            rec(std::move(next), i, left - 1);
        }
    };
    rec({}, 0, k);
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Subcommand bodies
// ---------------------------------------------------------------------------

namespace detail {

inline void cmd_validate(const DefinitionDocument& doc, const std::string& text, Reporter& rep) {
    for (auto& a : doc.algebras) {
        ValidationReport v = validate_lra(*a.algebra);
        rep.assert_that("algebra " + a.name + " valid", v.valid,
                        v.valid ? "" : v.failures.front());
    }
    for (auto& m : doc.morphisms) {
        // Morphisms are A-linear by construction; Lie/anchor compatibility is
        // informational (splittings are usually not Lie morphisms).
        rep.output("morphism " + m.name,
                   std::string(m.morphism.is_lie_morphism() ? "Lie-compatible"
                                                            : "A-linear only") +
                       (m.morphism.is_anchor_compatible() ? ", anchor-compatible" : ""));
    }
    for (auto& s : doc.sections)
        rep.output("section " + s.name, s.kind + " (certified at parse time)");
    for (auto& [alg, tau] : doc.taus)
        rep.output("tau table on " + alg, "certified at parse time");
    // Serialization round trip: print, reparse, print again, byte-identical.
    std::string printed = print_definition(doc);
    std::string reprinted = print_definition(parse_definition(printed));
    rep.assert_that("serialization round trip", printed == reprinted);
    (void)text;
}

inline void cmd_mul(const DefinitionDocument& doc, const std::string& algebra,
                    const std::string& section, const std::string& e1, const std::string& e2,
                    Reporter& rep) {
    if (!section.empty()) {
        auto cc = crossed_for_section(doc, need_section(doc, section));
        ElementScope sc = scope_for_crossed(cc.get());
        auto as_crossed = [&](const std::string& t) {
            Value v = parse_element(t, sc);
            if (v.kind == Value::Kind::Crossed) return v.crossed;
            CrossedElement x(cc.get());
            if (v.kind == Value::Kind::Scalar)
                x.add_pair(UEAElement::from_poly(cc->kernel.g_ctx, v.poly),
                           UEAElement::unit(cc->kernel.h_ctx));
            else if (v.kind == Value::Kind::Elem)
                x.add_pair(v.elem, UEAElement::unit(cc->kernel.h_ctx));
            else
                throw std::runtime_error("expected a crossed element");
            return x;
        };
        CrossedElement a = as_crossed(element_arg(e1)), b = as_crossed(element_arg(e2));
        rep.output("product", crossed_mul(a, b).str());
        return;
    }
    const CtxPtr& ctx = need_algebra(doc, algebra).ctx;
    UEAElement a = parse_plain(element_arg(e1), ctx), b = parse_plain(element_arg(e2), ctx);
    rep.output("product", uea_mul(a, b).str());
}

inline void cmd_coprod(const DefinitionDocument& doc, const std::string& algebra,
                       const std::string& expr, Reporter& rep) {
    const CtxPtr& ctx = need_algebra(doc, algebra).ctx;
    rep.output("coproduct", tensor_str(coproduct(parse_plain(element_arg(expr), ctx))));
}

inline void cmd_translate(const DefinitionDocument& doc, const std::string& algebra,
                          const std::string& expr, Reporter& rep) {
    const CtxPtr& ctx = need_algebra(doc, algebra).ctx;
    rep.output("translation",
               tensor_str(translation_map(parse_plain(element_arg(expr), ctx))));
}

inline void cmd_symmetrize(const DefinitionDocument& doc, const std::string& algebra,
                           const std::string& expr, bool inverse, Reporter& rep) {
    const CtxPtr& ctx = need_algebra(doc, algebra).ctx;
    UEAElement u = parse_plain(element_arg(expr), ctx);
    if (inverse) {
        SymElement s = symmetrize_inverse(u);
        UEAElement flat(ctx);
        for (auto& [m, a] : s.terms) flat.add_term(m, a);
        rep.output("inverse", flat.str());
        return;
    }
    // Reinterpret the parsed normal form as a symmetric-algebra element.
    SymElement s(ctx);
    for (auto& [m, a] : u.terms) s.terms[m] = a;
    rep.output("symmetrized", symmetrize(s).str());
}

inline void cmd_section_check(const DefinitionDocument& doc, const std::string& name, int degree,
                              Reporter& rep) {
    const auto& s = need_section(doc, name);
    auto* pi = doc.find_morphism(s.pi);
    const CtxPtr& h = s.section.h_ctx;
    bool splits = true, counit_ok = true;
    for (auto& m : pbw_monomials_up_to(h->rank(), degree)) {
        UEAElement v = UEAElement::monomial(h, m, Poly::constant(h->nvars(), 1));
        UEAElement gv = s.section.apply(v);
        if (pushforward(pi->morphism, gv, h) != v) splits = false;
        if (counit(gv) != counit(v)) counit_ok = false;
    }
    rep.assert_that("projection . section = id (degree <= " + std::to_string(degree) + ")",
                    splits);
    rep.assert_that("section preserves the counit", counit_ok);
    // Associated graded agreement with the other sections over the same
    // splitting data.
    for (auto& other : doc.sections) {
        if (other.name == name || other.pi != s.pi || other.gamma != s.gamma) continue;
        rep.assert_that("gr-equivalent to section " + other.name,
                        sections_equivalent(s.section, other.section, degree));
    }
}

inline void cmd_kernel_basis(const DefinitionDocument& doc, const std::string& morphism,
                             int degree, int coeff_degree, Reporter& rep) {
    auto* pi = doc.find_morphism(morphism);
    if (!pi) throw std::runtime_error("unknown morphism: " + morphism);
    auto kit = doc.kernels.find(morphism);
    if (kit == doc.kernels.end())
        throw std::runtime_error("morphism " + morphism + " has no declared kernel generators");
    const auto& g = need_algebra(doc, pi->source);
    const auto& h = need_algebra(doc, pi->target);
    HopfKernelContext kc{pi->morphism, g.ctx, h.ctx, kit->second};
    auto basis = hopf_kernel_basis(kc, degree, coeff_degree);
    json items = json::array();
    for (auto& b : basis) items.push_back(b.str());
    rep.results.push_back({{"name", "basis"}, {"output", items}});
    bool member_ok = true;
    for (auto& b : basis) member_ok = member_ok && hopf_kernel_membership(b, kc);
    rep.assert_that("every basis element lies in the kernel", member_ok);
}

inline void cmd_cocycle(const DefinitionDocument& doc, const std::string& section,
                        const std::string& pair, Reporter& rep) {
    auto cc = crossed_for_section(doc, need_section(doc, section));
    auto comma = pair.find(',');
    if (comma == std::string::npos)
        throw std::runtime_error("--pair expects two expressions separated by a comma");
    const CtxPtr& h = cc->kernel.h_ctx;
    UEAElement v = parse_plain(pair.substr(0, comma), h);
    UEAElement w = parse_plain(pair.substr(comma + 1), h);
    rep.output("sigma", cc->sigma(v, w).str());
}

inline void cmd_cocycle_axioms(const DefinitionDocument& doc, const std::string& section,
                               int degree, bool perturb, Reporter& rep) {
    auto cc = crossed_for_section(doc, need_section(doc, section));
    const CtxPtr& h = cc->kernel.h_ctx;
    const CtxPtr& g = cc->kernel.g_ctx;
    std::vector<UEAElement> vs = acceptance::detail::monomial_elements(h, degree);
    std::vector<UEAElement> bs = kernel_monomials(*cc, 2, 1);
    std::vector<Poly> as = {Poly::constant(g->nvars(), 1)};
    if (g->nvars() > 0) as.push_back(Poly::variable(g->nvars(), 0));
    CocycleFn sigma = [&](const UEAElement& v, const UEAElement& w) { return cc->sigma(v, w); };
    if (perturb) {
        // Negative control: add the product of single-generator coefficients,
        // which keeps the unital axiom but breaks the cocycle identity.
        sigma = [&cc, h, g](const UEAElement& v, const UEAElement& w) {
            auto lin = [&](const UEAElement& u) {
                auto it = u.terms.find(PBWMonomial{0});
                return it == u.terms.end() ? Rational(0) : it->second.constant_value();
            };
            UEAElement out = cc->sigma(v, w);
            out += UEAElement::from_poly(g, Poly::constant(g->nvars(), lin(v) * lin(w)));
            return out;
        };
    }
    CocycleAxiomReport ar = check_cocycle_axioms(sigma, cc->gamma, vs, bs, as);
    rep.assert_that("cocycle axioms (1)-(5) at degree <= " + std::to_string(degree), ar.ok,
                    ar.ok ? "" : ar.witnesses.front());
}

inline void cmd_crossed_check(const DefinitionDocument& doc, const std::string& section,
                              int degree, Reporter& rep) {
    auto cc = crossed_for_section(doc, need_section(doc, section));
    const CtxPtr& g = cc->kernel.g_ctx;
    const CtxPtr& h = cc->kernel.h_ctx;
    bool fwd = true, bwd = true;
    for (auto& b : kernel_monomials(*cc, degree, 0)) {
        if (b.degree() > degree) continue;
        for (auto& m : pbw_monomials_up_to(h->rank(), degree - b.degree())) {
            CrossedElement x(cc.get());
            x.add_pair(b, UEAElement::monomial(h, m, Poly::constant(h->nvars(), 1)));
            if (psi(phi(x), cc.get()) != x) fwd = false;
        }
    }
    for (auto& m : pbw_monomials_up_to(g->rank(), degree)) {
        UEAElement u = UEAElement::monomial(g, m, Poly::constant(g->nvars(), 1));
        if (phi(psi(u, cc.get())) != u) bwd = false;
    }
    rep.assert_that("Psi . Phi = id on crossed basis (degree <= " + std::to_string(degree) + ")",
                    fwd);
    rep.assert_that("Phi . Psi = id on the enveloping basis", bwd);
    rep.assert_that("Phi is right-colinear", colinearity_check(cc.get(), std::min(degree, 3)));
}

inline void cmd_rainfog_check(const DefinitionDocument& doc, const std::string& algebra,
                              int degree, Reporter& rep) {
    TauProductResult res = tau_context_from(doc, algebra);
    if (!res.ok) throw std::runtime_error("tau context: " + res.error);
    RainFogReport rf = rain_fog_check(res.ctx, degree);
    rep.assert_that("curved factorization checks at degree <= " + std::to_string(degree), rf.ok,
                    rf.ok ? "" : rf.witnesses.front());
}

inline void cmd_example(const std::string& name, bool list, Reporter& rep) {
    std::vector<std::pair<std::string, std::function<void()>>> catalog = {
        {"heisenberg",
         [&] {
             HeisenbergBundle b = heisenberg_bundle();
             std::vector<std::string> w;
             bool ok = b.run_golden(&w);
             rep.assert_that("golden table", ok, ok ? "" : w.front());
         }},
        {"weyl-semidirect",
         [&] {
             SemidirectBundle b = semidirect_weyl_bundle();
             std::vector<std::string> w;
             bool ok = b.run_golden(&w);
             rep.assert_that("golden table", ok, ok ? "" : w.front());
         }},
        {"transformation-weyl",
         [&] {
             TransformationBundle b = transformation_weyl();
             std::vector<std::string> w;
             bool ok = b.run_golden(&w);
             rep.assert_that("golden table", ok, ok ? "" : w.front());
         }},
        {"transformation-rank2",
         [&] {
             TransformationBundle b = transformation_rank2();
             std::vector<std::string> w;
             bool ok = b.run_golden(&w);
             rep.assert_that("golden table", ok, ok ? "" : w.front());
         }},
        {"transformation-shear",
         [&] {
             TransformationBundle b = transformation_rank3();
             std::vector<std::string> w;
             bool ok = b.run_golden(&w);
             rep.assert_that("golden table", ok, ok ? "" : w.front());
         }},
        {"transformation-zero-action",
         [&] {
             TransformationBundle b = transformation_zero_action();
             std::vector<std::string> w;
             bool ok = b.run_golden(&w);
             rep.assert_that("golden table", ok, ok ? "" : w.front());
         }},
        {"euler",
         [&] {
             auto d2 = euler_gl_invariants(2, 2);
             rep.assert_that("d=2, k=2 dimensions 10/9/1",
                             d2.full_dim == 10 && d2.invariant_dim == 9 && d2.kernel_dim == 1);
         }},
    };
    if (list) {
        json names = json::array();
        for (auto& [n, f] : catalog) names.push_back(n);
        rep.results.push_back({{"name", "examples"}, {"output", names}});
        return;
    }
    for (auto& [n, f] : catalog)
        if (n == name) {
            f();
            return;
        }
    throw std::runtime_error("unknown example: " + name + " (use --list)");
}

inline void cmd_suite(std::uint64_t seed, Reporter& rep) {
    for (auto& r : acceptance::run_all(seed))
        rep.assert_that(std::to_string(r.index) + " " + r.name, r.pass, r.detail);
}

} // namespace detail

// ---------------------------------------------------------------------------
// Front end
// ---------------------------------------------------------------------------

inline CommandResult run_command(const std::vector<std::string>& args) {
    auto t0 = std::chrono::steady_clock::now();
    CLI::App app{"exact symbolic kernel for enveloping-algebra decompositions"};
    app.require_subcommand(1);

    std::string file, algebra, section, morphism, pair, name, json_out;
    std::string expr, expr2;
    int degree = 4, coeff_degree = 0;
    std::uint64_t seed = 0;
    bool perturb = false, inverse = false, list = false, example_suite = false;

    auto add_file = [&](CLI::App* c, bool required = true) {
        auto* opt = c->add_option("--file", file, "algebra definition file");
        if (required) opt->required();
    };

    CLI::App* c_validate = app.add_subcommand("validate", "parse and validate a definition file");
    add_file(c_validate);

    CLI::App* c_mul = app.add_subcommand("mul", "multiply two elements");
    add_file(c_mul);
    c_mul->add_option("--algebra", algebra, "algebra name");
    c_mul->add_option("--section", section, "crossed-product section name");
    c_mul->add_option("lhs", expr, "left element expression ('-' reads stdin)")->required();
    c_mul->add_option("rhs", expr2, "right element expression ('-' reads stdin)")->required();

    CLI::App* c_coprod = app.add_subcommand("coprod", "coproduct of an element");
    add_file(c_coprod);
    c_coprod->add_option("--algebra", algebra)->required();
    c_coprod->add_option("expr", expr)->required();

    CLI::App* c_translate = app.add_subcommand("translate", "translation map of an element");
    add_file(c_translate);
    c_translate->add_option("--algebra", algebra)->required();
    c_translate->add_option("expr", expr)->required();

    CLI::App* c_sym = app.add_subcommand("symmetrize", "symmetrization map of an element");
    add_file(c_sym);
    c_sym->add_option("--algebra", algebra)->required();
    c_sym->add_flag("--inverse", inverse, "apply the inverse map instead");
    c_sym->add_option("expr", expr)->required();

    CLI::App* c_section = app.add_subcommand("section-check", "verify a coring section");
    add_file(c_section);
    c_section->add_option("--section", section)->required();
    c_section->add_option("--degree", degree, "working filtration degree");

    CLI::App* c_kernel = app.add_subcommand("kernel-basis", "Hopf kernel basis by degree");
    add_file(c_kernel);
    c_kernel->add_option("--morphism", morphism)->required();
    c_kernel->add_option("--degree", degree);
    c_kernel->add_option("--coeff-degree", coeff_degree, "base coefficient degree bound");

    CLI::App* c_cocycle = app.add_subcommand("cocycle", "evaluate the section 2-cocycle");
    add_file(c_cocycle);
    c_cocycle->add_option("--section", section)->required();
    c_cocycle->add_option("--pair", pair, "comma-separated pair of elements")->required();

    CLI::App* c_axioms = app.add_subcommand("cocycle-axioms", "verify the cocycle axioms");
    add_file(c_axioms);
    c_axioms->add_option("--section", section)->required();
    c_axioms->add_option("--degree", degree);
    c_axioms->add_flag("--perturb", perturb, "negative control: perturb sigma");

    CLI::App* c_crossed = app.add_subcommand("crossed-check", "crossed-product round trip");
    add_file(c_crossed);
    c_crossed->add_option("--section", section)->required();
    c_crossed->add_option("--degree", degree);

    CLI::App* c_rainfog = app.add_subcommand("rainfog-check", "curved factorization check");
    add_file(c_rainfog);
    c_rainfog->add_option("--algebra", algebra)->required();
    c_rainfog->add_option("--degree", degree);

    CLI::App* c_example = app.add_subcommand("example", "run a catalog example");
    c_example->add_option("name", name, "example name");
    c_example->add_flag("--list", list, "list catalog names");
    c_example->add_flag("--suite", example_suite, "run the full golden table");

    CLI::App* c_suite = app.add_subcommand("suite", "run the full acceptance suite");
    c_suite->add_option("--seed", seed, "randomized-test seed");

    for (auto* c : {&app, c_validate, c_mul, c_coprod, c_translate, c_sym, c_section, c_kernel,
                    c_cocycle, c_axioms, c_crossed, c_rainfog, c_example, c_suite})
        c->add_option("--json-out", json_out, "write the JSON report to a file");

    CommandResult res;
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        res.exit_code = app.exit(e, msg, msg) == 0 ? 0 : 2;
        res.report = {{"schema_version", detail::kSchemaVersion},
                      {"error", msg.str()},
                      {"pass", res.exit_code == 0}};
        return res;
    }

    detail::Reporter rep;
    std::string command = app.get_subcommands().front()->get_name();
    json inputs = json::object();
    if (!file.empty()) inputs["file"] = file;
    if (!algebra.empty()) inputs["algebra"] = algebra;
    if (!section.empty()) inputs["section"] = section;
    if (!morphism.empty()) inputs["morphism"] = morphism;
    if (!pair.empty()) inputs["pair"] = pair;
    if (!name.empty()) inputs["name"] = name;
    if (command == "suite") inputs["seed"] = seed;
    if (c_section->parsed() || c_kernel->parsed() || c_axioms->parsed() || c_crossed->parsed() ||
        c_rainfog->parsed())
        inputs["degree"] = degree;

    try {
        DefinitionDocument doc;
        std::string text;
        if (!file.empty()) {
            text = detail::read_input(file);
            doc = parse_definition(text);
        }
        if (c_validate->parsed())
            detail::cmd_validate(doc, text, rep);
        else if (c_mul->parsed())
            detail::cmd_mul(doc, algebra, section, expr, expr2, rep);
        else if (c_coprod->parsed())
            detail::cmd_coprod(doc, algebra, expr, rep);
        else if (c_translate->parsed())
            detail::cmd_translate(doc, algebra, expr, rep);
        else if (c_sym->parsed())
            detail::cmd_symmetrize(doc, algebra, expr, inverse, rep);
        else if (c_section->parsed())
            detail::cmd_section_check(doc, section, degree, rep);
        else if (c_kernel->parsed())
            detail::cmd_kernel_basis(doc, morphism, degree, coeff_degree, rep);
        else if (c_cocycle->parsed())
            detail::cmd_cocycle(doc, section, pair, rep);
        else if (c_axioms->parsed())
            detail::cmd_cocycle_axioms(doc, section, degree, perturb, rep);
        else if (c_crossed->parsed())
            detail::cmd_crossed_check(doc, section, degree, rep);
        else if (c_rainfog->parsed())
            detail::cmd_rainfog_check(doc, algebra, degree, rep);
        else if (c_example->parsed())
            detail::cmd_example(name, list, rep);
        else if (c_suite->parsed())
            detail::cmd_suite(seed, rep);
        (void)example_suite; // golden table is the example contract either way
    } catch (const ParseError& e) {
        res.exit_code = 2;
        res.report = {{"schema_version", detail::kSchemaVersion},
                      {"command", command},
                      {"inputs", inputs},
                      {"error", e.what()},
                      {"pass", false}};
        return res;
    } catch (const std::exception& e) {
        res.exit_code = 2;
        res.report = {{"schema_version", detail::kSchemaVersion},
                      {"command", command},
                      {"inputs", inputs},
                      {"error", e.what()},
                      {"pass", false}};
        return res;
    }

    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    res.report = {{"schema_version", detail::kSchemaVersion},
                  {"command", command},
                  {"inputs", inputs},
                  {"results", rep.results},
                  {"pass", rep.all_pass},
                  {"wall_time_ms", ms}};
    res.exit_code = rep.all_pass ? 0 : 1;

    if (!json_out.empty()) {
        std::ofstream out(json_out);
        out << res.report.dump(2) << "\n";
    }
    return res;
}

} // namespace lierine::cli
