// princ_lab: certificate-producing command line front end.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>

#include "CLI11.hpp"
#include "princ_lab/commands.hpp"
#include "princ_lab/recheck.hpp"

namespace {

using namespace princ_lab;

int emit(const Report& rep, const Options& o) {
    std::cout << rep.doc().dump(2) << "\n";
    if (o.recheck) {
        // Reparse the serialized text so the check sees exactly what was printed.
        auto out = recheck::verify(json::parse(rep.doc().dump()));
        if (!out.ok()) {
            std::cerr << "recheck failed on " << out.failures.size() << " of " << out.checked << " claims\n";
            for (const auto& f : out.failures) std::cerr << "  " << f << "\n";
            return kRecheckMismatch;
        }
        std::cerr << "recheck: " << out.checked << " claims verified\n";
    }
    return rep.code();
}

int recheck_file(const Options& o) {
    if (o.args.size() != 1) throw InputError("expected one report file, or - for stdin");
    std::string text;
    if (o.args[0] == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(o.args[0]);
        if (!in) throw InputError("cannot open '" + o.args[0] + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    json report;
    try {
        report = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("report is not valid JSON: ") + e.what());
    }
    if (report.value("schema", "") != kSchema) throw InputError(std::string("report schema must be ") + kSchema);
    auto out = recheck::verify(report);
    json summary = {{"schema", kSchema},
                    {"command", "recheck"},
                    {"checked", out.checked},
                    {"failures", out.failures},
                    {"verdict", out.ok() ? "verified" : "mismatch"}};
    std::cout << summary.dump(2) << "\n";
    return out.ok() ? kOk : kRecheckMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    std::function<int()> action;

    CLI::App app{"Idempotent pairs, comaximal factorizations and their certificates"};
    app.set_version_flag("--version", std::string("princ_lab ") + kVersion);
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--ring", o.ring, "Z, Q, Z[sqrt(d)], D[X;S], pullback:Z, limitring:Q, limitring:Z, B2");
    app.add_option("--monoid", o.monoid, "exponent monoid of D[X;S]: p-div:P or mult:{p,q,...}");
    app.add_flag("--group", o.group, "use the group S - S instead of the monoid S");
    app.add_flag("--recheck", o.recheck, "verify every claim of the report independently");
    app.add_option("--jobs", o.jobs, "worker threads for multi-input commands")->check(CLI::Range(1u, 256u));

    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, auto fn, bool positional = true) {
        auto* c = parent->add_subcommand(name, help);
        if (positional) c->add_option("args", o.args, "inputs (put them after -- if any starts with '-')");
        c->callback([&, fn] { action = [&, fn] { return fn(o); }; });
        return c;
    };
    auto report = [](Report (*f)(const Options&)) { return [f](const Options& opt) { return emit(f(opt), opt); }; };

    auto* idem = app.add_subcommand("idem", "idempotent pairs")->require_subcommand(1);
    leaf(idem, "check", "test whether (A, B) is an idempotent pair", report(idem_check));
    leaf(idem, "from-ideal", "idempotent pair from an invertible ideal (A, B)", report(idem_from_ideal));
    leaf(idem, "matrix", "the idempotent matrix of the pair (A, B)", report(idem_matrix));

    auto* ideal = app.add_subcommand("ideal", "ideals of Z[sqrt(d)], d < 0")->require_subcommand(1);
    leaf(ideal, "principal", "decide whether (A, B) is principal", report(ideal_principal));
    leaf(ideal, "mul", "(A, B)(C, D) in Hermite normal form", report(ideal_mul));
    leaf(ideal, "invertible", "decide whether (A, B) is invertible", report(ideal_invertible));
    leaf(ideal, "factor", "prime ideal factorization of (A)", report(ideal_factor));

    auto* comax = app.add_subcommand("comax", "complete comaximal factorizations")->require_subcommand(1);
    leaf(comax, "factor", "one complete comaximal factorization of each input", report([](const Options& opt) {
             return comax_run(opt, false);
         }));
    leaf(comax, "unique", "all complete comaximal factorizations of each input", report([](const Options& opt) {
             return comax_run(opt, true);
         }));
    auto* hunt = leaf(comax, "hunt", "search for an element with two factorizations", report(comax_hunt), false);
    hunt->add_option("--bound", o.bound, "largest norm (or absolute value) to scan");

    auto* pb = app.add_subcommand("pullback", "the ring Z + Y*Q[Y]_(Y)")->require_subcommand(1);
    leaf(pb, "reduce", "generator of the ideal of an idempotent pair", report(pullback_reduce));
    auto* nonufd = leaf(pb, "nonufd", "z/d^k for k = 1..K, all in M", report(pullback_nonufd));
    nonufd->add_option("--divisor", o.divisor, "nonunit d of Z");
    nonufd->add_option("--k", o.k, "chain length");

    auto* mr = app.add_subcommand("mring", "monoid rings D[X;S]")->require_subcommand(1);
    leaf(mr, "split", "1 - X^s = f1*f2 with f1, f2 comaximal", report(mring_split));
    leaf(mr, "chain", "m pairwise comaximal factors of 1 - X^s", report(mring_chain))
        ->add_option("--m", o.m, "number of factors");
    auto* juett = leaf(mr, "juett", "X^t - b = b*f1*f2 with f1, f2 comaximal", report(mring_juett), false);
    juett->add_option("--t", o.t, "exponent t in S")->required();
    juett->add_option("--b", o.b, "constant b = beta^p")->required();
    juett->add_option("--p", o.p, "prime p")->required();
    juett->add_option("--beta", o.beta, "p-th root beta of b")->required();

    auto* lr = app.add_subcommand("limitring", "the direct limit of x_i = x_{i+1} + x_{i+1}^2")->require_subcommand(1);
    leaf(lr, "chain", "x_1 as a product of m pairwise comaximal factors", report(limitring_chain), false)
        ->add_option("--m", o.m, "number of factors");
    leaf(lr, "eval", "normal form of an expression in x_1, x_2, ...", report(limitring_eval))
        ->add_option("--level", o.level, "write the result at this level");

    auto* pe = app.add_subcommand("polyext", "the polynomial extension counterexample")->require_subcommand(1);
    leaf(pe, "witness", "is alpha outside D with alpha^2, alpha^3 in D", report(polyext_witness))
        ->add_option("--exclude", o.exclude, "excluded y-degrees of D, comma separated");
    auto* ce = leaf(pe, "counterexample", "non-principal idempotent pair in D[X]", report(polyext_counterexample), false);
    ce->add_option("--alpha", o.alpha, "seminormality witness (default y)");
    ce->add_option("--exclude", o.exclude, "excluded y-degrees of D, comma separated");
    leaf(pe, "contract", "the ideal (f1(0), f2(0)) of D", report(polyext_contract));

    auto* sp = app.add_subcommand("sphere", "the coordinate ring B2 of the 2-sphere over Q")->require_subcommand(1);
    leaf(sp, "projector", "the tangent bundle projector E", report(sphere_projector), false);
    leaf(sp, "reduce", "normal form f + g*X0", report(sphere_reduce));

    leaf(&app, "recheck", "verify the claims of a saved report (FILE or -)", recheck_file);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kInputError;
    }
    try {
        return action();
    } catch (const ElementError& e) {
        std::cerr << "error: cannot read element\n" << e.what() << "\n";
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const princ::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const princ::MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const recheck::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return kInputError;
}
