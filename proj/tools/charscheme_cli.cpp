// Command-line front end: exact SL2(C) character schemes of small Seifert
// manifolds. Subcommands: trace, ideal, census, groebner, analyze,
// verify-suite.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "charscheme/report_json.hpp"

using namespace charscheme;

namespace {

SeifertParams parse_seifert(const std::string& text) {
    std::array<Fraction, 3> fr;
    std::stringstream ss(text);
    std::string piece;
    int count = 0;
    while (std::getline(ss, piece, ',')) {
        if (count >= 3) throw CLI::ValidationError("--seifert", "expected exactly three fractions");
        auto slash = piece.find('/');
        if (slash == std::string::npos)
            throw CLI::ValidationError("--seifert", "fraction must look like a/b: " + piece);
        try {
            fr[count].num = mpz_class(piece.substr(0, slash));
            fr[count].den = mpz_class(piece.substr(slash + 1));
        } catch (const std::invalid_argument&) {
            throw CLI::ValidationError("--seifert", "bad fraction: " + piece);
        }
        ++count;
    }
    if (count != 3) throw CLI::ValidationError("--seifert", "expected exactly three fractions");
    SeifertParams s;
    try {
        s = params_normalize(fr);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError("--seifert", e.what());
    }
    if (s.euler == 0)
        throw CLI::ValidationError(
            "--seifert", "Euler number must be nonzero (the character variety is finite only then)");
    return s;
}

BuchbergerBudget budget_from_env(std::size_t cli_value) {
    BuchbergerBudget b;
    b.max_pairs = cli_value;
    if (const char* env = std::getenv("CHARSCHEME_GROEBNER_BUDGET")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) b.max_pairs = v;
    }
    return b;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact SL2(C) character schemes of small Seifert manifolds"};
    app.require_subcommand(1);

    std::string word_text, seifert_text, source = "hardcoded", format = "text",
                order = "degrevlex";
    std::size_t budget_pairs = 200000;
    bool want_dim = false, skip_groebner = false, check_generic = false;
    long p_max = 3, q_max = 1;
    bool census_only = false, with_groebner = false, serial = false;

    auto* trace_cmd = app.add_subcommand("trace", "canonical trace polynomial of a word");
    trace_cmd->add_option("--word", word_text, "word like \"h c1^-2 c2 h^3\"")->required();

    auto* ideal_cmd = app.add_subcommand("ideal", "generators of the defining ideal");
    ideal_cmd->add_option("--seifert", seifert_text, "a1/b1,a2/b2,a3/b3")->required();
    ideal_cmd->add_option("--source", source, "hardcoded|generic")
        ->check(CLI::IsMember({"hardcoded", "generic"}));
    ideal_cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* census_cmd = app.add_subcommand("census", "enumerate all characters");
    census_cmd->add_option("--seifert", seifert_text, "a1/b1,a2/b2,a3/b3")->required();
    census_cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* gb_cmd = app.add_subcommand("groebner", "reduced Groebner basis of the ideal");
    gb_cmd->add_option("--seifert", seifert_text, "a1/b1,a2/b2,a3/b3")->required();
    gb_cmd->add_option("--order", order, "monomial order")->check(CLI::IsMember({"degrevlex", "lex"}));
    gb_cmd->add_flag("--dim", want_dim, "also print the quotient dimension");
    gb_cmd->add_option("--budget", budget_pairs, "pair-processing cap");

    auto* an_cmd = app.add_subcommand("analyze", "census + tangent spaces + multiplicities");
    an_cmd->add_option("--seifert", seifert_text, "a1/b1,a2/b2,a3/b3")->required();
    an_cmd->add_flag("--skip-groebner", skip_groebner, "skip the quotient-dimension cross-check");
    an_cmd->add_flag("--check-generic", check_generic, "also verify the generic derivation");
    an_cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    an_cmd->add_option("--budget", budget_pairs, "pair-processing cap");

    auto* suite_cmd = app.add_subcommand("verify-suite", "sweep all manifolds in a range");
    suite_cmd->add_option("--p-max", p_max, "max fiber order (>= 2)");
    suite_cmd->add_option("--q-max", q_max, "max |fiber coefficient| (>= 1)");
    suite_cmd->add_flag("--census-only", census_only, "skip per-point tangent analysis");
    suite_cmd->add_flag("--groebner", with_groebner, "add the quotient-dimension cross-check");
    suite_cmd->add_flag("--generic", check_generic, "add the cross-derivation ideal check");
    suite_cmd->add_flag("--serial", serial, "force the serial reference path");
    suite_cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    suite_cmd->add_option("--budget", budget_pairs, "pair-processing cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);  // usage errors exit 1 (or 0 for --help)
    }

    try {
        if (*trace_cmd) {
            GroupWord w = GroupWord::parse(word_text);
            std::cout << trace_reduce(w).str() << "\n";
            return 0;
        }
        if (*ideal_cmd) {
            SeifertParams s = parse_seifert(seifert_text);
            IdealPresentation pres =
                source == "generic" ? build_ideal_generic(s) : build_ideal_hardcoded(s);
            if (format == "json") {
                std::cout << ideal_to_json(pres).dump(2) << "\n";
            } else {
                for (const auto& g : pres.generators)
                    std::cout << g.label << ": " << g.poly.str() << "\n";
            }
            return 0;
        }
        if (*census_cmd) {
            SeifertParams s = parse_seifert(seifert_text);
            Census c = census(s);
            std::cout << (format == "json" ? census_to_json(c).dump(2) + "\n" : census_text(c));
            return 0;
        }
        if (*gb_cmd) {
            SeifertParams s = parse_seifert(seifert_text);
            MonomialOrder ord = order == "lex" ? MonomialOrder::kLex : MonomialOrder::kDegRevLex;
            GroebnerBasis gb = groebner_compute(build_ideal_hardcoded(s).polys(), ord,
                                                budget_from_env(budget_pairs));
            std::cout << "basis size = " << gb.size() << ", max degree = " << gb.max_degree()
                      << "\n";
            if (want_dim) {
                auto d = quotient_dimension(gb);
                std::cout << "quotient dimension = " << (d ? std::to_string(*d) : "infinite")
                          << "\n";
            }
            return 0;
        }
        if (*an_cmd) {
            SeifertParams s = parse_seifert(seifert_text);
            ReportOptions opt;
            opt.run_groebner = !skip_groebner;
            opt.check_generic_ideal = check_generic;
            opt.budget = budget_from_env(budget_pairs);
            SchemeReport rep = scheme_report(s, opt);
            std::cout << (format == "json" ? report_to_json(rep).dump(2) + "\n" : report_text(rep));
            return rep.anomaly || !rep.all_checks_pass() ? 2 : 0;
        }
        if (*suite_cmd) {
            SweepOptions opt;
            opt.p_max = p_max;
            opt.q_max = q_max;
            opt.run_tangent = !census_only;
            opt.run_groebner = with_groebner;
            opt.check_generic_ideal = check_generic;
            opt.parallel = !serial;
            opt.budget = budget_from_env(budget_pairs);
            std::vector<SweepRow> rows = run_sweep(opt);
            std::cout << (format == "json" ? sweep_to_json(rows).dump(2) + "\n" : sweep_text(rows));
            for (const auto& r : rows)
                if (!r.ok) return 2;
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded after " << e.pairs_processed << " pairs\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
