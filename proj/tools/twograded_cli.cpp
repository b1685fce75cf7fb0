// Command-line front end. Everything goes through the shared library's C
// interface; no classification logic lives here.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "twograded.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUndetermined = 3;

int die(tg_status rc) {
    std::cerr << "error: " << tg_last_error() << "\n";
    switch (rc) {
        case TG_ERR_PARAM:
        case TG_ERR_PARSE:
        case TG_ERR_SCHEMA:
            return kExitUsage;
        case TG_ERR_UNDETERMINED:
            return kExitUndetermined;
        default:
            return kExitFailure;
    }
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct BracketHandle {
    tg_bracket* b = nullptr;
    ~BracketHandle() { tg_bracket_free(b); }
};

struct StringHandle {
    char* s = nullptr;
    ~StringHandle() { tg_string_free(s); }
};

int load_bracket(const std::string& path, const std::string& mode, BracketHandle& out) {
    std::string text;
    try {
        text = read_file(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    tg_status rc = tg_bracket_parse_json(text.c_str(), &out.b);
    if (rc != TG_OK) return die(rc);
    if (mode == "approx") {
        tg_bracket* conv = nullptr;
        rc = tg_bracket_to_approx(out.b, &conv);
        if (rc != TG_OK) return die(rc);
        tg_bracket_free(out.b);
        out.b = conv;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification of algebraic brackets for generic rank-6 distributions "
                 "on 9-manifolds, with crossed-diagram tools for |2|-graded parabolic pairs"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::string in_path, mode = "exact", params, diagram, format;
    double tol = 1e-9;
    std::uint64_t seed = 1;
    int family = 1, degree = 2, max_corank = 12, max_rank = 60, count = 10, nilpotent = -1;

    auto* cls = app.add_subcommand("classify", "classify a bracket into its orbit family");
    cls->add_option("--in", in_path, "bracket JSON file ('-' for stdin)")->required();
    cls->add_option("--mode", mode, "exact|approx")->check(CLI::IsMember({"exact", "approx"}));
    cls->add_option("--tol", tol, "approx-mode relative tolerance");
    std::string cls_format = "json";
    cls->add_option("--format", cls_format, "json|text")->check(CLI::IsMember({"json", "text"}));

    auto* nrm = app.add_subcommand("normalize", "canonical representative via the uniqueness procedure");
    nrm->add_option("--in", in_path, "bracket JSON file ('-' for stdin)")->required();

    auto* smp = app.add_subcommand("sample", "seeded random orbit samples of a canonical form");
    smp->add_option("--family", family, "family 1..7")->required();
    smp->add_option("--params", params, "comma-separated rational parameters, e.g. 1,2,4");
    smp->add_option("--nilpotent", nilpotent, "printed nilpotent part index (families 3, 4, 6)");
    smp->add_option("--count", count, "number of samples");
    smp->add_option("--seed", seed, "generator seed");

    auto* ver = app.add_subcommand("verify", "run the acceptance suite");

    auto* enu = app.add_subcommand("enumerate", "all |2|-graded crossings of a simple type");
    enu->add_option("--diagram", diagram, "type and rank, e.g. D4 or E7")->required();
    std::string enu_format = "text";
    enu->add_option("--format", enu_format, "json|text")->check(CLI::IsMember({"json", "text"}));

    auto* coh = app.add_subcommand("cohomology", "Kostant components of a crossed diagram");
    coh->add_option("--diagram", diagram, "crossed diagram, e.g. D4:x34")->required();
    coh->add_option("--degree", degree, "cohomology degree 1 or 2")->check(CLI::IsMember({1, 2}));
    std::string coh_format = "text";
    coh->add_option("--format", coh_format, "json|text")->check(CLI::IsMember({"json", "text"}));

    auto* tab = app.add_subcommand("table", "achievable ranks by corank for semisimple sums");
    tab->add_option("--max-corank", max_corank, "largest corank row");
    tab->add_option("--max-rank", max_rank, "rank window");
    std::string tab_format = "csv";
    tab->add_option("--format", tab_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (cls->parsed()) {
        BracketHandle b;
        if (int rc = load_bracket(in_path, mode, b)) return rc;
        tg_report* rep = nullptr;
        tg_status rc = tg_classify(b.b, tol, &rep);
        if (rc != TG_OK && rc != TG_ERR_UNDETERMINED) return die(rc);
        StringHandle text;
        tg_status trc = cls_format == "text" ? tg_report_to_text(rep, &text.s) : tg_report_to_json(rep, &text.s);
        tg_report_free(rep);
        if (trc != TG_OK) return die(trc);
        std::cout << text.s;
        return rc == TG_ERR_UNDETERMINED ? kExitUndetermined : kExitOk;
    }
    if (nrm->parsed()) {
        BracketHandle b, n;
        if (int rc = load_bracket(in_path, "exact", b)) return rc;
        tg_status rc = tg_normalize_unique(b.b, &n.b);
        if (rc != TG_OK) return die(rc);
        StringHandle text;
        if (tg_bracket_to_json(n.b, &text.s) != TG_OK) return kExitFailure;
        std::cout << text.s;
        return kExitOk;
    }
    if (smp->parsed()) {
        StringHandle text;
        tg_status rc =
            tg_sample_orbit(family, params.empty() ? nullptr : params.c_str(), nilpotent, count, seed, &text.s);
        if (rc != TG_OK) return die(rc);
        std::cout << text.s;
        return kExitOk;
    }
    if (ver->parsed()) {
        StringHandle text;
        int rc = tg_verify(&text.s);
        std::cout << text.s;
        std::cout << (rc == 0 ? "verification passed\n" : "verification FAILED\n");
        return rc == 0 ? kExitOk : kExitFailure;
    }
    if (enu->parsed()) {
        StringHandle text;
        tg_status rc = tg_enumerate_two_graded(diagram.c_str(), enu_format.c_str(), &text.s);
        if (rc != TG_OK) return die(rc);
        std::cout << text.s;
        return kExitOk;
    }
    if (coh->parsed()) {
        StringHandle text;
        tg_status rc = tg_cohomology(diagram.c_str(), degree, coh_format.c_str(), &text.s);
        if (rc != TG_OK) return die(rc);
        std::cout << text.s;
        return kExitOk;
    }
    if (tab->parsed()) {
        StringHandle text;
        tg_status rc = tg_rank_table(max_corank, max_rank, tab_format.c_str(), &text.s);
        if (rc != TG_OK) return die(rc);
        std::cout << text.s;
        return kExitOk;
    }
    return kExitUsage;
}
