#include "hermu/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <regex>

#include "hermu/prover.hpp"
#include "hermu/report.hpp"

namespace hermu::cli {

namespace {

bool looks_like_selector(const std::string& s) {
    static const std::regex pattern(R"(\d+:\d+)");
    return std::regex_match(s, pattern);
}

std::string join(const IntVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
    return out + ")";
}

struct Options {
    std::string catalog_path;
    std::string target;
    std::vector<std::string> selectors;
    bool all = false;
    Int limit = kDefaultLimit;
    Int genus_limit = kDefaultGenusLimit;
    Int n = 0;
    std::string filter;
    std::string json_path;
};

std::vector<HermLattice> entries(const Options& o) {
    return o.catalog_path.empty() ? catalog() : load_catalog(o.catalog_path);
}

int cmd_catalog(const Options& o, std::ostream& out) {
    const auto list = entries(o);
    for (std::size_t i = 0; i < list.size(); ++i) {
        const auto& l = list[i];
        out << selector_of(list, i) << "  Q(sqrt(-" << l.ctx.m() << "))  " << l.label << "  ["
            << classify(l).name() << "]  " << transfer(l).to_string() << "\n";
    }
    return kExitOk;
}

int cmd_transfer(const Options& o, std::ostream& out) {
    const auto list = entries(o);
    const auto& l = list[find_selector(list, o.target)];
    validate(l);
    const auto basis = transfer_basis(l);
    out << "lattice " << l.label << " over Q(sqrt(-" << l.ctx.m() << "))\n";
    out << "basis  ";
    for (const auto& g : basis.generators) out << " " << g;
    out << "\nform    " << transfer(l).to_string() << "\n";
    return kExitOk;
}

QuadForm form_or_selector(const Options& o, std::string& what) {
    if (looks_like_selector(o.target)) {
        const auto list = entries(o);
        const auto& l = list[find_selector(list, o.target)];
        validate(l);
        what = o.target + " " + transfer(l).to_string();
        return transfer(l);
    }
    QuadForm q = QuadForm::parse(o.target);
    what = q.to_string();
    return q;
}

int cmd_check(const Options& o, std::ostream& out) {
    std::string what;
    const QuadForm q = form_or_selector(o, what);
    const auto filter = CongruenceFilter::parse(o.filter);
    if (!is_positive_definite(q)) throw Error(ErrorKind::NotPositiveDefinite, what + " is not positive definite");
    const auto miss = first_exception(q, o.limit, filter);
    if (miss) {
        out << what << ": first exception " << *miss << " (limit " << o.limit << ")\n";
        return kExitFailure;
    }
    out << what << ": represents every n <= " << o.limit;
    if (!o.filter.empty() && o.filter != "all") out << " with " << filter.to_string();
    out << "\n";
    return kExitOk;
}

int cmd_prove(const Options& o, std::ostream& out) {
    HardCase c;
    if (looks_like_selector(o.target)) {
        const auto list = entries(o);
        const auto& l = list[find_selector(list, o.target)];
        const auto id = classify(l);
        if (!id.hard) throw Error(ErrorKind::UnknownCase, o.target + " is a " + id.name() + " case, not a descent");
        c = *id.hard;
    } else {
        c = hard_case_from_name(o.target);
    }
    if (o.n < 1) throw Error(ErrorKind::ParseError, "n must be positive");
    const HardCaseProof& proof = ingredients(c, o.genus_limit);
    if (!proof.ingredients_hold()) {
        out << name_of(c) << ": ingredients do not hold\n";
        return kExitFailure;
    }
    const ProofTrace trace = prove(proof, o.n);
    out << name_of(c) << " = " << proof.f.to_string() << "\n";
    for (const auto& line : trace.describe()) out << "  " << line << "\n";
    const IntVec x = trace.replay(proof.f);
    out << "witness " << join(x) << " -> " << proof.f.eval(x) << "\n";
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto list = entries(o);
    if (!o.all && o.selectors.empty()) throw Error(ErrorKind::ParseError, "verify needs --all or a selector");
    std::vector<std::size_t> positions;
    if (o.all) {
        for (std::size_t i = 0; i < list.size(); ++i) positions.push_back(i);
    } else {
        for (const auto& s : o.selectors) positions.push_back(find_selector(list, s));
    }
    const Summary s = verify_selected(list, positions, o.limit, o.genus_limit);
    for (const auto& c : s.cases) {
        out << "case " << name_of(c.id) << ": " << (c.success() ? "PASS" : "FAIL") << "  proved " << c.proved << "/"
            << c.limit;
        for (const auto& r : c.proof.scalings)
            if (r.printed_holds && !*r.printed_holds)
                out << "  (printed x" << r.lambda << " matrix fails; searched " << r.used.to_string() << ")";
        if (!c.proof.genus_exceptions.empty()) {
            out << "  (genus members miss";
            for (Int n : c.proof.genus_exceptions) out << " " << n;
            out << ")";
        }
        if (c.error) out << "  " << *c.error;
        out << "\n";
    }
    for (const auto& r : s.lattices) {
        out << r.selector << " " << r.label << " [" << r.id.name() << "]: " << (r.success() ? "PASS" : "FAIL");
        if (r.first_exception) out << "  first exception " << *r.first_exception;
        if (!r.failures.empty())
            out << "  " << r.failures.size() << " failures, first n = " << r.failures.front().n << ": "
                << r.failures.front().reason;
        for (const auto& c : r.claims)
            if (!c.holds && c.essential) out << "  claim '" << c.id << "' fails " << c.detail;
        out << "\n";
    }
    out << s.passed() << "/" << s.lattices.size() << " lattices verified up to " << s.limit << "\n";
    if (!o.json_path.empty()) write_report(s, o.json_path);
    return s.success() ? kExitOk : kExitFailure;
}

int cmd_represent(const Options& o, std::ostream& out) {
    const QuadForm q = QuadForm::parse(o.target);
    const auto w = represents(q, o.n);
    if (!w) {
        out << q.to_string() << " does not represent " << o.n << "\n";
        return kExitFailure;
    }
    out << q.to_string() << " at " << join(w->coords) << " = " << o.n << "\n";
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Universality certificates for binary Hermitian lattices", "hermu"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--catalog", o.catalog_path, "catalog file replacing the built-in table");

    auto* catalog_cmd = app.add_subcommand("catalog", "list the catalog with case assignments");
    auto* transfer_cmd = app.add_subcommand("transfer", "transfer form of a lattice");
    transfer_cmd->add_option("selector", o.target, "m:index")->required();
    auto* check_cmd = app.add_subcommand("check", "first exception of a form or lattice");
    check_cmd->add_option("form", o.target, "polynomial or m:index")->required();
    check_cmd->add_option("--limit", o.limit, "largest n checked")->check(CLI::PositiveNumber);
    check_cmd->add_option("--filter", o.filter, "congruence filter, e.g. mod=3:0,1;notdiv=7");
    auto* prove_cmd = app.add_subcommand("prove", "replay the descent for one n");
    prove_cmd->add_option("case", o.target, "f72 f73 f11 f15 f19 f23 f31 or m:index")->required();
    prove_cmd->add_option("n", o.n, "positive integer")->required();
    prove_cmd->add_option("--genus-limit", o.genus_limit, "bound of the genus scans")->check(CLI::PositiveNumber);
    auto* verify_cmd = app.add_subcommand("verify", "verify lattices and write the report");
    verify_cmd->add_flag("--all", o.all, "every catalog entry");
    verify_cmd->add_option("selectors", o.selectors, "m:index");
    verify_cmd->add_option("--limit", o.limit, "largest n proved")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--genus-limit", o.genus_limit, "bound of the genus scans")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--json", o.json_path, "report path");
    auto* represent_cmd = app.add_subcommand("represent", "lexicographically first witness");
    represent_cmd->add_option("form", o.target, "polynomial")->required();
    represent_cmd->add_option("n", o.n, "integer")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*catalog_cmd) return cmd_catalog(o, out);
        if (*transfer_cmd) return cmd_transfer(o, out);
        if (*check_cmd) return cmd_check(o, out);
        if (*prove_cmd) return cmd_prove(o, out);
        if (*verify_cmd) return cmd_verify(o, out);
        if (*represent_cmd) return cmd_represent(o, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << " at position " << e.position() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::TraceFailed:
            case ErrorKind::IngredientFailed:
            case ErrorKind::SearchExhausted:
            case ErrorKind::MatchFailed: return kExitFailure;
            default: return kExitUsage;
        }
    }
    return kExitUsage;
}

int main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace hermu::cli
