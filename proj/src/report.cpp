#include "hermu/report.hpp"

#include <fstream>

namespace hermu {

namespace {

using nlohmann::json;

json matrix_json(const IntMatrix& m) { return m.to_rows(); }

json failures_json(const std::vector<Failure>& failures) {
    json out = json::array();
    for (const auto& f : failures) out.push_back({{"n", f.n}, {"reason", f.reason}});
    return out;
}

json optional_int(const std::optional<Int>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json claim_json(const Claim& c) {
    return {{"id", c.id}, {"claim", c.statement}, {"holds", c.holds}, {"essential", c.essential}, {"detail", c.detail}};
}

json case_json(const HardCaseReport& r) {
    const HardCaseProof& p = r.proof;
    json members = json::array();
    for (std::size_t i = 0; i < p.members.size(); ++i)
        members.push_back({{"name", "g" + std::to_string(i + 1)},
                           {"form", p.members[i].form.to_string()},
                           {"embedding", matrix_json(p.members[i].embedding)}});
    json ingredients = json::array();
    for (const auto& c : p.claims) ingredients.push_back(claim_json(c));
    json substitutions = json::array();
    for (const auto& s : p.scalings) {
        substitutions.push_back({{"lambda", s.lambda},
                                 {"source", s.source},
                                 {"printed", s.printed ? matrix_json(*s.printed) : json(nullptr)},
                                 {"printed_holds", s.printed_holds ? json(*s.printed_holds) : json(nullptr)},
                                 {"used", matrix_json(s.used)}});
    }
    return {{"name", name_of(r.id)},
            {"form", p.f.to_string()},
            {"intermediate", p.intermediate ? json(p.intermediate->to_string()) : json(nullptr)},
            {"shift", p.shift},
            {"shift_column", p.shift_column},
            {"genus_filter", p.genus_filter.to_string()},
            {"members", members},
            {"base_bound", p.base_bound},
            {"genus_exceptions", p.genus_exceptions},
            {"genus_limit", p.genus_limit},
            {"ingredients", ingredients},
            {"substitutions", substitutions},
            {"limit", r.limit},
            {"proved", r.proved},
            {"failures", failures_json(r.failures)},
            {"error", r.error ? json(*r.error) : json(nullptr)},
            {"success", r.success()}};
}

json lattice_json(const CaseReport& r) {
    json match = nullptr;
    if (r.match) {
        match = {{"kind", r.match->kind_name()},
                 {"permutation", r.match->permutation ? matrix_json(*r.match->permutation) : json(nullptr)},
                 {"limit", r.match->limit}};
    }
    json claims = json::array();
    for (const auto& c : r.claims) claims.push_back(claim_json(c));
    return {{"selector", r.selector},
            {"m", r.m},
            {"blocks", r.blocks},
            {"label", r.label},
            {"case", r.id.name()},
            {"strategy", name_of(r.id.strategy)},
            {"transfer", r.transfer_form.nvars() ? json(r.transfer_form.to_string()) : json(nullptr)},
            {"printed", r.id.printed ? json(name_of(*r.id.printed)) : json(nullptr)},
            {"match", match},
            {"claims", claims},
            {"limit", r.limit},
            {"proved", r.proved},
            {"first_exception", optional_int(r.first_exception)},
            {"failures", failures_json(r.failures)},
            {"note", r.note},
            {"success", r.success()}};
}

json report_json(const Summary& s, bool with_timing) {
    json lattices = json::array();
    for (const auto& r : s.lattices) lattices.push_back(lattice_json(r));
    json cases = json::array();
    for (const auto& c : s.cases) cases.push_back(case_json(c));
    std::size_t cases_passed = 0;
    for (const auto& c : s.cases) cases_passed += c.success() ? 1 : 0;

    json doc = {{"schema", kReportSchema},
                {"limit", s.limit},
                {"genus_limit", s.genus_limit},
                {"summary",
                 {{"lattices", s.lattices.size()},
                  {"passed", s.passed()},
                  {"cases", s.cases.size()},
                  {"cases_passed", cases_passed},
                  {"success", s.success()}}},
                {"lattices", lattices},
                {"cases", cases}};
    if (with_timing) {
        json per_lattice = json::object();
        for (const auto& r : s.lattices) per_lattice[r.selector] = r.elapsed.count();
        json per_case = json::object();
        for (const auto& c : s.cases) per_case[std::string(name_of(c.id))] = c.elapsed.count();
        doc["timing"] = {{"total_seconds", s.elapsed.count()}, {"lattices", per_lattice}, {"cases", per_case}};
    }
    return doc;
}

std::string render_report(const Summary& s, bool with_timing) { return report_json(s, with_timing).dump(2) + "\n"; }

void write_report(const Summary& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write report to " + path);
    out << render_report(s);
}

}  // namespace hermu
