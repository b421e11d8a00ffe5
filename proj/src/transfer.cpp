#include "hermu/transfer.hpp"

#include <array>

namespace hermu {

TransferBasis transfer_basis(const HermLattice& lattice) {
    TransferBasis basis;
    std::size_t v = 0;
    std::size_t u = 0;
    for (const auto& b : lattice.blocks) {
        if (std::holds_alternative<Unary>(b)) {
            ++v;
            basis.generators.push_back("v" + std::to_string(v));
            basis.generators.push_back("w*v" + std::to_string(v));
        } else {
            basis.generators.push_back("u" + std::to_string(++u));
            basis.generators.push_back("u" + std::to_string(++u));
        }
    }
    return basis;
}

QuadForm transfer(const HermLattice& lattice) {
    validate(lattice);
    const FieldContext& ctx = lattice.ctx;
    QuadForm q(2 * lattice.rank());
    for (std::size_t i = 0; i < lattice.blocks.size(); ++i) {
        const std::size_t x = 2 * i;
        const std::size_t y = 2 * i + 1;
        if (const auto* u = std::get_if<Unary>(&lattice.blocks[i])) {
            q.set_coeff(x, x, u->d);
            q.set_coeff(x, y, checked::mul(u->d, ctx.trace_omega()));
            q.set_coeff(y, y, checked::mul(u->d, ctx.norm_omega()));
        } else {
            const auto& f = std::get<FormalPair>(lattice.blocks[i]);
            q.set_coeff(x, x, f.a);
            q.set_coeff(x, y, trace(f.gamma));
            q.set_coeff(y, y, f.c);
        }
    }
    return q;
}

namespace {

struct PrintedEntry {
    PrintedForm form;
    std::string_view name;
    std::string_view text;
};

constexpr std::array<PrintedEntry, 11> kPrinted{{
    {PrintedForm::F72, "f72", "x^2+2y^2+2z^2+4w^2+xy+2zw"},
    {PrintedForm::F73, "f73", "x^2+2y^2+3z^2+6w^2+xy+3zw"},
    {PrintedForm::F11, "f11", "x^2+y^2+3z^2+3w^2+xz+yw"},
    {PrintedForm::F15, "f15", "x^2+2y^2+2z^2+4w^2+xw+yz"},
    {PrintedForm::F19, "f19", "x^2+2y^2+5z^2+10w^2+xz+2yw"},
    {PrintedForm::F23, "f23", "x^2+2y^2+3z^2+6w^2+xw+yz"},
    {PrintedForm::F31, "f31", "x^2+2y^2+4z^2+8w^2+xw+yz"},
    {PrintedForm::Diag6, "d6", "x^2+2y^2+3z^2+6w^2"},
    {PrintedForm::Diag10, "d10", "x^2+2y^2+5z^2+10w^2"},
    {PrintedForm::OneClass7, "c7", "x^2+y^2+2z^2+2w^2+xz+yw"},
    {PrintedForm::OneClass11, "c11", "x^2+2y^2+3z^2+6w^2+xz+2yw"},
}};

const PrintedEntry& entry(PrintedForm form) {
    for (const auto& e : kPrinted)
        if (e.form == form) return e;
    throw Error(ErrorKind::UnknownCase, "printed form");
}

}  // namespace

std::string_view name_of(PrintedForm form) { return entry(form).name; }

PrintedForm printed_form_from_name(std::string_view name) {
    for (const auto& e : kPrinted)
        if (e.name == name) return e.form;
    throw Error(ErrorKind::UnknownCase, "no printed form named '" + std::string(name) + "'");
}

QuadForm expected_form(PrintedForm form) { return QuadForm::parse(entry(form).text); }

const std::vector<PrintedCorrespondence>& printed_correspondences() {
    static const std::vector<PrintedCorrespondence> table{
        {PrintedForm::F72, {"7:2"}},          {PrintedForm::F73, {"7:3"}},
        {PrintedForm::F11, {"11:1"}},         {PrintedForm::F15, {"15:1"}},
        {PrintedForm::F19, {"19:1"}},         {PrintedForm::F23, {"23:1", "23:2"}},
        {PrintedForm::F31, {"31:1", "31:2"}}, {PrintedForm::Diag6, {"6:1"}},
        {PrintedForm::Diag10, {"10:1"}},      {PrintedForm::OneClass7, {"7:1"}},
        {PrintedForm::OneClass11, {"11:2"}},
    };
    return table;
}

std::optional<Int> first_repset_difference(const QuadForm& a, const QuadForm& b, Int limit) {
    const RepSet ra = represented_set(a, limit);
    const RepSet rb = represented_set(b, limit);
    for (Int n = 1; n <= limit; ++n)
        if (ra.contains(n) != rb.contains(n)) return n;
    return std::nullopt;
}

MatchReport match_transfer(const HermLattice& lattice, const QuadForm& expected, Int limit) {
    const QuadForm q = transfer(lattice);
    if (auto p = signed_permutation_match(expected, q)) return MatchReport{MatchReport::Kind::SignedPermutation, p, 0};
    if (auto diff = first_repset_difference(q, expected, limit)) {
        throw Error(ErrorKind::MatchFailed, "transfer " + q.to_string() + " and " + expected.to_string() +
                                                " differ at n = " + std::to_string(*diff));
    }
    return MatchReport{MatchReport::Kind::RepresentedSet, std::nullopt, limit};
}

MatchReport match_transfer(const HermLattice& lattice, PrintedForm form, Int limit) {
    return match_transfer(lattice, expected_form(form), limit);
}

}  // namespace hermu
