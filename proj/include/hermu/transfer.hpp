#pragma once

// Hermitian -> quadratic transfer: the lattice viewed as a Z-module of twice
// the rank with Q(x) = H(x) (polarization B = Tr H / 2).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hermu/hermitian.hpp"
#include "hermu/qform.hpp"
#include "hermu/search.hpp"

namespace hermu {

/// Z-basis used for the transfer: (v_i, w v_i) per unary block and the two
/// formal generators (u_1, u_2) per formal block.
struct TransferBasis {
    std::vector<std::string> generators;
};

TransferBasis transfer_basis(const HermLattice& lattice);

/// Unary <d>:            d (x^2 + t xy + n y^2)    (t, n = trace and norm of w)
/// FormalPair(a, g, c):  a z^2 + Tr(g) z w + c w^2
QuadForm transfer(const HermLattice& lattice);

/// Quaternary forms printed alongside the universality table.
enum class PrintedForm { F72, F73, F11, F15, F19, F23, F31, Diag6, Diag10, OneClass7, OneClass11 };

std::string_view name_of(PrintedForm form);
/// Inverse of name_of ("f72", "d6", "c7", ...); throws UnknownCase.
PrintedForm printed_form_from_name(std::string_view name);
QuadForm expected_form(PrintedForm form);

/// Every printed form with the catalog selectors of the lattices it belongs to.
struct PrintedCorrespondence {
    PrintedForm form;
    std::vector<std::string> selectors;
};
const std::vector<PrintedCorrespondence>& printed_correspondences();

struct MatchReport {
    enum class Kind { SignedPermutation, RepresentedSet };

    Kind kind;
    /// For SignedPermutation: P with expected(P x) = transfer(x).
    std::optional<Substitution> permutation;
    /// Limit used for the represented-set comparison (0 if not needed).
    Int limit = 0;

    std::string_view kind_name() const {
        return kind == Kind::SignedPermutation ? "signed-permutation" : "represented-set";
    }
};

/// Signed-permutation equality first, then represented sets up to `limit`.
/// Throws MatchFailed naming the first integer on which the sets differ.
MatchReport match_transfer(const HermLattice& lattice, const QuadForm& expected, Int limit);
MatchReport match_transfer(const HermLattice& lattice, PrintedForm form, Int limit);

/// Smallest n <= limit represented by exactly one of the forms.
std::optional<Int> first_repset_difference(const QuadForm& a, const QuadForm& b, Int limit);

}  // namespace hermu
