#pragma once

// Executable universality certificates. Each of the seven quaternary cases is
// a descent: scale out the case's primes, land n on a ternary genus member
// (possibly after subtracting k w^2), or fall back to a finite base table.
// Every step is a concrete substitution, so a trace replays to a witness.

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hermu/hermitian.hpp"
#include "hermu/qform.hpp"
#include "hermu/search.hpp"
#include "hermu/transfer.hpp"

namespace hermu {

inline constexpr Int kDefaultLimit = 2000;
inline constexpr Int kDefaultGenusLimit = 5000;

enum class HardCase { F72, F73, F11, F15, F19, F23, F31 };

inline constexpr HardCase kHardCases[] = {HardCase::F72, HardCase::F73, HardCase::F11, HardCase::F15,
                                          HardCase::F19, HardCase::F23, HardCase::F31};

std::string_view name_of(HardCase c);
/// "f72", ..., "f31"; throws UnknownCase.
HardCase hard_case_from_name(std::string_view name);
PrintedForm printed_form_of(HardCase c);

enum class Strategy { Hard, Diagonal, Sublattice, OneClassGenus, DirectScan };

std::string_view name_of(Strategy s);

struct CaseId {
    Strategy strategy;
    std::optional<HardCase> hard;
    /// Sublattice cases: the universal diagonal form inside the transfer.
    std::optional<QuadForm> subform;
    /// Printed form the transfer is compared against, if any.
    std::optional<PrintedForm> printed;

    std::string name() const;
};

/// Lattices are classified by field and block structure. Anything not in the
/// table is a DirectScan case.
CaseId classify(const HermLattice& lattice);

// --- proof traces -----------------------------------------------------------

struct BaseCase {
    Int n;
    Witness witness;
};

struct ScaleStep {
    Int lambda;
    Substitution substitution;
};

/// x = embedding * y + w * shift_column, with g_member(y) = n - k w^2.
struct GenusMemberStep {
    std::size_t member;
    Witness ternary;
    Substitution embedding;
    Int shift = 0;
    Int w = 0;
    IntVec shift_column;
};

/// x = embedding * y with y a witness of the universal subform.
struct SublatticeStep {
    Witness sub;
    Substitution embedding;
};

using ProofStep = std::variant<BaseCase, ScaleStep, GenusMemberStep, SublatticeStep>;

struct ProofTrace {
    Int target = 0;
    /// Innermost step first; every step after the first is a ScaleStep.
    std::vector<ProofStep> steps;
    /// Value of the running witness after each step.
    std::vector<Int> values;

    /// Rebuilds the witness, checking eval(f, x) against `values` at every
    /// step. Throws TraceFailed on any mismatch.
    IntVec replay(const QuadForm& f) const;
    std::vector<std::string> describe() const;
};

// --- ingredients ------------------------------------------------------------

struct Claim {
    std::string id;
    std::string statement;
    bool holds = false;
    std::string detail;
    /// Non-essential claims are recorded but do not decide the case.
    bool essential = true;
};

/// A scaling identity f(S x) = lambda f(x): the printed matrix, if the case
/// has one, and the matrix the prover actually uses.
struct SubstitutionRecord {
    Int lambda;
    std::string source;
    std::optional<Substitution> printed;
    std::optional<bool> printed_holds;
    Substitution used;
};

struct ShiftRule {
    CongruenceFilter when;
    Int w;
};

struct GenusMember {
    QuadForm form;
    /// f(embedding y + w shift_column) = form(y) + shift w^2.
    Substitution embedding;
};

/// Ingredients of one quaternary case after verification.
struct HardCaseProof {
    HardCase id{};
    QuadForm f;
    std::optional<QuadForm> intermediate;
    Int shift = 0;
    IntVec shift_column;
    std::vector<ShiftRule> shift_rules;
    std::vector<GenusMember> members;
    CongruenceFilter genus_filter;
    std::vector<SubstitutionRecord> scalings;
    Int base_bound = 0;
    Int genus_limit = 0;
    /// n <= genus_limit passing the filter that no member represents.
    std::vector<Int> genus_exceptions;
    std::vector<Claim> claims;

    bool ingredients_hold() const;
};

/// Establishes every ingredient of the case. Throws IngredientFailed when a
/// required object (embedding, shift decomposition, scaling) cannot be built;
/// scan-type claims are recorded with holds = false instead.
HardCaseProof verify_ingredients(HardCase c, Int genus_limit = kDefaultGenusLimit);

/// Cached verify_ingredients, safe to call concurrently.
const HardCaseProof& ingredients(HardCase c, Int genus_limit = kDefaultGenusLimit);

/// Trace on the printed form of the case. Throws TraceFailed.
ProofTrace prove(const HardCaseProof& proof, Int n);
ProofTrace prove(HardCase c, Int n);

// --- reports ----------------------------------------------------------------

struct Failure {
    Int n;
    std::string reason;
};

struct CaseReport {
    std::string selector;
    std::string label;
    Int m = 0;
    std::string blocks;
    CaseId id;
    QuadForm transfer_form;
    std::optional<MatchReport> match;
    std::vector<Claim> claims;
    Int limit = 0;
    Int proved = 0;
    std::vector<Failure> failures;
    std::optional<Int> first_exception;
    std::string note;
    std::chrono::duration<double> elapsed{};

    bool success() const;
};

/// Ingredients and outcomes of one quaternary case on its printed form.
struct HardCaseReport {
    HardCase id{};
    HardCaseProof proof;
    /// Set when the ingredients could not be built.
    std::optional<std::string> error;
    Int limit = 0;
    Int proved = 0;
    std::vector<Failure> failures;
    std::chrono::duration<double> elapsed{};

    bool success() const;
};

HardCaseReport verify_case(HardCase c, Int limit, Int genus_limit = kDefaultGenusLimit);

/// Proves every n <= limit for the lattice through its case, checks each
/// witness on the transfer form, and runs the independent first_exception scan.
CaseReport verify_lattice(const HermLattice& lattice, std::string selector, Int limit,
                          Int genus_limit = kDefaultGenusLimit);

struct Summary {
    Int limit = 0;
    Int genus_limit = 0;
    std::vector<CaseReport> lattices;
    std::vector<HardCaseReport> cases;
    std::chrono::duration<double> elapsed{};

    std::size_t passed() const;
    bool success() const;
};

/// All entries concurrently; results are ordered as the input.
Summary verify_all(const std::vector<HermLattice>& entries, Int limit, Int genus_limit = kDefaultGenusLimit);

/// Subset of entries chosen by position.
Summary verify_selected(const std::vector<HermLattice>& entries, const std::vector<std::size_t>& positions,
                        Int limit, Int genus_limit = kDefaultGenusLimit);

}  // namespace hermu
