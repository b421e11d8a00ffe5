#include <map>

#include "doctest.h"
#include "hermu/prover.hpp"
#include "oracle.hpp"

using namespace hermu;

namespace {

const HermLattice& entry(std::string_view selector) { return catalog()[find_selector(catalog(), selector)]; }

Int max_abs(const IntMatrix& m) {
    Int best = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) best = std::max(best, m(i, j) < 0 ? -m(i, j) : m(i, j));
    return best;
}

const Claim* find_claim(const std::vector<Claim>& claims, std::string_view id) {
    for (const auto& c : claims)
        if (c.id == id) return &c;
    return nullptr;
}

const SubstitutionRecord& scaling(const HardCaseProof& p, Int lambda) {
    for (const auto& s : p.scalings)
        if (s.lambda == lambda) return s;
    FAIL("no scaling by " << lambda);
    return p.scalings.front();
}

}  // namespace

TEST_CASE("every catalog lattice has exactly one case") {
    std::map<Strategy, int> count;
    for (const auto& l : catalog()) ++count[classify(l).strategy];
    CHECK(count[Strategy::Hard] == 9);
    CHECK(count[Strategy::Diagonal] == 11);
    CHECK(count[Strategy::Sublattice] == 3);
    CHECK(count[Strategy::OneClassGenus] == 2);
    CHECK(count[Strategy::DirectScan] == 0);

    CHECK(classify(entry("23:2")).hard == HardCase::F23);
    CHECK(classify(entry("19:1")).hard == HardCase::F19);
    const HermLattice corrupted{FieldContext::make(1), {Unary{1}, Unary{4}}, "<1,4>"};
    CHECK(classify(corrupted).strategy == Strategy::DirectScan);
}

TEST_CASE("case names") {
    for (HardCase c : kHardCases) CHECK(hard_case_from_name(name_of(c)) == c);
    CHECK(name_of(HardCase::F31) == "f31");
    CHECK_THROWS_AS(hard_case_from_name("f29"), Error);
}

TEST_CASE("prove(f72, 14) is a base case") {
    const ProofTrace t = prove(HardCase::F72, 14);
    REQUIRE(t.steps.size() == 1);
    CHECK(std::holds_alternative<BaseCase>(t.steps[0]));
    const QuadForm f = expected_form(PrintedForm::F72);
    CHECK(f.eval(t.replay(f)) == 14);
}

TEST_CASE("prove(f11, 11) scales a trace for 1") {
    const ProofTrace t = prove(HardCase::F11, 11);
    REQUIRE(t.steps.size() == 2);
    CHECK(std::holds_alternative<GenusMemberStep>(t.steps[0]));
    REQUIRE(std::holds_alternative<ScaleStep>(t.steps[1]));
    CHECK(std::get<ScaleStep>(t.steps[1]).lambda == 11);
    CHECK(t.values == std::vector<Int>{1, 11});
    const QuadForm f = expected_form(PrintedForm::F11);
    CHECK(f.eval(t.replay(f)) == 11);
}

TEST_CASE("prove(f19, 41) shifts by 38") {
    const ProofTrace t = prove(HardCase::F19, 41);
    REQUIRE(t.steps.size() == 1);
    REQUIRE(std::holds_alternative<GenusMemberStep>(t.steps[0]));
    const auto& g = std::get<GenusMemberStep>(t.steps[0]);
    CHECK(g.shift == 38);
    CHECK(g.w == 1);
    const auto& proof = ingredients(HardCase::F19);
    CHECK(proof.members[g.member].form.eval(g.ternary.coords) == 3);
    const QuadForm f = expected_form(PrintedForm::F19);
    CHECK(f.eval(t.replay(f)) == 41);
}

TEST_CASE("prove(f23, n) follows n = 2^r 23^s n'") {
    const QuadForm f = expected_form(PrintedForm::F23);
    // 2 * 23 * 27: two scalings, then 27 = 4 + 23 through the shift
    const ProofTrace t = prove(HardCase::F23, 2 * 23 * 27);
    REQUIRE(t.steps.size() == 3);
    const auto& g = std::get<GenusMemberStep>(t.steps[0]);
    CHECK(g.w == 1);
    CHECK(g.shift == 23);
    CHECK(t.values == std::vector<Int>{27, 27 * 23, 2 * 23 * 27});
    CHECK(f.eval(t.replay(f)) == 2 * 23 * 27);
}

TEST_CASE("ingredients") {
    const auto& f15 = ingredients(HardCase::F15);
    CHECK(f15.ingredients_hold());
    const auto& s5 = scaling(f15, 5);
    CHECK(s5.printed_holds == std::optional<bool>(true));
    CHECK(s5.used == *s5.printed);

    for (HardCase c : {HardCase::F23, HardCase::F31}) {
        const auto& p = ingredients(c);
        const auto& s2 = scaling(p, 2);
        CHECK(s2.printed_holds == std::optional<bool>(false));
        CHECK(s2.source == "search");
        CHECK(substitution_check(p.f, s2.used, 2));
        CHECK(max_abs(s2.used) <= kDefaultSearchBound);
        CHECK(p.ingredients_hold());
    }

    // the members of g embed with small entries
    const QuadForm g = QuadForm::parse("x^2+2y^2+2z^2+xy");
    for (const char* member : {"x^2+9y^2+15z^2+6yz", "3x^2+6y^2+7z^2"}) {
        const Substitution t = subform_search(g, QuadForm::parse(member), 4);
        CHECK(max_abs(t) <= 4);
    }

    for (HardCase c : kHardCases) {
        const auto& p = ingredients(c);
        CHECK_MESSAGE(p.ingredients_hold(), name_of(c));
        for (const auto& m : p.members) {
            // f(E y + w s) = g_i(y) + k w^2 for the stored embedding
            QuadForm target = m.form;
            Substitution e = m.embedding;
            if (!p.shift_column.empty()) {
                target = m.form.direct_sum(QuadForm::diagonal({p.shift}));
                e = Substitution(4, 4);
                e.place(m.embedding, 0, 0);
                for (std::size_t i = 0; i < 4; ++i) e(i, 3) = p.shift_column[i];
            }
            CHECK(subform_check(p.f, e, target));
        }
    }
}

TEST_CASE("genus-consequence scans") {
    // members of the f23 genus miss 5 and nothing else up to 5000 (box search
    // oracle); 5 lies in the base table
    const auto& f23 = ingredients(HardCase::F23);
    CHECK(f23.genus_exceptions == std::vector<Int>{5});
    CHECK_FALSE(find_claim(f23.claims, "genus")->holds);
    CHECK(find_claim(f23.claims, "genus-gaps")->holds);
    for (HardCase c : {HardCase::F72, HardCase::F73, HardCase::F11, HardCase::F15, HardCase::F19, HardCase::F31})
        CHECK_MESSAGE(ingredients(c).genus_exceptions.empty(), name_of(c));
}

TEST_CASE("traces replay and agree with the enumerator") {
    for (HardCase c : kHardCases) {
        const auto& p = ingredients(c);
        const RepSet reach = represented_set(p.f, 400);
        for (Int n = 1; n <= 400; ++n) {
            const ProofTrace t = prove(p, n);
            CHECK(p.f.eval(t.replay(p.f)) == n);
            CHECK(reach.contains(n));
            // base cases never exceed the printed bound
            if (const auto* b = std::get_if<BaseCase>(&t.steps[0])) CHECK(b->n <= p.base_bound);
        }
    }
}

TEST_CASE("replay rejects a tampered trace") {
    ProofTrace t = prove(HardCase::F11, 11);
    t.values[1] = 12;
    t.target = 12;
    try {
        t.replay(expected_form(PrintedForm::F11));
        FAIL("tampered trace accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TraceFailed);
    }
    CHECK_THROWS_AS(prove(HardCase::F11, 0), Error);
}

TEST_CASE("verify_case") {
    const HardCaseReport r = verify_case(HardCase::F31, 500);
    CHECK(r.success());
    CHECK(r.proved == 500);
}

TEST_CASE("verify_lattice strategies") {
    const CaseReport sub = verify_lattice(entry("3:1"), "3:1", 300);
    CHECK(sub.success());
    CHECK(find_claim(sub.claims, "subform")->holds);

    const CaseReport one = verify_lattice(entry("7:1"), "7:1", 300);
    CHECK(one.success());
    REQUIRE(one.match);

    const CaseReport hard = verify_lattice(entry("23:2"), "23:2", 300);
    CHECK(hard.success());
    REQUIRE(hard.match);
    CHECK(hard.match->kind == MatchReport::Kind::SignedPermutation);
}

TEST_CASE("negative control: <1,4> over Q(sqrt(-1))") {
    const HermLattice corrupted{FieldContext::make(1), {Unary{1}, Unary{4}}, "<1,4>"};
    const CaseReport r = verify_lattice(corrupted, "1:4", 100);
    CHECK_FALSE(r.success());
    CHECK(r.first_exception == 3);
    CHECK(oracle::box_represents(r.transfer_form, 3) == std::nullopt);
    REQUIRE_FALSE(r.failures.empty());
    CHECK(r.failures.front().n == 3);
}

TEST_CASE("verify_all(15)") {
    const Summary s = verify_all(catalog(), 15);
    CHECK(s.passed() == 25);
    CHECK(s.success());
    for (const auto& r : s.lattices) CHECK(r.proved == 15);
}
