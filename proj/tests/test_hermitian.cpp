#include <map>

#include "doctest.h"
#include "hermu/hermitian.hpp"
#include "hermu/search.hpp"
#include "hermu/transfer.hpp"
#include "oracle.hpp"

using namespace hermu;

namespace {

const HermLattice& entry(std::string_view selector) { return catalog()[find_selector(catalog(), selector)]; }

HermLattice diag_lattice(Int m, Int d1, Int d2) { return {FieldContext::make(m), {Unary{d1}, Unary{d2}}, "test"}; }

ErrorKind validate_kind(const HermLattice& l) {
    try {
        validate(l);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("validate accepted " << l.label);
    return ErrorKind::ParseError;
}

/// H(phi(v)) = lambda H(v) on O-coefficients, and the transfer matrix moves
/// coordinates the same way, for every v in a coordinate box.
void check_map_on_box(const HermLattice& l, const LatticeMap& map, Int radius) {
    const std::vector<Int> box(2 * l.rank(), radius);
    std::size_t bad = 0;
    oracle::for_each_in_box(box, [&](const IntVec& coords) {
        const auto v = from_transfer_coords(l, coords);
        const auto image = map.apply(v);
        if (hermitian_value(l, image) != map.lambda * hermitian_value(l, v)) ++bad;
        if (to_transfer_coords(l, image) != map.transfer_substitution.apply(coords)) ++bad;
    });
    CHECK_MESSAGE(bad == 0, l.label << " over Q(sqrt(-" << l.ctx.m() << ")): " << map.description);
}

}  // namespace

TEST_CASE("catalog has the 25 lattices in table order") {
    const auto& c = catalog();
    REQUIRE(c.size() == 25);
    const auto& l19 = entry("19:1");
    CHECK(l19.ctx.m() == 19);
    CHECK(blocks_to_string(l19.blocks) == "U(1),U(2)");
    CHECK(selector_of(c, 0) == "1:1");
    CHECK(selector_of(c, 24) == "31:2");

    std::map<Int, int> per_field;
    for (const auto& l : c) {
        CHECK(l.rank() == 2);
        ++per_field[l.ctx.m()];
    }
    const std::map<Int, int> expected{{1, 3},  {2, 5},  {3, 2},  {5, 2},  {6, 1},  {7, 3},
                                      {10, 1}, {11, 2}, {15, 1}, {19, 1}, {23, 2}, {31, 2}};
    CHECK(per_field == expected);
}

TEST_CASE("every catalog entry validates") {
    for (const auto& l : catalog()) CHECK_NOTHROW(validate(l));
    const auto& f15 = std::get<FormalPair>(entry("15:1").blocks[1]);
    CHECK(f15.a * f15.c == norm(f15.gamma));
    CHECK(norm(f15.gamma) == 4);
}

TEST_CASE("validate errors") {
    const auto ctx = FieldContext::make(15);
    CHECK(validate_kind({ctx, {Unary{1}, FormalPair{2, QuadInt::omega(ctx), 3}}, "bad"}) ==
          ErrorKind::FormalBlockNotSingular);
    CHECK(validate_kind(diag_lattice(1, 1, 0)) == ErrorKind::NotPositiveDefinite);
    CHECK(validate_kind({ctx, {FormalPair{2, QuadInt(ctx, 2), 2}}, "rational gamma"}) ==
          ErrorKind::NotPositiveDefinite);
    CHECK(validate_kind({ctx, {FormalPair{2, QuadInt(FieldContext::make(7), 0, 1), 1}}, "foreign"}) ==
          ErrorKind::ContextMismatch);
    // singular but (u1, u2) not closed under w: a = 4, g = 2w in Q(sqrt(-1)), c = 1
    const auto g = FieldContext::make(1);
    CHECK(validate_kind({g, {FormalPair{4, QuadInt(g, 0, 2), 1}}, "not an O-module"}) ==
          ErrorKind::NonIntegralLattice);
}

TEST_CASE("formal Gram matrices") {
    const auto m12 = formal_gram(diag_lattice(2, 1, 2));
    REQUIRE(m12.size() == 2);
    CHECK(m12[0][0].a() == 1);
    CHECK(m12[1][1].a() == 2);
    CHECK(m12[0][1].is_zero());

    const auto& l23 = entry("23:1");
    const auto m = formal_gram(l23);
    REQUIRE(m.size() == 3);
    const auto& ctx = l23.ctx;
    CHECK(m[0][0] == QuadInt(ctx, 1));
    CHECK(m[1][1] == QuadInt(ctx, 2));
    CHECK(m[1][2] == QuadInt::omega(ctx));
    CHECK(m[2][1] == conj(QuadInt::omega(ctx)));
    CHECK(m[2][2] == QuadInt(ctx, 3));
    CHECK(m[0][1].is_zero());
    // the formal block is singular
    CHECK(m[1][1] * m[2][2] - m[1][2] * m[2][1] == QuadInt(ctx, 0));

    for (const auto& l : catalog()) {
        const auto g = formal_gram(l);
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j) CHECK(g[i][j] == conj(g[j][i]));
    }
}

TEST_CASE("w acts on formal generators by an integral matrix") {
    for (const auto& l : catalog()) {
        for (std::size_t b = 0; b < l.blocks.size(); ++b) {
            const IntMatrix w = omega_action(l, b);
            // w^2 = t w - n
            const IntMatrix w2 = w * w;
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    CHECK(w2(i, j) == l.ctx.trace_omega() * w(i, j) - (i == j ? l.ctx.norm_omega() : 0));
            if (std::holds_alternative<Unary>(l.blocks[b])) continue;
            // H(w u_k) computed on the formal Gram equals the transfer value of W e_k
            for (std::size_t k = 0; k < 2; ++k) {
                std::vector<QuadInt> coeffs(l.generator_count(), QuadInt(l.ctx));
                coeffs[1 + k] = QuadInt::omega(l.ctx);
                const IntVec coords = to_transfer_coords(l, coeffs);
                CHECK(hermitian_value(l, coeffs) == transfer(l).eval(coords));
                CHECK(coords[2] == w(0, k));
                CHECK(coords[3] == w(1, k));
            }
        }
    }
}

TEST_CASE("diagonal scaling map") {
    const auto l13 = diag_lattice(1, 1, 3);
    const auto map = diagonal_scaling_map(l13);
    CHECK(map.lambda == 3);
    const std::vector<QuadInt> v{QuadInt(l13.ctx), QuadInt(l13.ctx, 1)};
    CHECK(hermitian_value(l13, v) == 3);
    const auto image = map.apply(v);
    CHECK(image[0] == QuadInt(l13.ctx, 3));
    CHECK(image[1].is_zero());
    CHECK(hermitian_value(l13, image) == 9);

    CHECK(diagonal_scaling_map(entry("19:1")).lambda == 2);
    CHECK(diagonal_scaling_map(diag_lattice(7, 1, 1)).lambda == 1);
    try {
        diagonal_scaling_map(entry("23:1"));
        FAIL("formal block accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotDiagonal);
    }
}

TEST_CASE("multiplication by sqrt(-m)") {
    const auto& l11 = entry("11:1");
    const auto map = sqrtm_scaling_map(l11);
    CHECK(map.lambda == 11);
    const std::vector<QuadInt> v{QuadInt(l11.ctx, 1), QuadInt(l11.ctx)};
    CHECK(hermitian_value(l11, v) == 1);
    CHECK(hermitian_value(l11, map.apply(v)) == 11);
    CHECK(sqrtm_scaling_map(entry("7:2")).lambda == 7);
    CHECK(sqrtm_scaling_map(entry("1:1")).lambda == 1);
}

TEST_CASE("scale identities hold on a radius-10 box for every catalog lattice") {
    for (const auto& l : catalog()) {
        const auto q = transfer(l);
        const auto root = sqrtm_scaling_map(l);
        CHECK(substitution_check(q, root.transfer_substitution, root.lambda));
        check_map_on_box(l, root, 10);
        if (l.is_free() && std::get<Unary>(l.blocks[0]).d == 1) {
            const auto swap = diagonal_scaling_map(l);
            CHECK(substitution_check(q, swap.transfer_substitution, swap.lambda));
            check_map_on_box(l, swap, 10);
        }
    }
}

TEST_CASE("catalog text format") {
    const auto parsed = parse_catalog(builtin_catalog_text());
    REQUIRE(parsed.size() == catalog().size());
    std::string again;
    for (const auto& l : parsed) again += to_catalog_record(l) + "\n";
    const auto reparsed = parse_catalog(again);
    REQUIRE(reparsed.size() == parsed.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        CHECK(to_catalog_record(reparsed[i]) == to_catalog_record(parsed[i]));
        CHECK(reparsed[i].label == parsed[i].label);
    }

    const auto one = parse_catalog("  m = 23 ; blocks = U(1) , F( 2 ; -1 , 1 ; 3 ) ; label = x y  \n");
    REQUIRE(one.size() == 1);
    CHECK(blocks_to_string(one[0].blocks) == "U(1),F(2; -1,1; 3)");
    CHECK(one[0].label == "x y");

    CHECK_THROWS_AS(parse_catalog("m=12; blocks=U(1); label=a"), ParseError);
    CHECK_THROWS_AS(parse_catalog("m=5; blocks=V(1); label=a"), ParseError);
    CHECK_THROWS_AS(parse_catalog("m=5; blocks=U(1)"), ParseError);
    CHECK_THROWS_AS(parse_catalog("m=5; blocks=F(2; 1; 3); label=a"), ParseError);
    CHECK_THROWS_AS(find_selector(catalog(), "23:3"), Error);
}
