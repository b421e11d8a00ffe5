#include <random>

#include "doctest.h"
#include "hermu/ring.hpp"

using namespace hermu;

TEST_CASE("make_context picks the w convention from m mod 4") {
    const auto g = FieldContext::make(1);
    CHECK(g.omega_kind() == OmegaKind::SqrtM);
    CHECK(g.trace_omega() == 0);
    CHECK(g.norm_omega() == 1);

    const auto f7 = FieldContext::make(7);
    CHECK(f7.omega_kind() == OmegaKind::HalfPlus);
    CHECK(f7.trace_omega() == 1);
    CHECK(f7.norm_omega() == 2);

    const auto f15 = FieldContext::make(15);
    CHECK(f15.norm_omega() == 4);
    CHECK(FieldContext::make(10).omega_kind() == OmegaKind::SqrtM);
}

TEST_CASE("make_context rejects non-squarefree and non-positive m") {
    for (Int m : {12, 4, 9, 18, 0, -3}) {
        try {
            FieldContext::make(m);
            FAIL("accepted m = " << m);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InvalidField);
        }
    }
}

TEST_CASE("w squared") {
    const auto f7 = FieldContext::make(7);
    CHECK(QuadInt::omega(f7) * QuadInt::omega(f7) == QuadInt(f7, -2, 1));
    const auto f5 = FieldContext::make(5);
    CHECK(QuadInt::omega(f5) * QuadInt::omega(f5) == QuadInt(f5, -5, 0));
}

TEST_CASE("norm factorizations of m for m = 3 mod 4") {
    for (Int m : {7, 11, 19, 23, 31}) {
        const auto ctx = FieldContext::make(m);
        const QuadInt pi(ctx, -1, 2);
        CHECK(pi * conj(pi) == QuadInt(ctx, m, 0));
        CHECK(norm(pi) == m);
    }
}

TEST_CASE("conjugation") {
    const auto f6 = FieldContext::make(6);
    CHECK(conj(QuadInt::omega(f6)) == QuadInt(f6, 0, -1));
    const auto f7 = FieldContext::make(7);
    CHECK(conj(QuadInt::omega(f7)) == QuadInt(f7, 1, -1));
    CHECK(conj(QuadInt(f7, -1, 2)) == QuadInt(f7, 1, -2));
}

TEST_CASE("trace and norm") {
    const auto f6 = FieldContext::make(6);
    CHECK(trace(QuadInt::omega(f6)) == 0);
    CHECK(norm(QuadInt::omega(f6)) == 6);
    const auto f15 = FieldContext::make(15);
    CHECK(trace(QuadInt::omega(f15)) == 1);
    CHECK(norm(QuadInt::omega(f15)) == 4);
    CHECK(norm(QuadInt(FieldContext::make(23), -1, 2)) == 23);
}

TEST_CASE("sqrt_minus_m") {
    CHECK(sqrt_minus_m(FieldContext::make(5)) == QuadInt(FieldContext::make(5), 0, 1));
    for (Int m : {11, 31}) {
        const auto ctx = FieldContext::make(m);
        CHECK(sqrt_minus_m(ctx) == QuadInt(ctx, -1, 2));
        CHECK(norm(sqrt_minus_m(ctx)) == m);
    }
}

TEST_CASE("mixing fields is rejected") {
    const QuadInt a(FieldContext::make(5), 1, 1);
    const QuadInt b(FieldContext::make(7), 1, 1);
    CHECK_THROWS_AS(a + b, Error);
    try {
        (void)(a * b);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ContextMismatch);
    }
}

TEST_CASE("overflow is reported, never wrapped") {
    const auto ctx = FieldContext::make(1);
    const QuadInt big(ctx, Int{1} << 40, 1);
    try {
        (void)(big * big * big);
        FAIL("no overflow reported");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Overflow);
    }
}

TEST_CASE("ring identities on random elements") {
    std::mt19937_64 rng(20261019);
    std::uniform_int_distribution<Int> coord(-1000, 1000);
    for (Int m : {1, 2, 3, 5, 6, 7, 10, 11, 15, 19, 23, 31}) {
        const auto ctx = FieldContext::make(m);
        const QuadInt root = sqrt_minus_m(ctx);
        CHECK(root * root == QuadInt(ctx, -m, 0));
        CHECK(trace(root) == 0);
        for (int trial = 0; trial < 200; ++trial) {
            const QuadInt x(ctx, coord(rng), coord(rng));
            const QuadInt y(ctx, coord(rng), coord(rng));
            CHECK(norm(x) >= 0);
            CHECK((norm(x) == 0) == x.is_zero());
            CHECK(norm(x * y) == norm(x) * norm(y));
            CHECK(x * conj(x) == QuadInt(ctx, norm(x), 0));
            CHECK(x + conj(x) == QuadInt(ctx, trace(x), 0));
            CHECK(trace(x) == trace(conj(x)));
            CHECK(conj(conj(x)) == x);
            CHECK(conj(x * y) == conj(x) * conj(y));
            CHECK(conj(x + y) == conj(x) + conj(y));
            CHECK((x - y) + y == x);
        }
    }
}
