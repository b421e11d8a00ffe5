#pragma once

// Exact arithmetic in the ring of integers of Q(sqrt(-m)).
//
// Elements are stored over the Z-basis (1, w) where
//   w = sqrt(-m)          if m != 3 (mod 4)
//   w = (1 + sqrt(-m))/2  if m == 3 (mod 4)
// so that w^2 = trace_omega * w - norm_omega in both cases.

#include <cstdint>
#include <iosfwd>
#include <string>

#include "hermu/error.hpp"

namespace hermu {

using Int = std::int64_t;

enum class OmegaKind { SqrtM, HalfPlus };

class FieldContext {
public:
    /// Throws InvalidField unless m is positive and squarefree.
    static FieldContext make(Int m);

    Int m() const noexcept { return m_; }
    OmegaKind omega_kind() const noexcept { return kind_; }
    Int trace_omega() const noexcept { return kind_ == OmegaKind::HalfPlus ? 1 : 0; }
    Int norm_omega() const noexcept { return kind_ == OmegaKind::HalfPlus ? (1 + m_) / 4 : m_; }

    friend bool operator==(const FieldContext&, const FieldContext&) = default;

private:
    FieldContext(Int m, OmegaKind kind) : m_(m), kind_(kind) {}

    Int m_;
    OmegaKind kind_;
};

bool is_squarefree(Int m) noexcept;

/// a + b*w in a fixed field. Immutable value; every binary operation checks
/// that both operands live in the same field.
class QuadInt {
public:
    QuadInt(const FieldContext& ctx, Int a = 0, Int b = 0) : ctx_(ctx), a_(a), b_(b) {}

    const FieldContext& context() const noexcept { return ctx_; }
    Int a() const noexcept { return a_; }
    Int b() const noexcept { return b_; }
    bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }
    /// True when the element lies in Z (b == 0).
    bool is_rational() const noexcept { return b_ == 0; }

    static QuadInt omega(const FieldContext& ctx) { return {ctx, 0, 1}; }

    friend bool operator==(const QuadInt& x, const QuadInt& y) noexcept {
        return x.ctx_ == y.ctx_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

private:
    FieldContext ctx_;
    Int a_;
    Int b_;
};

enum class ArithOp { Add, Sub, Mul };

QuadInt arith(const QuadInt& x, const QuadInt& y, ArithOp op);

QuadInt operator+(const QuadInt& x, const QuadInt& y);
QuadInt operator-(const QuadInt& x, const QuadInt& y);
QuadInt operator*(const QuadInt& x, const QuadInt& y);
QuadInt operator-(const QuadInt& x);
QuadInt operator*(Int k, const QuadInt& x);

QuadInt conj(const QuadInt& x);
Int trace(const QuadInt& x);
Int norm(const QuadInt& x);

/// The element of norm m and trace 0: w itself, or -1 + 2w when m == 3 (mod 4).
QuadInt sqrt_minus_m(const FieldContext& ctx);

/// "a+bw" with w spelled `w`.
std::string to_string(const QuadInt& x);
std::ostream& operator<<(std::ostream& os, const QuadInt& x);

}  // namespace hermu
