#include "hermu/ring.hpp"

#include <ostream>
#include <sstream>

namespace hermu {

bool is_squarefree(Int m) noexcept {
    if (m <= 0) return false;
    for (Int p = 2; p * p <= m; ++p) {
        if (m % (p * p) == 0) return false;
    }
    return true;
}

FieldContext FieldContext::make(Int m) {
    if (m <= 0) throw Error(ErrorKind::InvalidField, "m must be positive, got " + std::to_string(m));
    if (!is_squarefree(m)) throw Error(ErrorKind::InvalidField, std::to_string(m) + " is not squarefree");
    return FieldContext(m, m % 4 == 3 ? OmegaKind::HalfPlus : OmegaKind::SqrtM);
}

namespace {

void require_same_field(const QuadInt& x, const QuadInt& y) {
    if (!(x.context() == y.context())) {
        throw Error(ErrorKind::ContextMismatch, "operands from Q(sqrt(-" + std::to_string(x.context().m()) +
                                                    ")) and Q(sqrt(-" + std::to_string(y.context().m()) + "))");
    }
}

}  // namespace

QuadInt arith(const QuadInt& x, const QuadInt& y, ArithOp op) {
    require_same_field(x, y);
    const auto& ctx = x.context();
    switch (op) {
        case ArithOp::Add: return {ctx, checked::add(x.a(), y.a()), checked::add(x.b(), y.b())};
        case ArithOp::Sub: return {ctx, checked::sub(x.a(), y.a()), checked::sub(x.b(), y.b())};
        case ArithOp::Mul: {
            // (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2,  w^2 = t w - n
            using namespace checked;
            const Int bd = mul(x.b(), y.b());
            const Int a = sub(mul(x.a(), y.a()), mul(bd, ctx.norm_omega()));
            const Int b = add(add(mul(x.a(), y.b()), mul(x.b(), y.a())), mul(bd, ctx.trace_omega()));
            return {ctx, a, b};
        }
    }
    return x;
}

QuadInt operator+(const QuadInt& x, const QuadInt& y) { return arith(x, y, ArithOp::Add); }
QuadInt operator-(const QuadInt& x, const QuadInt& y) { return arith(x, y, ArithOp::Sub); }
QuadInt operator*(const QuadInt& x, const QuadInt& y) { return arith(x, y, ArithOp::Mul); }

QuadInt operator-(const QuadInt& x) {
    return {x.context(), checked::sub(0, x.a()), checked::sub(0, x.b())};
}

QuadInt operator*(Int k, const QuadInt& x) {
    return {x.context(), checked::mul(k, x.a()), checked::mul(k, x.b())};
}

QuadInt conj(const QuadInt& x) {
    // conj(w) = trace_omega - w
    const Int t = x.context().trace_omega();
    return {x.context(), checked::add(x.a(), checked::mul(t, x.b())), checked::sub(0, x.b())};
}

Int trace(const QuadInt& x) {
    return checked::add(checked::mul(2, x.a()), checked::mul(x.context().trace_omega(), x.b()));
}

Int norm(const QuadInt& x) {
    using namespace checked;
    const auto& ctx = x.context();
    return add(add(mul(x.a(), x.a()), mul(mul(x.a(), x.b()), ctx.trace_omega())),
               mul(mul(x.b(), x.b()), ctx.norm_omega()));
}

QuadInt sqrt_minus_m(const FieldContext& ctx) {
    if (ctx.omega_kind() == OmegaKind::HalfPlus) return {ctx, -1, 2};
    return {ctx, 0, 1};
}

std::string to_string(const QuadInt& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadInt& x) {
    if (x.b() == 0) return os << x.a();
    if (x.a() != 0) os << x.a() << (x.b() > 0 ? "+" : "-");
    else if (x.b() < 0) os << "-";
    const Int mag = x.b() < 0 ? -x.b() : x.b();
    if (mag != 1) os << mag;
    return os << "w";
}

}  // namespace hermu
