#include "hermu/hermitian.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace hermu {

namespace detail {
extern const std::string_view kBuiltinCatalog;
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Int exact_div(Int num, Int den, const char* what) {
    if (den == 0 || num % den != 0) {
        throw Error(ErrorKind::NonIntegralLattice, std::string("formal generators not closed under w (") + what + ")");
    }
    return num / den;
}

/// Offset of each block's first formal generator.
std::vector<std::size_t> generator_offsets(const HermLattice& l) {
    std::vector<std::size_t> off;
    std::size_t at = 0;
    for (const auto& b : l.blocks) {
        off.push_back(at);
        at += generator_count(b);
    }
    return off;
}

}  // namespace

std::size_t generator_count(const Block& b) { return std::holds_alternative<Unary>(b) ? 1 : 2; }

std::size_t HermLattice::generator_count() const {
    std::size_t n = 0;
    for (const auto& b : blocks) n += hermu::generator_count(b);
    return n;
}

bool HermLattice::is_free() const {
    return std::all_of(blocks.begin(), blocks.end(), [](const Block& b) { return std::holds_alternative<Unary>(b); });
}

void validate(const HermLattice& lattice) {
    if (lattice.blocks.empty()) throw Error(ErrorKind::NotPositiveDefinite, "lattice has no blocks");
    for (std::size_t i = 0; i < lattice.blocks.size(); ++i) {
        std::visit(overloaded{
                       [&](const Unary& u) {
                           if (u.d < 1)
                               throw Error(ErrorKind::NotPositiveDefinite,
                                           "unary block <" + std::to_string(u.d) + "> is not positive");
                       },
                       [&](const FormalPair& f) {
                           if (!(f.gamma.context() == lattice.ctx))
                               throw Error(ErrorKind::ContextMismatch, "formal block entry from another field");
                           if (f.a < 1 || f.c < 1)
                               throw Error(ErrorKind::NotPositiveDefinite, "formal block has a non-positive diagonal");
                           if (checked::mul(f.a, f.c) != norm(f.gamma)) {
                               throw Error(ErrorKind::FormalBlockNotSingular,
                                           std::to_string(f.a) + "*" + std::to_string(f.c) + " != N(" +
                                               to_string(f.gamma) + ") = " + std::to_string(norm(f.gamma)));
                           }
                           // gamma in Z makes the two generators Q-dependent: the
                           // block would carry a rank-1 Z-module only.
                           if (f.gamma.is_rational())
                               throw Error(ErrorKind::NotPositiveDefinite, "formal generators are Z-dependent");
                           omega_action(lattice, i);
                       },
                   },
                   lattice.blocks[i]);
    }
}

HermMatrix formal_gram(const HermLattice& lattice) {
    validate(lattice);
    const std::size_t n = lattice.generator_count();
    const QuadInt zero(lattice.ctx);
    HermMatrix m(n, std::vector<QuadInt>(n, zero));
    const auto off = generator_offsets(lattice);
    for (std::size_t i = 0; i < lattice.blocks.size(); ++i) {
        const std::size_t o = off[i];
        std::visit(overloaded{
                       [&](const Unary& u) { m[o][o] = QuadInt(lattice.ctx, u.d); },
                       [&](const FormalPair& f) {
                           m[o][o] = QuadInt(lattice.ctx, f.a);
                           m[o][o + 1] = f.gamma;
                           m[o + 1][o] = conj(f.gamma);
                           m[o + 1][o + 1] = QuadInt(lattice.ctx, f.c);
                       },
                   },
                   lattice.blocks[i]);
    }
    return m;
}

Int hermitian_value(const HermLattice& lattice, std::span<const QuadInt> coeffs) {
    const HermMatrix m = formal_gram(lattice);
    if (coeffs.size() != m.size()) throw Error(ErrorKind::ArityMismatch, "coefficient vector length");
    QuadInt acc(lattice.ctx);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) acc = acc + coeffs[i] * m[i][j] * conj(coeffs[j]);
    if (!acc.is_rational()) throw Error(ErrorKind::NonIntegralLattice, "H(x) is not rational: " + to_string(acc));
    return acc.a();
}

IntMatrix omega_action(const HermLattice& lattice, std::size_t index) {
    if (index >= lattice.blocks.size()) throw Error(ErrorKind::ArityMismatch, "block index out of range");
    const FieldContext& ctx = lattice.ctx;
    if (const auto* f = std::get_if<FormalPair>(&lattice.blocks[index])) {
        // u2/u1 = r = conj(g)/a.  w u1 = p u1 + q u2  <=>  w = p + q r,
        //                         w u2 = p' u1 + q' u2 <=> w r = p' + q' r.
        const QuadInt gbar = conj(f->gamma);
        const Int g0 = gbar.a();
        const Int g1 = gbar.b();
        if (g1 == 0) throw Error(ErrorKind::NotPositiveDefinite, "formal generators are Z-dependent");
        const QuadInt wg = QuadInt::omega(ctx) * gbar;
        const Int q = exact_div(f->a, g1, "w u1");
        const Int p = exact_div(-g0, g1, "w u1");
        const Int q2 = exact_div(wg.b(), g1, "w u2");
        const Int p2 = exact_div(checked::sub(wg.a(), checked::mul(q2, g0)), f->a, "w u2");
        return IntMatrix{{p, p2}, {q, q2}};
    }
    // basis (v, w v): w * 1 = w, w * w = -n + t w
    return IntMatrix{{0, -ctx.norm_omega()}, {1, ctx.trace_omega()}};
}

IntVec to_transfer_coords(const HermLattice& lattice, std::span<const QuadInt> coeffs) {
    if (coeffs.size() != lattice.generator_count()) throw Error(ErrorKind::ArityMismatch, "coefficient vector length");
    IntVec out(2 * lattice.rank(), 0);
    const auto off = generator_offsets(lattice);
    for (std::size_t i = 0; i < lattice.blocks.size(); ++i) {
        const std::size_t o = off[i];
        for (const auto& x : coeffs.subspan(o, generator_count(lattice.blocks[i])))
            if (!(x.context() == lattice.ctx)) throw Error(ErrorKind::ContextMismatch, "coefficient from another field");
        if (std::holds_alternative<Unary>(lattice.blocks[i])) {
            out[2 * i] = coeffs[o].a();
            out[2 * i + 1] = coeffs[o].b();
            continue;
        }
        const IntMatrix w = omega_action(lattice, i);
        // x1 u1 + x2 u2 with x_k = a_k + b_k w
        for (std::size_t k = 0; k < 2; ++k) {
            const QuadInt& x = coeffs[o + k];
            out[2 * i + k] = checked::add(out[2 * i + k], x.a());
            out[2 * i] = checked::add(out[2 * i], checked::mul(x.b(), w(0, k)));
            out[2 * i + 1] = checked::add(out[2 * i + 1], checked::mul(x.b(), w(1, k)));
        }
    }
    return out;
}

std::vector<QuadInt> from_transfer_coords(const HermLattice& lattice, std::span<const Int> coords) {
    if (coords.size() != 2 * lattice.rank()) throw Error(ErrorKind::ArityMismatch, "coordinate vector length");
    std::vector<QuadInt> out;
    for (std::size_t i = 0; i < lattice.blocks.size(); ++i) {
        if (std::holds_alternative<Unary>(lattice.blocks[i])) {
            out.emplace_back(lattice.ctx, coords[2 * i], coords[2 * i + 1]);
        } else {
            out.emplace_back(lattice.ctx, coords[2 * i]);
            out.emplace_back(lattice.ctx, coords[2 * i + 1]);
        }
    }
    return out;
}

std::vector<QuadInt> LatticeMap::apply(std::span<const QuadInt> coeffs) const {
    std::vector<QuadInt> out;
    if (kind == Kind::DiagonalSwap) {
        if (coeffs.size() != 2) throw Error(ErrorKind::ArityMismatch, "swap map acts on two coefficients");
        out.push_back(swap_scale * coeffs[1]);
        out.push_back(coeffs[0]);
        return out;
    }
    for (const auto& x : coeffs) out.push_back(multiplier * x);
    return out;
}

LatticeMap diagonal_scaling_map(const HermLattice& lattice) {
    validate(lattice);
    if (!lattice.is_free()) throw Error(ErrorKind::NotDiagonal, lattice.label + " has a formal block");
    if (lattice.rank() != 2 || std::get<Unary>(lattice.blocks[0]).d != 1)
        throw Error(ErrorKind::NotDiagonal, "expected a lattice <1, c>");
    const Int c = std::get<Unary>(lattice.blocks[1]).d;
    // transfer coordinates (a, b, c', d') of x = a + b w, y = c' + d' w
    IntMatrix t(4, 4);
    t(0, 2) = c;
    t(1, 3) = c;
    t(2, 0) = 1;
    t(3, 1) = 1;
    return LatticeMap{LatticeMap::Kind::DiagonalSwap, c, QuadInt(lattice.ctx, 1), c, t,
                      "(x, y) -> (" + std::to_string(c) + "y, x)"};
}

LatticeMap sqrtm_scaling_map(const HermLattice& lattice) {
    validate(lattice);
    const QuadInt pi = sqrt_minus_m(lattice.ctx);
    const std::size_t n = 2 * lattice.rank();
    IntMatrix t(n, n);
    for (std::size_t i = 0; i < lattice.blocks.size(); ++i) {
        const IntMatrix w = omega_action(lattice, i);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t s = 0; s < 2; ++s)
                t(2 * i + r, 2 * i + s) = checked::add(r == s ? pi.a() : 0, checked::mul(pi.b(), w(r, s)));
    }
    return LatticeMap{LatticeMap::Kind::Multiplication, lattice.ctx.m(), pi, 1, t,
                      "multiplication by " + to_string(pi) + " (norm " + std::to_string(norm(pi)) + ")"};
}

// --- catalog --------------------------------------------------------------

namespace {

class CatalogParser {
public:
    CatalogParser(std::string_view line, std::size_t line_start) : s_(line), base_(line_start) {}

    HermLattice record() {
        expect_key("m");
        const Int m = integer();
        const FieldContext ctx = [&] {
            try {
                return FieldContext::make(m);
            } catch (const Error& e) {
                throw ParseError(base_ + pos_, e.what());
            }
        }();
        expect(';');
        expect_key("blocks");
        std::vector<Block> blocks{block(ctx)};
        ws();
        while (peek() == ',') {
            ++pos_;
            blocks.push_back(block(ctx));
            ws();
        }
        expect(';');
        expect_key("label");
        std::string label(s_.substr(pos_));
        while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back()))) label.pop_back();
        if (label.empty()) throw ParseError(base_ + pos_, "empty label");
        return HermLattice{ctx, std::move(blocks), std::move(label)};
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void expect(char ch) {
        ws();
        if (peek() != ch) throw ParseError(base_ + pos_, std::string("expected '") + ch + "'");
        ++pos_;
    }

    void expect_key(std::string_view key) {
        ws();
        if (s_.substr(pos_, key.size()) != key) throw ParseError(base_ + pos_, "expected '" + std::string(key) + "='");
        pos_ += key.size();
        expect('=');
        ws();
    }

    Int integer() {
        ws();
        const std::size_t start = pos_;
        if (peek() == '-' || peek() == '+') ++pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        Int v = 0;
        const char* b = s_.data() + start + (s_[start] == '+' ? 1 : 0);
        auto [ptr, ec] = std::from_chars(b, s_.data() + pos_, v);
        if (ec != std::errc() || ptr != s_.data() + pos_) throw ParseError(base_ + start, "expected an integer");
        return v;
    }

    Block block(const FieldContext& ctx) {
        ws();
        const char kind = peek();
        if (kind != 'U' && kind != 'F') throw ParseError(base_ + pos_, "expected block 'U(' or 'F('");
        ++pos_;
        expect('(');
        if (kind == 'U') {
            const Int d = integer();
            expect(')');
            return Unary{d};
        }
        const Int a = integer();
        expect(';');
        const Int ga = integer();
        expect(',');
        const Int gb = integer();
        expect(';');
        const Int c = integer();
        expect(')');
        return FormalPair{a, QuadInt(ctx, ga, gb), c};
    }

    std::string_view s_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<HermLattice> parse_catalog(std::string_view text) {
    std::vector<HermLattice> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        std::size_t first = 0;
        while (first < line.size() && std::isspace(static_cast<unsigned char>(line[first]))) ++first;
        if (first < line.size() && line[first] != '#') out.push_back(CatalogParser(line, start).record());
        start = end + 1;
    }
    return out;
}

std::vector<HermLattice> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open catalog file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_catalog(ss.str());
}

std::string blocks_to_string(const std::vector<Block>& blocks) {
    std::ostringstream os;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) os << ',';
        std::visit(overloaded{
                       [&](const Unary& u) { os << "U(" << u.d << ')'; },
                       [&](const FormalPair& f) {
                           os << "F(" << f.a << "; " << f.gamma.a() << ',' << f.gamma.b() << "; " << f.c << ')';
                       },
                   },
                   blocks[i]);
    }
    return os.str();
}

std::string to_catalog_record(const HermLattice& lattice) {
    return "m=" + std::to_string(lattice.ctx.m()) + "; blocks=" + blocks_to_string(lattice.blocks) +
           "; label=" + lattice.label;
}

std::string_view builtin_catalog_text() { return detail::kBuiltinCatalog; }

const std::vector<HermLattice>& catalog() {
    static const std::vector<HermLattice> entries = parse_catalog(detail::kBuiltinCatalog);
    return entries;
}

std::string selector_of(const std::vector<HermLattice>& entries, std::size_t position) {
    if (position >= entries.size()) throw Error(ErrorKind::UnknownCase, "catalog position out of range");
    const Int m = entries[position].ctx.m();
    std::size_t index = 0;
    for (std::size_t i = 0; i <= position; ++i)
        if (entries[i].ctx.m() == m) ++index;
    return std::to_string(m) + ":" + std::to_string(index);
}

std::size_t find_selector(const std::vector<HermLattice>& entries, std::string_view selector) {
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (selector_of(entries, i) == selector) return i;
    throw Error(ErrorKind::UnknownCase, "no catalog entry '" + std::string(selector) + "'");
}

}  // namespace hermu
