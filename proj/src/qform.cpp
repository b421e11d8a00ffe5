#include "hermu/qform.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace hermu {

namespace {

constexpr std::string_view kVarNames = "xyzw";

}  // namespace

std::size_t QuadForm::index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    if (j >= n_) throw Error(ErrorKind::ArityMismatch, "variable index " + std::to_string(j) + " out of range");
    return i * n_ - i * (i - 1) / 2 + (j - i);
}

QuadForm QuadForm::diagonal(std::span<const Int> diag) {
    QuadForm q(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) q.set_coeff(i, i, diag[i]);
    return q;
}

QuadForm QuadForm::from_doubled_gram(const IntMatrix& gram) {
    if (gram.rows() != gram.cols()) throw Error(ErrorKind::ArityMismatch, "Gram matrix must be square");
    QuadForm q(gram.rows());
    for (std::size_t i = 0; i < gram.rows(); ++i) {
        if (gram(i, i) % 2 != 0) throw Error(ErrorKind::ArityMismatch, "doubled Gram matrix has odd diagonal");
        q.set_coeff(i, i, gram(i, i) / 2);
        for (std::size_t j = i + 1; j < gram.cols(); ++j) {
            if (gram(i, j) != gram(j, i)) throw Error(ErrorKind::ArityMismatch, "Gram matrix is not symmetric");
            q.set_coeff(i, j, gram(i, j));
        }
    }
    return q;
}

IntMatrix QuadForm::doubled_gram() const {
    IntMatrix a(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
        a(i, i) = checked::mul(2, coeff(i, i));
        for (std::size_t j = i + 1; j < n_; ++j) a(i, j) = a(j, i) = coeff(i, j);
    }
    return a;
}

Int QuadForm::eval(std::span<const Int> x) const {
    if (x.size() != n_) {
        throw Error(ErrorKind::ArityMismatch,
                    "form has " + std::to_string(n_) + " variables, got " + std::to_string(x.size()));
    }
    Int128 acc = 0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j) acc += static_cast<Int128>(coeff(i, j)) * x[i] * x[j];
    return checked::narrow(acc);
}

QuadForm QuadForm::substitute(const IntMatrix& t) const {
    if (t.rows() != n_) {
        throw Error(ErrorKind::ArityMismatch, "substitution has " + std::to_string(t.rows()) + " rows, form has " +
                                                  std::to_string(n_) + " variables");
    }
    return from_doubled_gram(t.transpose() * doubled_gram() * t);
}

QuadForm QuadForm::scaled(Int lambda) const {
    QuadForm q = *this;
    for (auto& c : q.c_) c = checked::mul(c, lambda);
    return q;
}

QuadForm QuadForm::direct_sum(const QuadForm& other) const {
    QuadForm q(n_ + other.n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j) q.set_coeff(i, j, coeff(i, j));
    for (std::size_t i = 0; i < other.n_; ++i)
        for (std::size_t j = i; j < other.n_; ++j) q.set_coeff(n_ + i, n_ + j, other.coeff(i, j));
    return q;
}

bool QuadForm::is_diagonal() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (coeff(i, j) != 0) return false;
    return true;
}

std::string QuadForm::to_string() const {
    if (n_ > kVarNames.size()) throw Error(ErrorKind::ArityMismatch, "polynomial syntax supports at most 4 variables");
    std::ostringstream os;
    bool first = true;
    auto term = [&](Int c, std::size_t i, std::size_t j) {
        if (c == 0) return;
        if (c > 0 && !first) os << '+';
        if (c == -1) os << '-';
        else if (c != 1) os << c;
        os << kVarNames[i];
        if (i == j) os << "^2";
        else os << kVarNames[j];
        first = false;
    };
    for (std::size_t i = 0; i < n_; ++i) term(coeff(i, i), i, i);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) term(coeff(i, j), i, j);
    if (first) os << '0';
    return os.str();
}

QuadForm QuadForm::parse(std::string_view text) {
    struct Term {
        std::size_t i, j;
        Int c;
    };
    std::vector<Term> terms;
    std::size_t pos = 0;
    std::size_t max_var = 0;
    bool any_var = false;

    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto var_at = [&](std::size_t p) -> std::optional<std::size_t> {
        if (p >= text.size()) return std::nullopt;
        auto k = kVarNames.find(text[p]);
        if (k == std::string_view::npos) return std::nullopt;
        return k;
    };
    auto expect_var = [&]() -> std::size_t {
        auto v = var_at(pos);
        if (!v) {
            if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))
                throw ParseError(pos, std::string("unknown variable '") + text[pos] + "'");
            throw ParseError(pos, "expected a variable");
        }
        ++pos;
        max_var = std::max(max_var, *v);
        any_var = true;
        return *v;
    };

    skip_ws();
    if (pos == text.size()) throw ParseError(pos, "empty form");
    bool first = true;
    while (true) {
        skip_ws();
        Int sign = 1;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (!first) {
            throw ParseError(pos, "expected '+' or '-'");
        }
        first = false;

        Int c = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            const std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, c);
            if (ec != std::errc()) throw ParseError(start, "coefficient out of range");
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            }
        }
        const std::size_t i = expect_var();
        std::size_t j = i;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            if (pos >= text.size() || text[pos] != '2') throw ParseError(pos, "only '^2' exponents are allowed");
            ++pos;
        } else if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
            j = expect_var();
            if (j == i) throw ParseError(pos - 1, "write squares as '^2'");
        } else {
            throw ParseError(pos, "linear term; expected '^2' or a second variable");
        }
        terms.push_back({i, j, checked::mul(sign, c)});
        skip_ws();
        if (pos == text.size()) break;
    }
    if (!any_var) throw ParseError(0, "form has no variables");

    QuadForm q(max_var + 1);
    for (const auto& t : terms) q.set_coeff(t.i, t.j, checked::add(q.coeff(t.i, t.j), t.c));
    return q;
}

std::string Witness::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
    os << ')';
    return os.str();
}

bool is_positive_definite(const QuadForm& q) {
    const IntMatrix a = q.doubled_gram();
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < q.nvars(); ++k) {
        idx.push_back(k);
        if (minor_determinant(a, idx, idx) <= 0) return false;
    }
    return true;
}

// --- congruence filters ---------------------------------------------------

bool CongruenceFilter::accepts(Int n) const {
    if (!residues.empty()) {
        const Int r = ((n % modulus) + modulus) % modulus;
        if (std::find(residues.begin(), residues.end(), r) == residues.end()) return false;
    }
    for (Int d : excluded_divisors)
        if (d != 0 && n % d == 0) return false;
    return true;
}

std::string CongruenceFilter::to_string() const {
    std::ostringstream os;
    bool any = false;
    if (!residues.empty()) {
        os << "mod=" << modulus << ':';
        for (std::size_t i = 0; i < residues.size(); ++i) os << (i ? "," : "") << residues[i];
        any = true;
    }
    if (!excluded_divisors.empty()) {
        if (any) os << ';';
        os << "notdiv=";
        for (std::size_t i = 0; i < excluded_divisors.size(); ++i) os << (i ? "," : "") << excluded_divisors[i];
        any = true;
    }
    return any ? os.str() : "all";
}

CongruenceFilter CongruenceFilter::parse(std::string_view text) {
    CongruenceFilter f;
    std::size_t pos = 0;
    auto trimmed_empty = [](std::string_view s) {
        return std::all_of(s.begin(), s.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
    };
    if (trimmed_empty(text) || text == "all") return f;

    auto read_int = [&](std::size_t& p) -> Int {
        while (p < text.size() && text[p] == ' ') ++p;
        const std::size_t start = p;
        if (p < text.size() && text[p] == '-') ++p;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
        Int v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + p, v);
        if (ec != std::errc() || start == p) throw ParseError(start, "expected an integer");
        while (p < text.size() && text[p] == ' ') ++p;
        return v;
    };
    auto read_list = [&](std::size_t& p) {
        std::vector<Int> out{read_int(p)};
        while (p < text.size() && text[p] == ',') {
            ++p;
            out.push_back(read_int(p));
        }
        return out;
    };

    while (pos < text.size()) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (text.substr(pos, 4) == "mod=") {
            pos += 4;
            f.modulus = read_int(pos);
            if (f.modulus < 1) throw ParseError(pos, "modulus must be positive");
            if (pos >= text.size() || text[pos] != ':') throw ParseError(pos, "expected ':' after modulus");
            ++pos;
            for (Int r : read_list(pos)) f.residues.push_back(((r % f.modulus) + f.modulus) % f.modulus);
            std::sort(f.residues.begin(), f.residues.end());
            f.residues.erase(std::unique(f.residues.begin(), f.residues.end()), f.residues.end());
        } else if (text.substr(pos, 7) == "notdiv=") {
            pos += 7;
            for (Int d : read_list(pos)) {
                if (d <= 0) throw ParseError(pos, "excluded divisors must be positive");
                f.excluded_divisors.push_back(d);
            }
        } else {
            throw ParseError(pos, "expected 'mod=' or 'notdiv='");
        }
        if (pos < text.size()) {
            if (text[pos] != ';') throw ParseError(pos, "expected ';'");
            ++pos;
        }
    }
    return f;
}

// --- represented sets -----------------------------------------------------

std::vector<Int> RepSet::missing(const CongruenceFilter& filter) const {
    std::vector<Int> out;
    for (Int n = 1; n <= limit_; ++n)
        if (!contains(n) && filter.accepts(n)) out.push_back(n);
    return out;
}

std::optional<Int> RepSet::first_missing(const CongruenceFilter& filter) const {
    for (Int n = 1; n <= limit_; ++n)
        if (!contains(n) && filter.accepts(n)) return n;
    return std::nullopt;
}

PointEnumerator::PointEnumerator(const QuadForm& q) : form_(q), gram_(q.doubled_gram()), n_(q.nvars()) {
    if (!is_positive_definite(q)) throw Error(ErrorKind::NotPositiveDefinite, q.nvars() <= 4 ? q.to_string() : "form");
    levels_.resize(n_);
    std::vector<std::size_t> rows, cols;
    for (std::size_t k = 0; k < n_; ++k) {
        Level& lv = levels_[k];
        const std::size_t w = n_ - k;
        lv.g.assign(w * w, 0);
        std::vector<std::size_t> lead(k);
        for (std::size_t t = 0; t < k; ++t) lead[t] = t;
        lv.leading = minor_determinant(gram_, lead, lead);
        for (std::size_t i = 0; i < w; ++i) {
            for (std::size_t j = 0; j < w; ++j) {
                rows = lead;
                cols = lead;
                rows.push_back(k + i);
                cols.push_back(k + j);
                lv.g[i * w + j] = minor_determinant(gram_, rows, cols);
            }
        }
    }
}

std::vector<IntVec> all_representations(const QuadForm& q, Int n) {
    std::vector<IntVec> out;
    if (n < 0) return out;
    PointEnumerator e(q);
    e.visit_value(n, [&](std::span<const Int> x) { out.emplace_back(x.begin(), x.end()); });
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Witness> represents(const QuadForm& q, Int n) {
    if (n < 0) return std::nullopt;
    PointEnumerator e(q);
    std::optional<Witness> best;
    e.visit_value(n, [&](std::span<const Int> x) {
        if (!best || std::lexicographical_compare(x.begin(), x.end(), best->coords.begin(), best->coords.end()))
            best = Witness{IntVec(x.begin(), x.end())};
    });
    return best;
}

RepSet represented_set(const QuadForm& q, Int limit) {
    RepSet set(limit);
    PointEnumerator e(q);
    e.visit(limit, [&](std::span<const Int>, Int value) { set.insert(value); });
    return set;
}

std::optional<Int> first_exception(const QuadForm& q, Int limit, const CongruenceFilter& filter) {
    return represented_set(q, limit).first_missing(filter);
}

bool repset_equal(const QuadForm& a, const QuadForm& b, Int limit) {
    return represented_set(a, limit) == represented_set(b, limit);
}

}  // namespace hermu
