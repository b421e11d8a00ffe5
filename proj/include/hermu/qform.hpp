#pragma once

// Integer-valued quadratic forms sum_{i<=j} c_ij x_i x_j and the exact
// lattice-point machinery built on them.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hermu/matrix.hpp"

namespace hermu {

class QuadForm {
public:
    QuadForm() = default;
    explicit QuadForm(std::size_t nvars) : n_(nvars), c_(nvars * (nvars + 1) / 2, 0) {}

    /// Diagonal form a_0 x_0^2 + a_1 x_1^2 + ...
    static QuadForm diagonal(std::span<const Int> diag);
    static QuadForm diagonal(std::initializer_list<Int> diag) { return diagonal(std::span(diag.begin(), diag.size())); }

    /// Form with doubled Gram matrix `gram` (symmetric, even diagonal).
    static QuadForm from_doubled_gram(const IntMatrix& gram);

    /// Parses the polynomial syntax `x^2+2y^2+3z^2+6w^2+xw+yz`.
    static QuadForm parse(std::string_view text);

    std::size_t nvars() const noexcept { return n_; }

    /// Coefficient of x_i x_j (of x_i^2 when i == j); order of i, j is irrelevant.
    Int coeff(std::size_t i, std::size_t j) const { return c_[index(i, j)]; }
    void set_coeff(std::size_t i, std::size_t j, Int value) { c_[index(i, j)] = value; }

    /// 2B with Q(x) = x^T (2B) x / 2. Always integral.
    IntMatrix doubled_gram() const;

    Int eval(std::span<const Int> x) const;
    Int eval(std::initializer_list<Int> x) const { return eval(std::span(x.begin(), x.size())); }

    /// The form x -> Q(T x); T must have nvars() rows.
    QuadForm substitute(const IntMatrix& t) const;
    QuadForm scaled(Int lambda) const;
    /// Orthogonal sum Q(x) + R(y) in nvars()+other.nvars() variables.
    QuadForm direct_sum(const QuadForm& other) const;

    bool is_diagonal() const;

    /// Canonical printed syntax: squares first, then cross terms in index order.
    std::string to_string() const;

    friend bool operator==(const QuadForm&, const QuadForm&) = default;

private:
    std::size_t index(std::size_t i, std::size_t j) const;

    std::size_t n_ = 0;
    std::vector<Int> c_;
};

/// Integer tuple certifying Q(coords) = value.
struct Witness {
    IntVec coords;

    friend bool operator==(const Witness&, const Witness&) = default;
    std::string to_string() const;
};

/// Exact test through the leading principal minors of the doubled Gram.
bool is_positive_definite(const QuadForm& q);

/// Value n passes when n mod modulus is among `residues` (empty: any residue)
/// and no entry of `excluded_divisors` divides n.
struct CongruenceFilter {
    Int modulus = 1;
    std::vector<Int> residues;
    std::vector<Int> excluded_divisors;

    bool accepts(Int n) const;
    /// Inverse of parse(): "mod=3:0,1;notdiv=7", or "all".
    std::string to_string() const;
    /// Grammar: clauses separated by ';', each `mod=<m>:<r>,<r>...` or
    /// `notdiv=<p>,<p>...`; "all" or "" is the accept-everything filter.
    static CongruenceFilter parse(std::string_view text);

    static CongruenceFilter all() { return {}; }
};

/// Membership flags for 1..limit.
class RepSet {
public:
    RepSet() = default;
    explicit RepSet(Int limit) : limit_(limit), flags_(static_cast<std::size_t>(limit) + 1, 0) {}

    Int limit() const noexcept { return limit_; }
    bool contains(Int n) const { return n >= 1 && n <= limit_ && flags_[static_cast<std::size_t>(n)] != 0; }
    void insert(Int n) {
        if (n >= 1 && n <= limit_) flags_[static_cast<std::size_t>(n)] = 1;
    }
    std::vector<Int> missing(const CongruenceFilter& filter = {}) const;
    std::optional<Int> first_missing(const CongruenceFilter& filter = {}) const;

    friend bool operator==(const RepSet&, const RepSet&) = default;

private:
    Int limit_ = 0;
    std::vector<unsigned char> flags_;
};

/// Complete enumeration of {x in Z^n : Q(x) <= bound} for positive definite Q.
///
/// The region is cut level by level: for fixed x_{k+1..n-1} the minimum of
/// 2Q over real x_0..x_{k-1} is  (1/D_k) * sum G_k[i][j] x_i x_j  where D_k is
/// the k-th leading principal minor of the doubled Gram and G_k[i][j] the
/// bordered (k+1)-minors (Sylvester's identity). Both are integers, so the
/// admissible range of x_k comes from an integer square root and is exact.
class PointEnumerator {
public:
    explicit PointEnumerator(const QuadForm& q);

    const QuadForm& form() const noexcept { return form_; }

    /// Calls f(std::span<const Int> x, Int value) for every x with Q(x) <= bound.
    template <class F>
    void visit(Int bound, F&& f) const;

    /// Calls f(std::span<const Int> x) for every x with Q(x) == value.
    template <class F>
    void visit_value(Int value, F&& f) const;

private:
    struct Level {
        // G_k restricted to indices >= k, row-major (n-k) x (n-k)
        std::vector<Int128> g;
        Int128 leading = 1;  // D_k
    };

    bool range(std::size_t k, const Int* x, Int128 budget2, Int& lo, Int& hi) const;

    template <class Leaf>
    void walk(Int bound, Leaf&& leaf) const;

    QuadForm form_;
    IntMatrix gram_;
    std::size_t n_;
    std::vector<Level> levels_;
};

std::optional<Witness> represents(const QuadForm& q, Int n);
/// All x with Q(x) == n, in lexicographic order.
std::vector<IntVec> all_representations(const QuadForm& q, Int n);
RepSet represented_set(const QuadForm& q, Int limit);
std::optional<Int> first_exception(const QuadForm& q, Int limit, const CongruenceFilter& filter = {});
bool repset_equal(const QuadForm& a, const QuadForm& b, Int limit);

}  // namespace hermu

#include "hermu/detail/enumerate.ipp"
