#include "hermu/search.hpp"

#include <algorithm>
#include <numeric>

namespace hermu {

bool substitution_check(const QuadForm& q, const Substitution& t, Int lambda) {
    if (t.rows() != q.nvars() || t.cols() != q.nvars()) {
        throw Error(ErrorKind::ArityMismatch, "scaling substitution must be " + std::to_string(q.nvars()) + "x" +
                                                  std::to_string(q.nvars()));
    }
    return q.substitute(t) == q.scaled(lambda);
}

bool subform_check(const QuadForm& q, const Substitution& t, const QuadForm& r) {
    if (t.rows() != q.nvars() || t.cols() != r.nvars()) {
        throw Error(ErrorKind::ArityMismatch, "subform substitution has the wrong shape");
    }
    return q.substitute(t) == r;
}

namespace {

Int bilinear(const IntMatrix& gram, const IntVec& u, const IntVec& v) {
    Int128 acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) acc += static_cast<Int128>(u[i]) * gram(i, j) * v[j];
    }
    return checked::narrow(acc);
}

}  // namespace

Substitution subform_search(const QuadForm& q, const QuadForm& r, Int bound) {
    if (r.nvars() > q.nvars()) throw Error(ErrorKind::ArityMismatch, "subform has more variables than the form");
    const std::size_t k = r.nvars();
    const IntMatrix gram = q.doubled_gram();
    PointEnumerator enumerator(q);

    // candidate columns per target value, restricted to the coefficient box
    std::vector<std::vector<IntVec>> candidates(k);
    for (std::size_t j = 0; j < k; ++j) {
        const Int target = r.coeff(j, j);
        if (target <= 0) throw Error(ErrorKind::NotPositiveDefinite, "subform must be positive definite");
        bool cached = false;
        for (std::size_t p = 0; p < j; ++p) {
            if (r.coeff(p, p) == target) {
                candidates[j] = candidates[p];
                cached = true;
                break;
            }
        }
        if (cached) continue;
        enumerator.visit_value(target, [&](std::span<const Int> x) {
            if (std::all_of(x.begin(), x.end(), [&](Int v) { return v >= -bound && v <= bound; }))
                candidates[j].emplace_back(x.begin(), x.end());
        });
        std::sort(candidates[j].begin(), candidates[j].end());
    }

    std::vector<IntVec> chosen(k);
    auto dfs = [&](auto& self, std::size_t j) -> bool {
        if (j == k) return true;
        for (const auto& v : candidates[j]) {
            bool ok = true;
            for (std::size_t p = 0; p < j && ok; ++p) ok = bilinear(gram, chosen[p], v) == r.coeff(p, j);
            if (!ok) continue;
            chosen[j] = v;
            if (self(self, j + 1)) return true;
        }
        return false;
    };
    if (!dfs(dfs, 0)) {
        throw Error(ErrorKind::SearchExhausted,
                    "no substitution with entries in [-" + std::to_string(bound) + "," + std::to_string(bound) + "]");
    }
    Substitution t = IntMatrix::from_columns(chosen, q.nvars());
    if (!subform_check(q, t, r)) throw Error(ErrorKind::SearchExhausted, "internal: search produced invalid matrix");
    return t;
}

Substitution scaling_substitution_search(const QuadForm& q, Int lambda, Int bound) {
    return subform_search(q, q.scaled(lambda), bound);
}

Substitution subform_search_auto(const QuadForm& q, const QuadForm& r) {
    try {
        return subform_search(q, r, kDefaultSearchBound);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::SearchExhausted) throw;
    }
    return subform_search(q, r, kFallbackSearchBound);
}

Substitution scaling_substitution_search_auto(const QuadForm& q, Int lambda) {
    return subform_search_auto(q, q.scaled(lambda));
}

std::optional<Substitution> signed_permutation_match(const QuadForm& q, const QuadForm& r) {
    const std::size_t n = q.nvars();
    if (r.nvars() != n) return std::nullopt;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (std::size_t signs = 0; signs < (std::size_t{1} << n); ++signs) {
            Substitution p(n, n);
            for (std::size_t j = 0; j < n; ++j) p(perm[j], j) = (signs >> j) & 1 ? -1 : 1;
            if (q.substitute(p) == r) return p;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace hermu
