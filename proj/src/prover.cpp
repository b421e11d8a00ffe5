#include "hermu/prover.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <sstream>

namespace hermu {

namespace {

using Clock = std::chrono::steady_clock;

const HermLattice& reference(std::string_view selector) { return catalog()[find_selector(catalog(), selector)]; }

std::string join(const IntVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

IntVec add_scaled(IntVec x, const IntVec& col, Int w) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = checked::add(x[i], checked::mul(w, col[i]));
    return x;
}

/// Lexicographically smallest witness of every value 1..limit in one sweep.
std::vector<std::optional<IntVec>> witness_table(const QuadForm& q, Int limit) {
    std::vector<std::optional<IntVec>> best(static_cast<std::size_t>(limit) + 1);
    PointEnumerator(q).visit(limit, [&](std::span<const Int> x, Int value) {
        auto& slot = best[static_cast<std::size_t>(value)];
        if (!slot || std::lexicographical_compare(x.begin(), x.end(), slot->begin(), slot->end()))
            slot = IntVec(x.begin(), x.end());
    });
    return best;
}

struct CaseData {
    HardCase id;
    std::string_view name;
    PrintedForm printed;
    std::string_view selector;
    std::optional<std::string_view> intermediate;
    Int shift;
    std::vector<std::pair<std::string_view, Int>> shift_rules;
    std::vector<std::string_view> members;
    std::string_view genus_filter;
    Int base_bound;
};

const std::vector<CaseData>& case_table() {
    static const std::vector<CaseData> specs{
        {HardCase::F72, "f72", PrintedForm::F72, "7:2", "x^2+2y^2+2z^2+xy", 14, {{"mod=3:2", 1}},
         {"x^2+9y^2+15z^2+6yz", "3x^2+6y^2+7z^2"}, "mod=3:0,1;notdiv=7", 14},
        {HardCase::F73, "f73", PrintedForm::F73, "7:3", std::nullopt, 0, {},
         {"x^2+3y^2+7z^2", "2x^2+3y^2+4z^2+2xz"}, "notdiv=3", 0},
        {HardCase::F11, "f11", PrintedForm::F11, "11:1", std::nullopt, 0, {},
         {"x^2+y^2+11z^2", "x^2+3y^2+4z^2+2yz"}, "notdiv=11", 0},
        {HardCase::F15, "f15", PrintedForm::F15, "15:1", std::nullopt, 0, {},
         {"x^2+2y^2+8z^2+2yz", "x^2+3y^2+5z^2"}, "notdiv=5", 0},
        {HardCase::F19, "f19", PrintedForm::F19, "19:1", "x^2+2y^2+5z^2+xz", 38, {{"mod=10:1", 1}, {"mod=10:9", 2}},
         {"2x^2+5y^2+25z^2+5yz", "3x^2+7y^2+13z^2+3yz+xz+3xy"}, "mod=10:3,5,7", 154},
        {HardCase::F23, "f23", PrintedForm::F23, "23:1", "x^2+2y^2+3z^2+yz", 23, {{"mod=4:3", 1}},
         {"x^2+8y^2+12z^2+4yz", "4x^2+4y^2+9z^2+4yz+4xz+4xy"}, "mod=4:0,1;notdiv=23", 23},
        {HardCase::F31, "f31", PrintedForm::F31, "31:1", "x^2+2y^2+4z^2+yz", 31, {{"mod=4:3", 1}},
         {"x^2+4y^2+32z^2+4yz", "x^2+8y^2+16z^2+4yz", "4x^2+5y^2+8z^2+4yz+4xz"}, "mod=4:0,1;notdiv=31", 31},
    };
    return specs;
}

const CaseData& data_of(HardCase c) { return case_table()[static_cast<std::size_t>(c)]; }

[[noreturn]] void ingredient_failed(HardCase c, const std::string& what) {
    throw Error(ErrorKind::IngredientFailed, std::string(name_of(c)) + ": " + what);
}

Claim make_claim(std::string id, std::string statement, bool holds, std::string detail = {}, bool essential = true) {
    return Claim{std::move(id), std::move(statement), holds, std::move(detail), essential};
}

/// Substitution on the printed form induced by a lattice map: with
/// f(P x) = t(x) and t(S x) = lambda t(x), f(P S P^T y) = lambda f(y).
Substitution conjugate(const Substitution& p, const Substitution& s) { return p * s * p.transpose(); }

void add_norm_claim(HardCaseProof& proof, const HermLattice& l) {
    const QuadInt root = sqrt_minus_m(l.ctx);
    const QuadInt product = root * conj(root);
    const Int m = l.ctx.m();
    proof.claims.push_back(make_claim("norm:" + std::to_string(m),
                                      std::to_string(m) + " = " + to_string(root) + " * " + to_string(conj(root)),
                                      product == QuadInt(l.ctx, m), to_string(product)));
}

void add_lattice_scaling(HardCaseProof& proof, const Substitution& p, const LatticeMap& map, std::string source) {
    const Substitution s = conjugate(p, map.transfer_substitution);
    const bool holds = substitution_check(proof.f, s, map.lambda);
    proof.claims.push_back(make_claim("scale:" + std::to_string(map.lambda),
                                      "f(S x) = " + std::to_string(map.lambda) + " f(x) from " + map.description, holds,
                                      s.to_string()));
    if (!holds) ingredient_failed(proof.id, "induced scaling by " + std::to_string(map.lambda) + " does not hold");
    proof.scalings.push_back(SubstitutionRecord{map.lambda, std::move(source), std::nullopt, std::nullopt, s});
}

void add_printed_scaling(HardCaseProof& proof, Int lambda, const Substitution& printed) {
    const bool printed_holds = substitution_check(proof.f, printed, lambda);
    proof.claims.push_back(make_claim("scale:" + std::to_string(lambda) + ":printed",
                                      "printed matrix gives f(S x) = " + std::to_string(lambda) + " f(x)",
                                      printed_holds, printed.to_string(), false));
    if (printed_holds) {
        proof.scalings.push_back(SubstitutionRecord{lambda, "printed", printed, true, printed});
        return;
    }
    Substitution found;
    try {
        found = scaling_substitution_search_auto(proof.f, lambda);
    } catch (const Error& e) {
        ingredient_failed(proof.id, "no scaling by " + std::to_string(lambda) + ": " + e.what());
    }
    proof.claims.push_back(make_claim("scale:" + std::to_string(lambda) + ":search",
                                      "searched matrix gives f(S x) = " + std::to_string(lambda) + " f(x)",
                                      substitution_check(proof.f, found, lambda), found.to_string()));
    proof.scalings.push_back(SubstitutionRecord{lambda, "search", printed, false, found});
}

void add_scalings(HardCaseProof& proof, const Substitution& p) {
    const HermLattice& l = reference(data_of(proof.id).selector);
    switch (proof.id) {
        case HardCase::F72:
        case HardCase::F11:
            add_norm_claim(proof, l);
            add_lattice_scaling(proof, p, sqrtm_scaling_map(l), "sqrt(-m) on the lattice");
            break;
        case HardCase::F73:
        case HardCase::F19:
            add_lattice_scaling(proof, p, diagonal_scaling_map(l), "diagonal swap on the lattice");
            break;
        case HardCase::F15:
            add_printed_scaling(proof, 5, Substitution{{0, 2, 3, 0}, {1, 0, 0, 3}, {1, 0, 0, -2}, {0, 1, -1, 0}});
            break;
        case HardCase::F23:
            add_printed_scaling(proof, 2, Substitution{{0, 1, 0, 0}, {0, 0, 2, 0}, {2, 0, 0, 0}, {0, 0, 0, 1}});
            add_norm_claim(proof, l);
            add_lattice_scaling(proof, p, sqrtm_scaling_map(l), "sqrt(-m) on the lattice");
            break;
        case HardCase::F31:
            add_printed_scaling(proof, 2, Substitution{{0, 2, 0, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 0, 2, 0}});
            add_norm_claim(proof, l);
            add_lattice_scaling(proof, p, sqrtm_scaling_map(l), "sqrt(-m) on the lattice");
            break;
    }
}

Substitution search_or_fail(HardCase c, const QuadForm& q, const QuadForm& r, const std::string& what) {
    try {
        return subform_search_auto(q, r);
    } catch (const Error& e) {
        ingredient_failed(c, what + ": " + e.what());
    }
}

std::optional<GenusMemberStep> genus_step(const HardCaseProof& proof, Int value, Int w) {
    const Int rest = value - proof.shift * w * w;
    if (rest < 1 || !proof.genus_filter.accepts(rest)) return std::nullopt;
    for (std::size_t i = 0; i < proof.members.size(); ++i) {
        if (auto y = represents(proof.members[i].form, rest)) {
            return GenusMemberStep{i, *y, proof.members[i].embedding, w == 0 ? 0 : proof.shift, w,
                                   w == 0 ? IntVec{} : proof.shift_column};
        }
    }
    return std::nullopt;
}

}  // namespace

// --- names ------------------------------------------------------------------

std::string_view name_of(HardCase c) { return data_of(c).name; }

HardCase hard_case_from_name(std::string_view name) {
    for (const auto& s : case_table())
        if (s.name == name) return s.id;
    throw Error(ErrorKind::UnknownCase, "no case named '" + std::string(name) + "'");
}

PrintedForm printed_form_of(HardCase c) { return data_of(c).printed; }

std::string_view name_of(Strategy s) {
    switch (s) {
        case Strategy::Hard: return "descent";
        case Strategy::Diagonal: return "diagonal";
        case Strategy::Sublattice: return "sublattice";
        case Strategy::OneClassGenus: return "one-class-genus";
        case Strategy::DirectScan: return "direct-scan";
    }
    return "?";
}

std::string CaseId::name() const {
    if (hard) return std::string(name_of(*hard));
    return std::string(name_of(strategy));
}

CaseId classify(const HermLattice& lattice) {
    struct Row {
        Int m;
        std::string_view blocks;
        CaseId id;
    };
    const auto hard = [](HardCase c) { return CaseId{Strategy::Hard, c, std::nullopt, printed_form_of(c)}; };
    const auto diag = [](std::optional<PrintedForm> p = std::nullopt) {
        return CaseId{Strategy::Diagonal, std::nullopt, std::nullopt, p};
    };
    const auto sub = [](std::string_view u) {
        return CaseId{Strategy::Sublattice, std::nullopt, QuadForm::parse(u), std::nullopt};
    };
    const auto one = [](PrintedForm p) { return CaseId{Strategy::OneClassGenus, std::nullopt, std::nullopt, p}; };
    static const std::vector<Row> table{
        {1, "U(1),U(1)", diag()},
        {1, "U(1),U(2)", diag()},
        {1, "U(1),U(3)", diag()},
        {2, "U(1),U(1)", diag()},
        {2, "U(1),U(2)", diag()},
        {2, "U(1),U(3)", diag()},
        {2, "U(1),U(4)", diag()},
        {2, "U(1),U(5)", diag()},
        {3, "U(1),U(1)", sub("x^2+3y^2+z^2+3w^2")},
        {3, "U(1),U(2)", sub("x^2+3y^2+2z^2+6w^2")},
        {5, "U(1),U(2)", diag()},
        {5, "U(1),F(2; -1,1; 3)", sub("x^2+5y^2+2z^2+10w^2")},
        {6, "U(1),F(2; 0,1; 3)", diag(PrintedForm::Diag6)},
        {7, "U(1),U(1)", one(PrintedForm::OneClass7)},
        {7, "U(1),U(2)", hard(HardCase::F72)},
        {7, "U(1),U(3)", hard(HardCase::F73)},
        {10, "U(1),F(2; 0,1; 5)", diag(PrintedForm::Diag10)},
        {11, "U(1),U(1)", hard(HardCase::F11)},
        {11, "U(1),U(2)", one(PrintedForm::OneClass11)},
        {15, "U(1),F(2; 0,1; 2)", hard(HardCase::F15)},
        {19, "U(1),U(2)", hard(HardCase::F19)},
        {23, "U(1),F(2; 0,1; 3)", hard(HardCase::F23)},
        {23, "U(1),F(2; -1,1; 3)", hard(HardCase::F23)},
        {31, "U(1),F(2; 0,1; 4)", hard(HardCase::F31)},
        {31, "U(1),F(2; -1,1; 4)", hard(HardCase::F31)},
    };
    const std::string blocks = blocks_to_string(lattice.blocks);
    for (const auto& row : table)
        if (row.m == lattice.ctx.m() && row.blocks == blocks) return row.id;
    return CaseId{Strategy::DirectScan, std::nullopt, std::nullopt, std::nullopt};
}

// --- traces -----------------------------------------------------------------

IntVec ProofTrace::replay(const QuadForm& f) const {
    if (steps.empty() || steps.size() != values.size())
        throw Error(ErrorKind::TraceFailed, "malformed trace for " + std::to_string(target));
    IntVec x;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        std::visit(
            [&](const auto& step) {
                using T = std::decay_t<decltype(step)>;
                if constexpr (std::is_same_v<T, BaseCase>) {
                    x = step.witness.coords;
                } else if constexpr (std::is_same_v<T, GenusMemberStep>) {
                    x = step.embedding.apply(step.ternary.coords);
                    if (step.w != 0) x = add_scaled(std::move(x), step.shift_column, step.w);
                } else if constexpr (std::is_same_v<T, SublatticeStep>) {
                    x = step.embedding.apply(step.sub.coords);
                } else {
                    if (i == 0) throw Error(ErrorKind::TraceFailed, "trace starts with a scaling");
                    x = step.substitution.apply(x);
                }
            },
            steps[i]);
        if (x.size() != f.nvars() || f.eval(x) != values[i])
            throw Error(ErrorKind::TraceFailed, "step " + std::to_string(i + 1) + " of the trace for " +
                                                    std::to_string(target) + " does not evaluate to " +
                                                    std::to_string(values[i]));
    }
    if (values.back() != target) throw Error(ErrorKind::TraceFailed, "trace ends away from its target");
    return x;
}

std::vector<std::string> ProofTrace::describe() const {
    std::vector<std::string> lines;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        std::ostringstream out;
        out << values[i] << ": ";
        std::visit(
            [&](const auto& step) {
                using T = std::decay_t<decltype(step)>;
                if constexpr (std::is_same_v<T, BaseCase>) {
                    out << "base table, witness " << join(step.witness.coords);
                } else if constexpr (std::is_same_v<T, GenusMemberStep>) {
                    out << "genus member g" << step.member + 1 << " at " << join(step.ternary.coords);
                    if (step.w != 0) out << ", plus " << step.shift << "*" << step.w << "^2";
                    out << ", embedding " << step.embedding.to_string();
                } else if constexpr (std::is_same_v<T, SublatticeStep>) {
                    out << "universal subform at " << join(step.sub.coords) << ", embedding "
                        << step.embedding.to_string();
                } else {
                    out << "scale by " << step.lambda << " with " << step.substitution.to_string();
                }
            },
            steps[i]);
        lines.push_back(out.str());
    }
    return lines;
}

// --- ingredients ------------------------------------------------------------

bool HardCaseProof::ingredients_hold() const {
    return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.holds || !c.essential; });
}

HardCaseProof verify_ingredients(HardCase c, Int genus_limit) {
    const CaseData& data = data_of(c);
    HardCaseProof proof;
    proof.id = c;
    proof.f = expected_form(data.printed);
    proof.genus_filter = CongruenceFilter::parse(data.genus_filter);
    proof.base_bound = data.base_bound;
    proof.genus_limit = genus_limit;
    proof.shift = data.shift;
    for (const auto& [when, w] : data.shift_rules) proof.shift_rules.push_back({CongruenceFilter::parse(when), w});

    // the printed form is the transfer of the case's lattice
    const HermLattice& l = reference(data.selector);
    const auto p = signed_permutation_match(proof.f, transfer(l));
    proof.claims.push_back(make_claim("transfer", "f is the transfer of " + l.label + " up to signed permutation",
                                      p.has_value(), p ? p->to_string() : transfer(l).to_string()));
    if (!p) ingredient_failed(c, "printed form is not the transfer of " + std::string(data.selector));

    // f >= g + k w^2, and each member into g (or straight into f)
    Substitution outer;
    if (data.intermediate) {
        proof.intermediate = QuadForm::parse(*data.intermediate);
        const QuadForm target = proof.intermediate->direct_sum(QuadForm::diagonal({data.shift}));
        const Substitution e = search_or_fail(c, proof.f, target, "shift decomposition");
        proof.claims.push_back(make_claim("shift", "f represents " + target.to_string(),
                                          subform_check(proof.f, e, target), e.to_string()));
        outer = Substitution(4, 3);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 3; ++j) outer(i, j) = e(i, j);
        proof.shift_column = e.column(3);
    }
    for (std::size_t i = 0; i < data.members.size(); ++i) {
        const QuadForm g = QuadForm::parse(data.members[i]);
        const std::string id = "embed:g" + std::to_string(i + 1);
        if (proof.intermediate) {
            const Substitution t = search_or_fail(c, *proof.intermediate, g, "member g" + std::to_string(i + 1));
            proof.claims.push_back(make_claim(id, proof.intermediate->to_string() + " represents " + g.to_string(),
                                              subform_check(*proof.intermediate, t, g), t.to_string()));
            proof.members.push_back({g, outer * t});
        } else {
            const Substitution t = search_or_fail(c, proof.f, g, "member g" + std::to_string(i + 1));
            proof.claims.push_back(
                make_claim(id, "f represents " + g.to_string(), subform_check(proof.f, t, g), t.to_string()));
            proof.members.push_back({g, t});
        }
    }

    add_scalings(proof, *p);

    // genus consequence: the filter implies some member represents n
    RepSet genus(genus_limit);
    for (const auto& m : proof.members) {
        const RepSet s = represented_set(m.form, genus_limit);
        for (Int n = 1; n <= genus_limit; ++n)
            if (s.contains(n)) genus.insert(n);
    }
    proof.genus_exceptions = genus.missing(proof.genus_filter);
    std::string listed;
    for (Int n : proof.genus_exceptions) listed += (listed.empty() ? "" : ",") + std::to_string(n);
    proof.claims.push_back(make_claim("genus",
                                      "every n <= " + std::to_string(genus_limit) + " with " +
                                          proof.genus_filter.to_string() + " is represented by a member",
                                      proof.genus_exceptions.empty(),
                                      listed.empty() ? "no exceptions" : "exceptions " + listed, false));
    // the descent only needs the genus above the base table
    const bool covered = std::all_of(proof.genus_exceptions.begin(), proof.genus_exceptions.end(), [&](Int n) {
        return n <= proof.base_bound && represents(proof.f, n).has_value();
    });
    proof.claims.push_back(make_claim("genus-gaps", "every genus exception lies in the base table", covered,
                                      listed.empty() ? "none" : listed));

    if (proof.base_bound > 0) {
        const auto miss = first_exception(proof.f, proof.base_bound);
        proof.claims.push_back(make_claim("base", "f represents 1.." + std::to_string(proof.base_bound), !miss,
                                          miss ? "misses " + std::to_string(*miss) : "complete"));
    }
    return proof;
}

const HardCaseProof& ingredients(HardCase c, Int genus_limit) {
    static std::mutex mutex;
    static std::map<std::pair<HardCase, Int>, std::shared_future<HardCaseProof>> cache;
    std::promise<HardCaseProof> promise;
    std::shared_future<HardCaseProof> future;
    bool owner = false;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find({c, genus_limit});
        if (it == cache.end()) {
            future = promise.get_future().share();
            cache.emplace(std::pair{c, genus_limit}, future);
            owner = true;
        } else {
            future = it->second;
        }
    }
    if (owner) {
        try {
            promise.set_value(verify_ingredients(c, genus_limit));
        } catch (...) {
            promise.set_exception(std::current_exception());
        }
    }
    return future.get();
}

// --- descent ----------------------------------------------------------------

ProofTrace prove(const HardCaseProof& proof, Int n) {
    if (n < 1) throw Error(ErrorKind::TraceFailed, "n must be positive");
    std::vector<const SubstitutionRecord*> scales;
    Int m = n;
    while (m > proof.base_bound) {
        auto it = std::find_if(proof.scalings.begin(), proof.scalings.end(),
                               [&](const SubstitutionRecord& s) { return m % s.lambda == 0; });
        if (it == proof.scalings.end()) break;
        scales.push_back(&*it);
        m /= it->lambda;
    }

    ProofTrace trace;
    trace.target = n;
    std::optional<GenusMemberStep> g = genus_step(proof, m, 0);
    for (auto rule = proof.shift_rules.begin(); !g && rule != proof.shift_rules.end(); ++rule)
        if (rule->when.accepts(m)) g = genus_step(proof, m, rule->w);
    if (g) {
        trace.steps.emplace_back(std::move(*g));
    } else if (m <= proof.base_bound) {
        auto w = represents(proof.f, m);
        if (!w) throw Error(ErrorKind::TraceFailed, std::to_string(m) + " is missing from the base table");
        trace.steps.emplace_back(BaseCase{m, std::move(*w)});
    } else {
        throw Error(ErrorKind::TraceFailed, "no descent step applies to " + std::to_string(m) +
                                                (m == n ? "" : " (reduced from " + std::to_string(n) + ")"));
    }
    trace.values.push_back(m);
    for (auto it = scales.rbegin(); it != scales.rend(); ++it) {
        m *= (*it)->lambda;
        trace.steps.emplace_back(ScaleStep{(*it)->lambda, (*it)->used});
        trace.values.push_back(m);
    }
    return trace;
}

ProofTrace prove(HardCase c, Int n) { return prove(ingredients(c), n); }

// --- verification -----------------------------------------------------------

bool CaseReport::success() const {
    return failures.empty() && !first_exception &&
           std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.holds || !c.essential; });
}

bool HardCaseReport::success() const { return !error && failures.empty() && proof.ingredients_hold(); }

HardCaseReport verify_case(HardCase c, Int limit, Int genus_limit) {
    const auto start = Clock::now();
    HardCaseReport report;
    report.id = c;
    report.limit = limit;
    try {
        report.proof = ingredients(c, genus_limit);
    } catch (const Error& e) {
        report.error = e.what();
        report.elapsed = Clock::now() - start;
        return report;
    }
    const RepSet reachable = represented_set(report.proof.f, limit);
    for (Int n = 1; n <= limit; ++n) {
        try {
            prove(report.proof, n).replay(report.proof.f);
            ++report.proved;
            if (!reachable.contains(n)) report.failures.push_back({n, "proved but not enumerated"});
        } catch (const Error& e) {
            report.failures.push_back({n, e.what()});
        }
    }
    report.elapsed = Clock::now() - start;
    return report;
}

CaseReport verify_lattice(const HermLattice& lattice, std::string selector, Int limit, Int genus_limit) {
    const auto start = Clock::now();
    CaseReport r;
    r.selector = std::move(selector);
    r.label = lattice.label;
    r.m = lattice.ctx.m();
    r.blocks = blocks_to_string(lattice.blocks);
    r.id = classify(lattice);
    r.limit = limit;
    try {
        validate(lattice);
        r.claims.push_back(make_claim("valid", "integral positive definite lattice", true));
    } catch (const Error& e) {
        r.claims.push_back(make_claim("valid", "integral positive definite lattice", false, e.what()));
        r.elapsed = Clock::now() - start;
        return r;
    }
    r.transfer_form = transfer(lattice);
    const QuadForm& t = r.transfer_form;

    if (r.id.printed) {
        const std::string statement = "transfer matches " + std::string(name_of(*r.id.printed));
        try {
            r.match = match_transfer(lattice, *r.id.printed, 500);
            r.claims.push_back(make_claim("match", statement, true, std::string(r.match->kind_name())));
        } catch (const Error& e) {
            r.claims.push_back(make_claim("match", statement, false, e.what()));
        }
    }

    // witness for n on the transfer form, or an explanation
    std::function<IntVec(Int)> witness;
    std::vector<std::optional<IntVec>> table;
    const auto from_table = [&](Int n) -> IntVec {
        const auto& w = table[static_cast<std::size_t>(n)];
        if (!w) throw Error(ErrorKind::TraceFailed, "not represented");
        return *w;
    };

    switch (r.id.strategy) {
        case Strategy::Hard: {
            const HardCaseProof* proof = nullptr;
            try {
                proof = &ingredients(*r.id.hard, genus_limit);
                r.claims.push_back(make_claim("ingredients", "ingredients of " + r.id.name() + " hold",
                                              proof->ingredients_hold()));
            } catch (const Error& e) {
                r.claims.push_back(make_claim("ingredients", "ingredients of " + r.id.name() + " hold", false,
                                              e.what()));
                break;
            }
            if (!r.match || !r.match->permutation) {
                r.note = "no signed permutation to the printed form; witnesses cannot be transported";
                break;
            }
            const Substitution back = r.match->permutation->transpose();
            witness = [proof, back](Int n) { return back.apply(prove(*proof, n).replay(proof->f)); };
            r.note = "descent on the printed form, witnesses moved to the transfer basis";
            break;
        }
        case Strategy::Sublattice: {
            const QuadForm& u = *r.id.subform;
            Substitution e;
            try {
                e = subform_search_auto(t, u);
            } catch (const Error& err) {
                r.claims.push_back(make_claim("subform", "transfer represents " + u.to_string(), false, err.what()));
                break;
            }
            r.claims.push_back(
                make_claim("subform", "transfer represents " + u.to_string(), subform_check(t, e, u), e.to_string()));
            table = witness_table(u, limit);
            r.claims.push_back(make_claim("universal", u.to_string() + " represents 1.." + std::to_string(limit),
                                          std::all_of(table.begin() + 1, table.end(),
                                                      [](const auto& w) { return w.has_value(); })));
            witness = [e, &from_table](Int n) { return e.apply(from_table(n)); };
            r.note = "universal diagonal subform; its universality is taken from the diagonal list and scanned";
            break;
        }
        case Strategy::Diagonal:
            r.claims.push_back(make_claim("diagonal", "transfer is diagonal", t.is_diagonal(), t.to_string()));
            table = witness_table(t, limit);
            witness = from_table;
            r.note = "diagonal quaternary form; checked by direct scan";
            break;
        case Strategy::OneClassGenus:
            table = witness_table(t, limit);
            witness = from_table;
            r.note = "one-class genus; checked by direct scan";
            break;
        case Strategy::DirectScan:
            table = witness_table(t, limit);
            witness = from_table;
            r.note = "not in the case table; checked by direct scan";
            break;
    }

    if (witness) {
        for (Int n = 1; n <= limit; ++n) {
            try {
                const IntVec x = witness(n);
                if (t.eval(x) != n) {
                    r.failures.push_back({n, "witness " + join(x) + " evaluates to " + std::to_string(t.eval(x))});
                    continue;
                }
                ++r.proved;
            } catch (const Error& e) {
                r.failures.push_back({n, e.what()});
            }
        }
    } else {
        r.failures.push_back({1, "no proof strategy could be set up"});
    }
    r.first_exception = first_exception(t, limit);
    r.elapsed = Clock::now() - start;
    return r;
}

std::size_t Summary::passed() const {
    return static_cast<std::size_t>(
        std::count_if(lattices.begin(), lattices.end(), [](const CaseReport& r) { return r.success(); }));
}

bool Summary::success() const {
    return passed() == lattices.size() &&
           std::all_of(cases.begin(), cases.end(), [](const HardCaseReport& c) { return c.success(); });
}

Summary verify_selected(const std::vector<HermLattice>& entries, const std::vector<std::size_t>& positions,
                        Int limit, Int genus_limit) {
    const auto start = Clock::now();
    Summary s;
    s.limit = limit;
    s.genus_limit = genus_limit;

    std::vector<HardCase> used;
    for (std::size_t p : positions)
        if (auto h = classify(entries[p]).hard) used.push_back(*h);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());

    std::vector<std::future<HardCaseReport>> cases;
    for (HardCase c : used)
        cases.push_back(std::async(std::launch::async, [=] { return verify_case(c, limit, genus_limit); }));
    std::vector<std::future<CaseReport>> lattices;
    for (std::size_t p : positions)
        lattices.push_back(std::async(std::launch::async, [&, p] {
            return verify_lattice(entries[p], selector_of(entries, p), limit, genus_limit);
        }));
    for (auto& f : cases) s.cases.push_back(f.get());
    for (auto& f : lattices) s.lattices.push_back(f.get());
    s.elapsed = Clock::now() - start;
    return s;
}

Summary verify_all(const std::vector<HermLattice>& entries, Int limit, Int genus_limit) {
    std::vector<std::size_t> all(entries.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return verify_selected(entries, all, limit, genus_limit);
}

}  // namespace hermu
