#include "frachh/cli.hpp"

#include "frachh/error.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <string_view>
#include <thread>

namespace frachh::cli {

namespace {

const std::vector<double> kAlphaGrid{0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0};
const std::vector<double> kCorpusQ25{1.5, 2.0, 4.0};
const std::vector<double> kCorpusQ26{2.0, 4.0 / 3.0};  // p = 2 and p = 4
constexpr std::size_t kFuzzTrials = 100000;
constexpr double kAuxTolerance = 1e-10;

bool uses_weight(std::string_view thm) {
    return thm == "fejer-classical" || thm == "fejer-fractional" || thm == "identity-2-3" ||
           thm.starts_with("bound-2-") || thm == "lemma-2-1";
}

bool uses_function(std::string_view thm) {
    return thm != "aux-integrals" && thm != "lemma-1-6" && thm != "lemma-2-1";
}

bool uses_alpha(std::string_view thm) {
    return thm != "hh-classical" && thm != "fejer-classical";
}

bool uses_q(std::string_view thm) {
    return thm == "bound-2-5" || thm == "bound-2-6" || thm == "bound-2-7";
}

bool known_theorem(std::string_view thm) {
    return std::find(std::begin(kTheorems), std::end(kTheorems), thm) != std::end(kTheorems);
}

/// Everything one verifier call needs.
struct Job {
    std::string theorem;
    const FunctionSpec* f = nullptr;
    const WeightSpec* g = nullptr;
    Interval iv;
    std::optional<double> alpha;
    std::optional<double> q;
};

Row base_row(const Job& job, std::uint64_t seed) {
    Row r;
    r.theorem = job.theorem;
    r.f = job.f ? job.f->label : "";
    r.g = job.g ? job.g->label : "";
    r.a = job.iv.a;
    r.b = job.iv.b;
    r.alpha = job.alpha;
    if (job.q) {
        r.q = *job.q;
        r.p = HolderPair::from_q(*job.q).p;
    }
    r.seed = seed;
    return r;
}

void fill_meta(Row& r, const ReportMeta& meta) {
    r.evaluations = meta.evaluations;
    r.hypotheses_met = meta.hypotheses_met;
    r.note = meta.note;
}

Row sandwich_row(Row r, const SandwichReport& rep) {
    r.lhs = rep.lhs;
    r.mid = rep.mid;
    r.rhs = rep.rhs;
    r.margin_lower = rep.lower_margin;
    r.margin_upper = rep.upper_margin;
    r.error_budget = rep.error_budget;
    r.status = rep.status;
    fill_meta(r, rep.meta);
    return r;
}

Row bound_row(Row r, const BoundReport& rep) {
    r.observed = rep.observed;
    r.bound = rep.bound;
    r.slack = rep.slack;
    r.error_budget = rep.error_budget;
    r.status = rep.status;
    fill_meta(r, rep.meta);
    return r;
}

Row identity_row(Row r, const IdentityReport& rep) {
    r.lhs = rep.lhs;
    r.rhs = rep.rhs;
    r.observed = rep.residual;
    r.error_budget = rep.error_budget * rep.scale;
    r.status = rep.status;
    fill_meta(r, rep.meta);
    return r;
}

std::vector<Row> aux_rows(const Job& job, const FracSetting& s, std::uint64_t seed) {
    const AuxIntegrals aux = aux_integrals(s);
    auto one = [&](const char* which, double closed, double numeric, double mirror) {
        Row r = base_row(job, seed);
        r.f = which;
        r.lhs = closed;
        r.mid = numeric;
        r.rhs = mirror;
        r.observed = std::max(std::fabs(closed - numeric), std::fabs(closed - mirror));
        r.bound = kAuxTolerance * std::max(1.0, std::fabs(closed));
        r.slack = *r.bound - *r.observed;
        r.error_budget = aux.abs_error;
        r.evaluations = aux.evaluations;
        if (*r.slack < 0.0) {
            r.status = Status::Violated;
        } else {
            r.status = aux.converged ? Status::Holds : Status::Inconclusive;
        }
        return r;
    };
    return {one("e", aux.e_closed, aux.e_numeric, aux.e_numeric_mirror),
            one("f", aux.f_closed, aux.f_numeric, aux.f_numeric_mirror)};
}

Row fuzz_row(const Job& job, std::uint64_t seed) {
    const PowerLemmaFuzz fuzz = power_lemma_fuzz(kFuzzTrials, seed);
    Row r = base_row(job, seed);
    r.a.reset();
    r.b.reset();
    r.observed = fuzz.worst_excess;
    r.bound = 0.0;
    r.slack = -fuzz.worst_excess;
    r.evaluations = fuzz.trials;
    r.status = fuzz.violations == 0 ? Status::Holds : Status::Violated;
    r.note = std::to_string(fuzz.violations) + " violations in " + std::to_string(fuzz.trials) +
             " random triples";
    return r;
}

Row power_lemma_row(const Job& job, std::uint64_t seed) {
    const PowerLemmaResult res = scalar_power_lemma(job.iv.a, job.iv.b, *job.alpha);
    Row r = base_row(job, seed);
    r.lhs = res.lhs;
    r.rhs = res.rhs;
    r.slack = res.rhs - res.lhs;
    r.evaluations = 1;
    r.status = res.holds ? Status::Holds : Status::Violated;
    return r;
}

Row symmetry_row(const Job& job, const FracSetting& s, double tol, std::uint64_t seed) {
    const SymmetryReport rep = check_symmetry_lemma(*job.g, s, tol);
    Row r = base_row(job, seed);
    r.lhs = rep.left;
    r.rhs = rep.right;
    r.observed = rep.gap;
    r.error_budget = rep.error_budget;
    r.evaluations = rep.evaluations;
    r.status = rep.status;
    return r;
}

std::vector<Row> evaluate(const Job& job, const RunConfig& cfg, bool fuzz) {
    VerifyOptions opt;
    opt.tol = cfg.tol;
    opt.force = cfg.force;
    opt.seed = cfg.seed;
    FracSetting s{job.iv.a, job.iv.b, job.alpha.value_or(1.0), cfg.strict_domain};
    const std::string_view thm = job.theorem;
    const Row row = base_row(job, cfg.seed);
    auto pair = [&] { return HolderPair::from_q(*job.q); };

    if (thm == "hh-classical") {
        return {sandwich_row(row, hh_classical(*job.f, job.iv, opt))};
    }
    if (thm == "fejer-classical") {
        return {sandwich_row(row, fejer_classical(*job.f, *job.g, opt))};
    }
    if (thm == "hh-fractional") {
        return {sandwich_row(row, hh_fractional(*job.f, s, opt))};
    }
    if (thm == "fejer-fractional") {
        return {sandwich_row(row, fejer_fractional(*job.f, *job.g, s, opt))};
    }
    if (thm == "identity-1-4") {
        return {identity_row(row, identity_unweighted(*job.f, s, opt))};
    }
    if (thm == "identity-2-3") {
        return {identity_row(row, identity_weighted(*job.f, *job.g, s, opt))};
    }
    if (thm == "bound-1-5") {
        return {bound_row(row, bound_unweighted(*job.f, s, opt))};
    }
    if (thm == "bound-2-4") {
        return {bound_row(row, bound_thm24(*job.f, *job.g, s, opt))};
    }
    if (thm == "bound-2-5") {
        return {bound_row(row, bound_thm25(*job.f, *job.g, s, pair(), opt))};
    }
    if (thm == "bound-2-6") {
        return {bound_row(row, bound_thm26_i(*job.f, *job.g, s, pair(), opt))};
    }
    if (thm == "bound-2-7") {
        return {bound_row(row, bound_thm26_ii(*job.f, *job.g, s, pair(), opt))};
    }
    if (thm == "aux-integrals") {
        return aux_rows(job, s, cfg.seed);
    }
    if (thm == "lemma-1-6") {
        return {fuzz ? fuzz_row(job, cfg.seed) : power_lemma_row(job, cfg.seed)};
    }
    if (thm == "lemma-2-1") {
        return {symmetry_row(job, s, cfg.tol, cfg.seed)};
    }
    throw UsageError("unknown theorem '" + job.theorem + "'");
}

/// Runs jobs on a worker pool; results keep the job order.
std::vector<Row> run_jobs(const std::vector<std::function<std::vector<Row>()>>& jobs, unsigned workers) {
    std::vector<std::vector<Row>> results(jobs.size());
    std::vector<std::exception_ptr> failures(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            try {
                results[i] = jobs[i]();
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, jobs.size()));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
    }
    for (const auto& failure : failures) {
        if (failure) {
            std::rethrow_exception(failure);
        }
    }
    std::vector<Row> rows;
    for (auto& chunk : results) {
        std::move(chunk.begin(), chunk.end(), std::back_inserter(rows));
    }
    return rows;
}

/// A verifier failure inside a corpus run becomes an Inconclusive row.
std::vector<Row> guarded(const Job& job, const RunConfig& cfg, bool fuzz) {
    try {
        return evaluate(job, cfg, fuzz);
    } catch (const EvaluationError& e) {
        Row r = base_row(job, cfg.seed);
        r.status = Status::Inconclusive;
        r.note = e.what();
        return {r};
    }
}

bool eligible(std::string_view thm, const FunctionSpec* f, const WeightSpec* g, Interval iv,
              std::optional<double> alpha, std::optional<double> q) {
    if (f && !f->defined_on(iv)) {
        return false;
    }
    if (g && (!g->symmetric || g->interval.a != iv.a || g->interval.b != iv.b)) {
        return false;
    }
    if (thm.find("hh-") != std::string_view::npos || thm.find("fejer-") != std::string_view::npos) {
        return f->convexity.is_convex() && (!g || g->nonnegative);
    }
    if (thm.starts_with("identity-")) {
        return f->has_derivative();
    }
    if (thm.starts_with("bound-")) {
        if (!f->has_derivative() || !f->convexity.deriv_power_convex(q.value_or(1.0))) {
            return false;
        }
        return thm != "bound-2-7" || *alpha <= 1.0;
    }
    return true;
}

struct Corpora {
    std::vector<FunctionSpec> functions;
    std::map<std::pair<double, double>, std::vector<WeightSpec>> weights;

    const std::vector<WeightSpec>& weights_for(Interval iv) const {
        return weights.at({iv.a, iv.b});
    }
};

Corpora build_corpora(const std::vector<Interval>& intervals, std::uint64_t seed) {
    Corpora c;
    c.functions = builtin_function_corpus(seed);
    for (Interval iv : intervals) {
        c.weights.emplace(std::pair{iv.a, iv.b}, builtin_weight_corpus(iv, seed));
    }
    return c;
}

std::vector<double> q_values(std::string_view thm, const RunConfig& cfg, bool corpus) {
    if (!uses_q(thm)) {
        return {};
    }
    if (!cfg.q.empty()) {
        return cfg.q;
    }
    if (corpus) {
        return thm == "bound-2-5" ? kCorpusQ25 : kCorpusQ26;
    }
    return {2.0};
}

/// Expands one theorem over the given function, weight, alpha and q lists.
void expand(std::vector<Job>& out, std::string_view thm, const std::vector<const FunctionSpec*>& fs,
            const std::vector<const WeightSpec*>& gs, Interval iv, const std::vector<double>& alphas,
            const std::vector<double>& qs, bool filter) {
    const std::vector<const FunctionSpec*> f_list =
        uses_function(thm) ? fs : std::vector<const FunctionSpec*>{nullptr};
    const std::vector<const WeightSpec*> g_list =
        uses_weight(thm) ? gs : std::vector<const WeightSpec*>{nullptr};
    std::vector<std::optional<double>> a_list;
    if (uses_alpha(thm)) {
        a_list.assign(alphas.begin(), alphas.end());
    } else {
        a_list.push_back(std::nullopt);
    }
    std::vector<std::optional<double>> q_list;
    if (uses_q(thm)) {
        q_list.assign(qs.begin(), qs.end());
    } else {
        q_list.push_back(std::nullopt);
    }
    for (const FunctionSpec* f : f_list) {
        for (const WeightSpec* g : g_list) {
            for (auto alpha : a_list) {
                for (auto q : q_list) {
                    if (filter && !eligible(thm, f, g, iv, alpha, q)) {
                        continue;
                    }
                    out.push_back(Job{std::string(thm), f, g, iv, alpha, q});
                }
            }
        }
    }
}

std::vector<Row> run_corpus(const RunConfig& cfg, const std::vector<double>& alphas) {
    std::vector<Interval> intervals{{0.0, 1.0}, {1.0, 3.0}};
    if (!cfg.strict_domain) {
        intervals.push_back({-1.0, 2.0});
    }
    const Corpora corpora = build_corpora(intervals, cfg.seed);
    std::vector<const FunctionSpec*> fs;
    for (const auto& f : corpora.functions) {
        fs.push_back(&f);
    }

    std::vector<Job> jobs;
    for (Interval iv : intervals) {
        std::vector<const WeightSpec*> gs;
        for (const auto& g : corpora.weights_for(iv)) {
            gs.push_back(&g);
        }
        for (std::string_view thm : kTheorems) {
            if (thm == "lemma-1-6") {
                continue;
            }
            expand(jobs, thm, fs, gs, iv, alphas, q_values(thm, cfg, true), true);
        }
    }
    jobs.push_back(Job{"lemma-1-6", nullptr, nullptr, Interval{0.0, 1000.0}, std::nullopt, std::nullopt});

    std::vector<std::function<std::vector<Row>()>> tasks;
    tasks.reserve(jobs.size());
    for (const Job& job : jobs) {
        const bool fuzz = job.theorem == "lemma-1-6";
        tasks.emplace_back([&job, &cfg, fuzz] { return guarded(job, cfg, fuzz); });
    }
    return run_jobs(tasks, cfg.jobs);
}

std::vector<Row> run_single(const RunConfig& cfg, const std::vector<std::string>& theorems,
                            const std::vector<double>& alphas, bool sweep) {
    const Interval iv{cfg.a, cfg.b};
    const Corpora corpora = build_corpora({iv}, cfg.seed);
    const FunctionSpec* f = nullptr;
    const WeightSpec* g = nullptr;
    try {
        f = &find_function(corpora.functions, cfg.f_label);
        g = &find_weight(corpora.weights_for(iv), cfg.g_label);
    } catch (const PreconditionError& e) {
        throw UsageError(e.what());
    }

    std::vector<Job> jobs;
    for (const std::string& thm : theorems) {
        expand(jobs, thm, {f}, {g}, iv, alphas, q_values(thm, cfg, false), false);
    }
    std::vector<std::function<std::vector<Row>()>> tasks;
    for (const Job& job : jobs) {
        tasks.emplace_back([&job, &cfg] { return evaluate(job, cfg, false); });
    }
    std::vector<Row> rows = run_jobs(tasks, cfg.jobs);

    if (sweep) {
        // Ratios to bound-2-4 are reported as observations only.
        const double g_sup = sup_norm(*g);
        for (Row& r : rows) {
            if (!r.theorem.starts_with("bound-2-") || r.theorem == "bound-2-4" || !f->deriv) {
                continue;
            }
            const FracSetting s{iv.a, iv.b, *r.alpha, cfg.strict_domain};
            const double base = bound_constant_2_4(s, g_sup, (*f->deriv)(iv.a), (*f->deriv)(iv.b));
            if (base > 0.0) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "ratio to bound-2-4: %.17g", *r.bound / base);
                r.note += std::string(r.note.empty() ? "" : "; ") + buf;
            }
        }
    }
    return rows;
}

} // namespace

void validate(const RunConfig& cfg) {
    if (!(cfg.tol > 0.0) || !std::isfinite(cfg.tol)) {
        throw UsageError("tolerance must be positive");
    }
    if (!(cfg.a < cfg.b) || !std::isfinite(cfg.a) || !std::isfinite(cfg.b)) {
        throw UsageError("interval requires a < b");
    }
    if (cfg.strict_domain && cfg.a < 0.0) {
        throw UsageError("--strict requires a >= 0");
    }
    for (double alpha : cfg.alpha) {
        if (!(alpha > 0.0) || !std::isfinite(alpha)) {
            throw UsageError("alpha grid values must be positive");
        }
    }
    for (double q : cfg.q) {
        if (!(q > 1.0) || !std::isfinite(q)) {
            throw UsageError("q values must exceed 1");
        }
    }
    if (!cfg.theorem.empty() && !known_theorem(cfg.theorem)) {
        std::string known;
        for (std::string_view t : kTheorems) {
            known += (known.empty() ? "" : ", ") + std::string(t);
        }
        throw UsageError("unknown theorem '" + cfg.theorem + "'; known: " + known);
    }
    if (cfg.command == Command::Verify && cfg.theorem.empty()) {
        throw UsageError("verify needs --thm");
    }
}

std::vector<Row> run(const RunConfig& cfg) {
    validate(cfg);
    switch (cfg.command) {
    case Command::Verify:
        return run_single(cfg, {cfg.theorem}, cfg.alpha.empty() ? std::vector{0.5} : cfg.alpha, false);
    case Command::Identity:
        return run_single(cfg, {"identity-1-4", "identity-2-3"},
                          cfg.alpha.empty() ? std::vector{0.5} : cfg.alpha, false);
    case Command::Sweep:
        return run_single(cfg, {cfg.theorem.empty() ? "fejer-fractional" : cfg.theorem},
                          cfg.alpha.empty() ? kAlphaGrid : cfg.alpha, true);
    case Command::Corpus:
        return run_corpus(cfg, cfg.alpha.empty() ? kAlphaGrid : cfg.alpha);
    }
    return {};
}

int exit_code(const std::vector<Row>& rows) {
    bool inconclusive = false;
    for (const Row& r : rows) {
        if (r.status == Status::Violated) {
            return kExitViolated;
        }
        inconclusive = inconclusive || r.status == Status::Inconclusive;
    }
    return inconclusive ? kExitInconclusive : kExitHolds;
}

} // namespace frachh::cli
