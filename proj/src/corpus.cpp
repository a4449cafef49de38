#include "pg/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <utility>

#include "pg/errors.hpp"
#include "pg/mincut.hpp"

namespace pg {
namespace {

using nlohmann::ordered_json;

constexpr int kMaxMessages = 4;

struct CheckTagEntry {
    Check check;
    const char* tag;
};

constexpr CheckTagEntry kCheckTags[] = {
    {Check::SolverVsOracle, "SOLVER_VS_ORACLE"},
    {Check::Catalog, "CATALOG"},
    {Check::Eq1Tightness, "EQ1_TIGHTNESS"},
    {Check::KappaEqDelta, "KAPPA_EQ_DELTA"},
    {Check::CandidateContainment, "CANDIDATE_CONTAINMENT"},
};

void add_failure(CheckOutcome& out, std::string msg) {
    ++out.failures;
    if (static_cast<int>(out.messages.size()) < kMaxMessages) {
        out.messages.push_back(std::move(msg));
    } else if (static_cast<int>(out.messages.size()) == kMaxMessages) {
        out.messages.push_back("further failures suppressed");
    }
}

long long ceiling_for(Check c, const VerifyOptions& opts) {
    switch (c) {
        case Check::SolverVsOracle: return opts.oracle_ceiling;
        case Check::Catalog: return opts.catalog_ceiling;
        case Check::Eq1Tightness: return opts.eq1_ceiling;
        case Check::KappaEqDelta: return opts.kappa_ceiling;
        case Check::CandidateContainment: return opts.eq1_ceiling;
    }
    return 0;
}

// Canonical order, deduplicated; empty selection means everything.
std::vector<Check> selected_checks(const VerifyOptions& opts) {
    if (opts.checks.empty()) return all_checks();
    std::vector<Check> sel;
    for (Check c : all_checks()) {
        if (std::find(opts.checks.begin(), opts.checks.end(), c) != opts.checks.end()) {
            sel.push_back(c);
        }
    }
    return sel;
}

std::vector<long long> primes_at(const Factorization& f, const std::vector<int>& idx) {
    std::vector<long long> ps;
    ps.reserve(idx.size());
    for (int i : idx) ps.push_back(f.prime(i));
    return ps;
}

std::vector<long long> all_prime_divisors(const Factorization& f) {
    std::vector<long long> ps;
    for (int i = 0; i < f.num_primes(); ++i) ps.push_back(f.prime(i));
    return ps;
}

// Partitions of n into descending parts, lexicographically descending:
// partitions(4) = [4], [3,1], [2,2], [2,1,1], [1,1,1,1].
std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> result;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            result.push_back(cur);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            rec(remaining - part, part);
            cur.pop_back();
        }
    };
    rec(n, n);
    return result;
}

// Recompute each method's conclusion without its hypotheses, to spot cases
// where a recipe still attains the minimum even though its hypotheses fail.
// Returns nullopt when the recipe does not even make sense for the group.
std::optional<long long> recipe_probe(const NilpotentGroup& g, const MaximalCyclicAnalysis& mca,
                                      Method m) {
    try {
        const int r = g.num_primes();
        switch (m) {
            case Method::ThmMain3II:
            case Method::ThmMain4: {
                int y = mca.min_order_maximal().canonical_generator;
                if (y == g.identity()) return std::nullopt;
                return closed_form_degree(mca, y);
            }
            case Method::Prop27PPSNew: {
                if (r < 1) return std::nullopt;
                int y = mca.min_order_sylow_maximal(0).canonical_generator;
                if (y == g.identity()) return std::nullopt;
                return closed_form_degree(mca, y);
            }
            case Method::ThmMain5: {
                if (r < 2) return std::nullopt;
                int y = mca.min_order_sylow_maximal(1).canonical_generator;
                if (y == g.identity()) return std::nullopt;
                return closed_form_degree(mca, y);
            }
            case Method::ThmMain3I: {
                if (r < 2) return std::nullopt;
                int y = mca.min_order_maximal().canonical_generator;
                if (y == g.identity()) return std::nullopt;
                const Factorization& f = g.order_factorization();
                std::optional<long long> best;
                for (int k = 0; k < r; ++k) {
                    if (!g.sylow_cyclic(k)) continue;
                    int w = g.power(y, f.prime_power(k));
                    if (w == g.identity()) continue;
                    std::optional<long long> d = closed_form_degree(mca, w);
                    if (d && (!best || *d < *best)) best = d;
                }
                return best;
            }
            default:
                return std::nullopt;
        }
    } catch (const Error&) {
        return std::nullopt;
    }
}

void run_oracle_check(const NilpotentGroup& g, const MaximalCyclicAnalysis& mca,
                      const PowerGraphView& view, const SolveResult& solved,
                      const VerifyOptions& opts, GroupRecord& rec, CheckOutcome& out) {
    rec.oracle_ran = true;
    rec.delta_oracle = view.min_degree();
    rec.agree = rec.delta_solver == rec.delta_oracle;
    if (!rec.agree) {
        add_failure(out, "delta mismatch: solver " + std::to_string(rec.delta_solver) +
                             ", graph " + std::to_string(rec.delta_oracle));
    }
    const std::vector<int>& argmin = view.argmin();
    if (!std::binary_search(argmin.begin(), argmin.end(), solved.witness)) {
        add_failure(out, "witness " + g.element_name(solved.witness) +
                             " does not attain the minimum degree");
    }
    if (view.degree(g.identity()) != g.order() - 1) {
        add_failure(out, "identity degree " + std::to_string(view.degree(g.identity())) +
                             " differs from " + std::to_string(g.order() - 1));
    }
    bool cyclic_prime_power = g.is_cyclic() && g.num_primes() <= 1;
    if (view.complete() != cyclic_prime_power) {
        add_failure(out, std::string("completeness mismatch: graph ") +
                             (view.complete() ? "complete" : "incomplete") +
                             ", group is " + (cyclic_prime_power ? "" : "not ") +
                             "cyclic of prime power order");
    }

    std::vector<MethodAssessment> assessed = assess_methods(g);
    for (const MethodAssessment& ma : assessed) {
        if (!ma.applicable) continue;
        SolveOptions fo;
        fo.brute_cap = opts.brute_cap;
        fo.force_method = ma.method;
        SolveResult fr = solve_min_degree(g, mca, fo);
        if (fr.delta != rec.delta_oracle) {
            add_failure(out, std::string("method ") + method_tag(ma.method) + " yields delta " +
                                 std::to_string(fr.delta) + " but the graph minimum is " +
                                 std::to_string(rec.delta_oracle));
        }
    }

    // Near misses, purely informational: hypotheses fail, recipe still lands.
    static constexpr Method kNoteMethods[] = {Method::ThmMain3I, Method::ThmMain3II,
                                              Method::ThmMain4, Method::Prop27PPSNew,
                                              Method::ThmMain5};
    for (Method m : kNoteMethods) {
        bool applicable = false;
        for (const MethodAssessment& ma : assessed) {
            if (ma.method == m) applicable = ma.applicable;
        }
        if (applicable) continue;
        std::optional<long long> probed = recipe_probe(g, mca, m);
        if (probed && *probed == rec.delta_oracle) {
            rec.notes.push_back(std::string(method_tag(m)) +
                                " hypotheses fail here, yet its witness recipe attains the "
                                "minimum degree " +
                                std::to_string(rec.delta_oracle));
        }
    }
}

void harvest_catalog(const CatalogReport& report, CheckOutcome& out) {
    for (const PropositionStats& st : report.propositions) {
        out.failures += st.failures;
        if (st.failures > 0 && static_cast<int>(out.messages.size()) < kMaxMessages) {
            out.messages.push_back(st.name + ": " + st.first_failure);
        }
    }
}

void run_eq1_check(const NilpotentGroup& g, const MaximalCyclicAnalysis& mca,
                   const PowerGraphView& view, CheckOutcome& out) {
    const int n = g.order();
    for (int x = 0; x < n; ++x) {
        if (x == g.identity()) continue;
        const long long deg = view.degree(x);
        const long long hall = mca.count_containing_hall(x);
        bool contained = false;
        for (const CyclicSubgroup& m : mca.maximal()) {
            if (!m.contains(x)) continue;
            contained = true;
            DegreeContext ctx = make_degree_context(g, x, m);
            long long bound = degree_lower_bound(ctx);
            if (deg < bound) {
                add_failure(out, "degree " + std::to_string(deg) + " of " + g.element_name(x) +
                                     " is below the bound " + std::to_string(bound));
            }
            if ((deg == bound) != (hall == 1)) {
                add_failure(out, "tightness mismatch for " + g.element_name(x) + ": bound " +
                                     std::to_string(bound) + ", degree " + std::to_string(deg) +
                                     ", hall containment count " + std::to_string(hall));
            }
        }
        if (!contained) {
            add_failure(out, "element " + g.element_name(x) +
                                 " lies in no maximal cyclic subgroup");
        }
        std::optional<long long> closed = closed_form_degree(mca, x);
        if (hall == 1) {
            if (!closed) {
                add_failure(out, "closed form undefined for " + g.element_name(x) +
                                     " despite unique hall containment");
            } else if (*closed != deg) {
                add_failure(out, "closed form " + std::to_string(*closed) + " for " +
                                     g.element_name(x) + " differs from graph degree " +
                                     std::to_string(deg));
            }
        } else if (closed) {
            add_failure(out, "closed form defined for " + g.element_name(x) +
                                 " despite hall containment count " + std::to_string(hall));
        }
    }
}

void run_kappa_check(const PowerGraphView& view, const VerifyOptions& opts, CheckOutcome& out) {
    long long kappa = edge_connectivity(view, opts.kappa_ceiling);
    if (kappa != view.min_degree()) {
        add_failure(out, "edge connectivity " + std::to_string(kappa) +
                             " differs from minimum degree " +
                             std::to_string(view.min_degree()));
    }
    if (!view.diameter_at_most_two()) {
        add_failure(out, "power graph diameter exceeds two");
    }
}

void run_argmin_check(const NilpotentGroup& g, const MaximalCyclicAnalysis& mca,
                      const PowerGraphView& view, CheckOutcome& out) {
    const int r = g.num_primes();
    if (g.is_cyclic() || r < 2) {
        out.ran = false;
        return;
    }
    const Factorization& f = g.order_factorization();
    const bool radical_full = two_phi_holds(all_prime_divisors(f));
    const std::vector<int>& argmin = view.argmin();

    if (radical_full) {
        std::vector<int> cands = candidate_set(mca);
        bool hit = false;
        for (int x : argmin) {
            if (std::binary_search(cands.begin(), cands.end(), x)) {
                hit = true;
                break;
            }
        }
        if (!hit) add_failure(out, "no minimum-degree element lies in the candidate set");
    }

    for (int x : argmin) {
        const long long containing = mca.count_containing(x);
        if (radical_full && containing != 1) {
            add_failure(out, "minimum-degree element " + g.element_name(x) + " lies in " +
                                 std::to_string(containing) +
                                 " maximal cyclic subgroups under the radical condition");
        }
        if (containing != 1) continue;

        std::vector<int> tau = g.tau(x);
        std::vector<int> off_support;
        for (int k = 0; k < r; ++k) {
            if (!std::binary_search(tau.begin(), tau.end(), k)) off_support.push_back(k);
        }
        for (int k : off_support) {
            if (!g.sylow_cyclic(k)) {
                add_failure(out, "Sylow subgroup for p = " + std::to_string(f.prime(k)) +
                                     " is noncyclic yet misses the support of minimum-degree "
                                     "element " +
                                     g.element_name(x));
            }
        }

        if (!two_phi_holds(primes_at(f, tau))) continue;
        if (off_support.size() > 1) {
            add_failure(out, "support of minimum-degree element " + g.element_name(x) +
                                 " misses " + std::to_string(off_support.size()) +
                                 " primes under the radical condition");
        }
        if (off_support.size() == 1) {
            const int k = off_support.front();
            const CyclicSubgroup* unique = nullptr;
            for (const CyclicSubgroup& m : mca.maximal()) {
                if (m.contains(x)) {
                    unique = &m;
                    break;
                }
            }
            const long long shift = f.prime_power(k);
            bool shifted_generator = false;
            for (int y : unique->generators(g)) {
                if (g.power(y, shift) == x) {
                    shifted_generator = true;
                    break;
                }
            }
            if (!shifted_generator) {
                add_failure(out, "minimum-degree element " + g.element_name(x) + " is not the " +
                                     std::to_string(shift) +
                                     "-th power of a generator of its maximal cyclic subgroup");
            }
        }
    }
}

GroupRecord verify_group(const GroupSpec& spec, const std::vector<Check>& selected,
                         const VerifyOptions& opts) {
    const auto started = std::chrono::steady_clock::now();
    GroupRecord rec;
    rec.spec = spec.text();
    rec.order = spec.order();
    try {
        NilpotentGroup g = spec.build();
        MaximalCyclicAnalysis mca(g);

        SolveOptions sopts;
        sopts.brute_cap = opts.brute_cap;
        SolveResult solved = solve_min_degree(g, mca, sopts);
        rec.method = method_tag(solved.method);
        rec.delta_solver = solved.delta;
        rec.hypothesis_trace = solved.hypothesis_trace;

        long long view_ceiling = 0;
        for (Check c : selected) view_ceiling = std::max(view_ceiling, ceiling_for(c, opts));
        std::optional<PowerGraphView> view;
        if (rec.order <= view_ceiling) view.emplace(g, view_ceiling);

        for (Check c : selected) {
            CheckOutcome out;
            out.name = check_tag(c);
            out.ran = rec.order <= ceiling_for(c, opts);
            if (out.ran) {
                switch (c) {
                    case Check::SolverVsOracle:
                        run_oracle_check(g, mca, *view, solved, opts, rec, out);
                        break;
                    case Check::Catalog:
                        rec.catalog = verify_proposition_catalog(*view, mca);
                        rec.catalog_ran = true;
                        harvest_catalog(rec.catalog, out);
                        break;
                    case Check::Eq1Tightness:
                        run_eq1_check(g, mca, *view, out);
                        break;
                    case Check::KappaEqDelta:
                        run_kappa_check(*view, opts, out);
                        break;
                    case Check::CandidateContainment:
                        run_argmin_check(g, mca, *view, out);
                        break;
                }
            }
            rec.checks.push_back(std::move(out));
        }
    } catch (const CapacityError&) {
        throw;
    } catch (const Error& e) {
        CheckOutcome out;
        out.name = "construction";
        out.ran = true;
        add_failure(out, e.what());
        rec.checks.push_back(std::move(out));
    }
    rec.timing_us = std::chrono::duration_cast<std::chrono::microseconds>(
                        std::chrono::steady_clock::now() - started)
                        .count();
    return rec;
}

ordered_json trace_json(const std::vector<HypothesisCondition>& trace) {
    ordered_json arr = ordered_json::array();
    for (const HypothesisCondition& c : trace) {
        ordered_json entry;
        entry["condition"] = c.condition;
        entry["holds"] = c.holds;
        arr.push_back(std::move(entry));
    }
    return arr;
}

ordered_json record_json(const GroupRecord& rec, bool include_timing) {
    ordered_json o;
    o["spec"] = rec.spec;
    o["order"] = rec.order;
    o["method"] = rec.method;
    o["delta_solver"] = rec.delta_solver;
    if (rec.oracle_ran) {
        o["delta_oracle"] = rec.delta_oracle;
        o["agree"] = rec.agree;
    } else {
        o["delta_oracle"] = nullptr;
        o["agree"] = nullptr;
    }
    o["hypothesis_trace"] = trace_json(rec.hypothesis_trace);
    ordered_json checks = ordered_json::array();
    for (const CheckOutcome& c : rec.checks) {
        ordered_json co;
        co["name"] = c.name;
        co["ran"] = c.ran;
        co["failures"] = c.failures;
        if (!c.messages.empty()) co["messages"] = c.messages;
        checks.push_back(std::move(co));
    }
    o["checks"] = std::move(checks);
    if (rec.catalog_ran) o["catalog"] = catalog_json(rec.catalog);
    if (!rec.notes.empty()) o["notes"] = rec.notes;
    if (include_timing) o["timing_us"] = rec.timing_us;
    return o;
}

}  // namespace

const char* check_tag(Check c) {
    for (const CheckTagEntry& e : kCheckTags) {
        if (e.check == c) return e.tag;
    }
    throw DomainError("unknown check");
}

std::optional<Check> check_from_tag(const std::string& tag) {
    for (const CheckTagEntry& e : kCheckTags) {
        if (tag == e.tag) return e.check;
    }
    return std::nullopt;
}

std::vector<Check> all_checks() {
    std::vector<Check> cs;
    for (const CheckTagEntry& e : kCheckTags) cs.push_back(e.check);
    return cs;
}

long long GroupRecord::failure_count() const {
    long long total = 0;
    for (const CheckOutcome& c : checks) total += c.failures;
    return total;
}

std::vector<GroupSpec> enumerate_abelian(long long max_order) {
    if (max_order < 2) throw DomainError("abelian enumeration requires max_order >= 2");
    std::vector<GroupSpec> specs;
    for (long long n = 2; n <= max_order; ++n) {
        Factorization f = factorize(n);
        std::vector<std::vector<std::vector<int>>> per_prime;
        per_prime.reserve(f.factors.size());
        for (const PrimePower& pp : f.factors) per_prime.push_back(partitions(pp.exponent));
        std::vector<size_t> pick(per_prime.size(), 0);
        while (true) {
            std::vector<long long> parts;
            for (size_t i = 0; i < per_prime.size(); ++i) {
                for (int e : per_prime[i][pick[i]]) {
                    parts.push_back(checked_pow(f.prime(static_cast<int>(i)), e));
                }
            }
            specs.push_back(spec_from_prime_powers(std::move(parts)));
            int i = static_cast<int>(pick.size()) - 1;
            while (i >= 0 && ++pick[i] == per_prime[i].size()) {
                pick[i] = 0;
                --i;
            }
            if (i < 0) break;
        }
    }
    return specs;
}

std::vector<GroupSpec> nonabelian_catalog() {
    // Chosen so every closed-form method and every fallback shape occurs on a
    // nonabelian group, with both cyclic and noncyclic Sylow centers.
    static const char* const kEntries[] = {
        "Q8",                  // 2-group, cyclic center
        "D8",                  // 2-group, cyclic center
        "M16",                 // 2-group, cyclic center, exponent 8
        "Heis27",              // 3-group, cyclic center, exponent 3
        "Q8 x D8",             // 2-group product, order 64
        "C3 x Heis27",         // 3-group with noncyclic center, order 81
        "Q8 x C5",             // noncyclic x cyclic, order 40
        "Q8 x C9",             // noncyclic x cyclic, order 72
        "D8 x C9",             // noncyclic x cyclic, order 72
        "M16 x C3",            // noncyclic x cyclic, order 48
        "Heis27 x C5",         // odd noncyclic x cyclic, order 135
        "C2 x Heis27",         // cyclic x noncyclic with cyclic center, order 54
        "C2 x C3 x Heis27",    // cyclic x noncyclic with noncyclic center, order 162
        "D8 x Heis27",         // both noncyclic, cyclic centers, order 216
        "Q8 x C3 x C3",        // noncyclic x noncyclic abelian part, order 72
        "C3 x Heis27 x C5",    // noncyclic center beside a cyclic Sylow, order 405
        "Heis27 x C5 x C5",    // noncyclic centers, radical condition holds, order 675
    };
    std::vector<GroupSpec> specs;
    specs.reserve(std::size(kEntries));
    for (const char* entry : kEntries) specs.push_back(parse_group_spec(entry));
    return specs;
}

VerificationReport verify(const VerifyOptions& opts) {
    if (opts.max_order < 2) throw DomainError("verification requires max_order >= 2");
    if (opts.max_order > opts.brute_cap) {
        throw CapacityError("corpus max order " + std::to_string(opts.max_order) +
                            " exceeds the brute-force cap " + std::to_string(opts.brute_cap));
    }
    const std::vector<Check> selected = selected_checks(opts);

    VerificationReport rep;
    rep.options = opts;
    std::vector<GroupSpec> corpus = enumerate_abelian(opts.max_order);
    if (opts.include_nonabelian) {
        for (GroupSpec& s : nonabelian_catalog()) {
            if (s.order() <= opts.max_order) corpus.push_back(std::move(s));
        }
    }

    for (const GroupSpec& spec : corpus) {
        rep.records.push_back(verify_group(spec, selected, opts));
    }

    rep.groups_checked = static_cast<long long>(rep.records.size());
    for (const GroupRecord& rec : rep.records) {
        rep.failure_count += rec.failure_count();
        if (!rec.method.empty()) ++rep.method_counts[rec.method];
        if (rec.catalog_ran) {
            for (const PropositionStats& st : rec.catalog.propositions) {
                rep.catalog_instances[st.name] += st.instances;
                if (st.vacuous()) ++rep.catalog_vacuous[st.name];
            }
        }
    }
    return rep;
}

ordered_json catalog_json(const CatalogReport& report) {
    ordered_json arr = ordered_json::array();
    for (const PropositionStats& st : report.propositions) {
        ordered_json o;
        o["name"] = st.name;
        o["instances"] = st.instances;
        o["failures"] = st.failures;
        if (!st.first_failure.empty()) o["first_failure"] = st.first_failure;
        arr.push_back(std::move(o));
    }
    return arr;
}

ordered_json report_json(const VerificationReport& rep, bool include_timing) {
    ordered_json o;
    ordered_json opt;
    opt["max_order"] = rep.options.max_order;
    opt["include_nonabelian"] = rep.options.include_nonabelian;
    ordered_json sel = ordered_json::array();
    for (Check c : selected_checks(rep.options)) sel.push_back(check_tag(c));
    opt["checks"] = std::move(sel);
    opt["oracle_ceiling"] = rep.options.oracle_ceiling;
    opt["kappa_ceiling"] = rep.options.kappa_ceiling;
    opt["eq1_ceiling"] = rep.options.eq1_ceiling;
    opt["catalog_ceiling"] = rep.options.catalog_ceiling;
    opt["brute_cap"] = rep.options.brute_cap;
    o["options"] = std::move(opt);
    o["groups_checked"] = rep.groups_checked;
    o["failures"] = rep.failure_count;
    o["method_counts"] = rep.method_counts;
    o["catalog_instances"] = rep.catalog_instances;
    o["catalog_vacuous"] = rep.catalog_vacuous;
    ordered_json records = ordered_json::array();
    for (const GroupRecord& rec : rep.records) records.push_back(record_json(rec, include_timing));
    o["records"] = std::move(records);
    return o;
}

ordered_json solve_result_json(const NilpotentGroup& g, const SolveResult& res) {
    ordered_json o;
    o["delta"] = res.delta;
    ordered_json witness;
    witness["index"] = res.witness;
    witness["element"] = g.element_name(res.witness);
    witness["order"] = g.element_order(res.witness);
    o["witness"] = std::move(witness);
    o["method"] = method_tag(res.method);
    o["hypothesis_trace"] = trace_json(res.hypothesis_trace);
    if (!res.candidates_examined.empty()) {
        ordered_json cands = ordered_json::array();
        for (int c : res.candidates_examined) cands.push_back(g.element_name(c));
        o["candidates"] = std::move(cands);
    }
    return o;
}

}  // namespace pg
