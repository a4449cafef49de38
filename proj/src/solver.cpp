#include "pg/solver.hpp"

#include <algorithm>
#include <sstream>

#include "pg/arith.hpp"
#include "pg/errors.hpp"
#include "pg/formulas.hpp"

namespace pg {

namespace {

constexpr Method kAssessedMethods[] = {
    Method::CompletePGroupCyclic, Method::PGroup,         Method::ThmMain3I,
    Method::ThmMain3II,           Method::ThmMain4,       Method::Prop27PPSNew,
    Method::ThmMain5,             Method::ThmMain2Candidates,
    Method::CorAbelian1i,         Method::CorAbelian1ii,  Method::CorAbelian1iii,
    Method::CorAbelian2,
};

constexpr Method kDispatchOrder[] = {
    Method::CompletePGroupCyclic, Method::PGroup,   Method::ThmMain3I,
    Method::ThmMain3II,           Method::ThmMain4, Method::Prop27PPSNew,
    Method::ThmMain5,             Method::ThmMain2Candidates,
};

// Structural facts every hypothesis set draws on.
struct Shape {
    int r = 0;
    bool cyclic = false;
    bool abelian = false;
    std::vector<long long> primes;
    std::vector<bool> sylow_cyclic;
    std::vector<bool> center_cyclic;
    std::vector<int> noncyclic;        // J, ascending 0-based indices
};

Shape probe(const NilpotentGroup& g) {
    Shape s;
    s.r = g.num_primes();
    s.cyclic = g.is_cyclic();
    s.abelian = g.is_abelian();
    for (int i = 0; i < s.r; ++i) {
        s.primes.push_back(g.order_factorization().prime(i));
        s.sylow_cyclic.push_back(g.sylow_cyclic(i));
        s.center_cyclic.push_back(g.sylow_center_cyclic(i));
        if (!g.sylow_cyclic(i)) s.noncyclic.push_back(i);
    }
    return s;
}

std::string set_text(const std::vector<int>& ids) {
    std::ostringstream os;
    os << "{";
    for (std::size_t t = 0; t < ids.size(); ++t) os << (t ? "," : "") << ids[t] + 1;
    os << "}";
    return os.str();
}

HypothesisCondition cond_noncyclic(const Shape& s) {
    return {"G is noncyclic", !s.cyclic};
}

HypothesisCondition cond_abelian(const Shape& s) {
    return {"G is abelian", s.abelian};
}

HypothesisCondition cond_r_at_least(const Shape& s, int bound) {
    std::ostringstream os;
    os << "r >= " << bound << " (r = " << s.r << ")";
    return {os.str(), s.r >= bound};
}

HypothesisCondition cond_r_equals(const Shape& s, int value) {
    std::ostringstream os;
    os << "r = " << value << " (r = " << s.r << ")";
    return {os.str(), s.r == value};
}

HypothesisCondition cond_sylow(const Shape& s, int i, bool want_cyclic) {
    std::ostringstream os;
    os << "P_" << i + 1 << " (p = " << s.primes[i] << ") is "
       << (want_cyclic ? "cyclic" : "noncyclic");
    return {os.str(), s.sylow_cyclic[i] == want_cyclic};
}

HypothesisCondition cond_center_noncyclic(const Shape& s, int j) {
    std::ostringstream os;
    os << "Z(P_" << j + 1 << ") (p = " << s.primes[j] << ") is noncyclic";
    return {os.str(), !s.center_cyclic[j]};
}

// 2*phi(prod of the given primes) >= prod, with the numbers spelled out.
HypothesisCondition cond_two_phi(const std::vector<long long>& primes, const std::string& suffix) {
    long long rad = 1;
    long long phi = 1;
    for (long long p : primes) {
        rad = checked_mul(rad, p);
        phi = checked_mul(phi, p - 1);
    }
    std::ostringstream os;
    os << "2*phi(" << rad << ") = " << 2 * phi << " >= " << rad << suffix;
    return {os.str(), 2 * phi >= rad};
}

MethodAssessment assess_one(Method m, const Shape& s) {
    MethodAssessment a;
    a.method = m;
    std::vector<HypothesisCondition>& c = a.conditions;
    switch (m) {
        case Method::CompletePGroupCyclic:
            c.push_back({"G is cyclic", s.cyclic});
            c.push_back({"the group order has at most one prime divisor (r = " +
                             std::to_string(s.r) + ")",
                         s.r <= 1});
            break;
        case Method::PGroup:
            c.push_back({"the group order is a power of a single prime (r = " +
                             std::to_string(s.r) + ")",
                         s.r == 1});
            break;
        case Method::ThmMain3I:
            c.push_back(cond_noncyclic(s));
            c.push_back(cond_r_at_least(s, 2));
            for (int j : s.noncyclic) c.push_back(cond_center_noncyclic(s, j));
            c.push_back({"J != [r] (J = " + set_text(s.noncyclic) + ")",
                         static_cast<int>(s.noncyclic.size()) != s.r});
            if (s.r >= 1) c.push_back(cond_two_phi(s.primes, ""));
            break;
        case Method::ThmMain3II:
            c.push_back(cond_noncyclic(s));
            c.push_back(cond_r_at_least(s, 2));
            for (int j : s.noncyclic) c.push_back(cond_center_noncyclic(s, j));
            c.push_back({"J = [r] (J = " + set_text(s.noncyclic) + ")",
                         static_cast<int>(s.noncyclic.size()) == s.r});
            for (int l = 0; l < s.r; ++l) {
                std::vector<long long> rest;
                for (int i = 0; i < s.r; ++i)
                    if (i != l) rest.push_back(s.primes[i]);
                std::ostringstream suffix;
                suffix << " (excluding p_" << l + 1 << " = " << s.primes[l] << ")";
                c.push_back(cond_two_phi(rest, suffix.str()));
            }
            break;
        case Method::ThmMain4:
            c.push_back(cond_r_equals(s, 3));
            for (int j = 0; j < s.r; ++j) c.push_back(cond_center_noncyclic(s, j));
            break;
        case Method::Prop27PPSNew:
            c.push_back(cond_r_equals(s, 2));
            if (s.r == 2) {
                c.push_back(cond_sylow(s, 0, false));
                c.push_back(cond_sylow(s, 1, true));
            }
            break;
        case Method::ThmMain5:
            c.push_back(cond_r_equals(s, 2));
            if (s.r == 2) {
                c.push_back(cond_sylow(s, 0, true));
                c.push_back(cond_center_noncyclic(s, 1));
            }
            break;
        case Method::ThmMain2Candidates:
            c.push_back(cond_noncyclic(s));
            c.push_back(cond_r_at_least(s, 2));
            if (s.r >= 1) c.push_back(cond_two_phi(s.primes, ""));
            break;
        case Method::CorAbelian1i:
            c.push_back(cond_abelian(s));
            c.push_back(cond_noncyclic(s));
            c.push_back(cond_r_equals(s, 2));
            if (s.r == 2) {
                c.push_back(cond_sylow(s, 0, false));
                c.push_back(cond_sylow(s, 1, false));
            }
            break;
        case Method::CorAbelian1ii:
            c.push_back(cond_abelian(s));
            c.push_back(cond_noncyclic(s));
            c.push_back(cond_r_equals(s, 2));
            if (s.r == 2) {
                c.push_back(cond_sylow(s, 0, false));
                c.push_back(cond_sylow(s, 1, true));
            }
            break;
        case Method::CorAbelian1iii:
            c.push_back(cond_abelian(s));
            c.push_back(cond_noncyclic(s));
            c.push_back(cond_r_equals(s, 2));
            if (s.r == 2) {
                c.push_back(cond_sylow(s, 0, true));
                c.push_back(cond_sylow(s, 1, false));
            }
            break;
        case Method::CorAbelian2:
            c.push_back(cond_abelian(s));
            c.push_back(cond_r_equals(s, 3));
            for (int j = 0; j < s.r; ++j) c.push_back(cond_sylow(s, j, false));
            break;
        case Method::BruteForce:
            break;
    }
    a.applicable = std::all_of(c.begin(), c.end(),
                               [](const HypothesisCondition& h) { return h.holds; });
    return a;
}

long long closed_or_throw(const MaximalCyclicAnalysis& mca, int x) {
    std::optional<long long> d = closed_form_degree(mca, x);
    if (!d)
        throw StructureError("closed form unexpectedly inapplicable for witness " +
                             mca.group().element_name(x));
    return *d;
}

SolveResult run_method(const NilpotentGroup& g, const MaximalCyclicAnalysis& mca, Method m,
                       std::vector<HypothesisCondition> trace, const SolveOptions& opts) {
    SolveResult res;
    res.method = m;
    res.hypothesis_trace = std::move(trace);
    switch (m) {
        case Method::CompletePGroupCyclic:
            res.witness = mca.min_order_maximal().canonical_generator;
            res.delta = g.order() - 1;
            break;
        case Method::PGroup:
        case Method::ThmMain3II:
        case Method::ThmMain4:
        case Method::CorAbelian1i:
        case Method::CorAbelian2:
            res.witness = mca.min_order_maximal().canonical_generator;
            res.delta = closed_or_throw(mca, res.witness);
            break;
        case Method::Prop27PPSNew:
        case Method::CorAbelian1ii:
            res.witness = mca.min_order_sylow_maximal(0).canonical_generator;
            res.delta = closed_or_throw(mca, res.witness);
            break;
        case Method::ThmMain5:
        case Method::CorAbelian1iii:
            res.witness = mca.min_order_sylow_maximal(1).canonical_generator;
            res.delta = closed_or_throw(mca, res.witness);
            break;
        case Method::ThmMain3I: {
            const Factorization& f = g.order_factorization();
            const int y = mca.min_order_maximal().canonical_generator;
            long long best = -1;
            int best_witness = -1;
            for (int k = 0; k < g.num_primes(); ++k) {
                if (!g.sylow_cyclic(k)) continue;
                const int w = g.power(y, f.prime_power(k));
                const long long d = closed_or_throw(mca, w);
                if (best < 0 || d < best) {
                    best = d;
                    best_witness = w;
                }
            }
            if (best_witness < 0)
                throw StructureError("no cyclic Sylow subgroup despite J != [r]");
            res.witness = best_witness;
            res.delta = best;
            break;
        }
        case Method::ThmMain2Candidates: {
            res.candidates_examined = candidate_set(mca);
            long long best = -1;
            int best_witness = -1;
            for (int x : res.candidates_examined) {
                const long long d = closed_or_throw(mca, x);
                if (best < 0 || d < best) {
                    best = d;
                    best_witness = x;
                }
            }
            res.witness = best_witness;
            res.delta = best;
            break;
        }
        case Method::BruteForce: {
            PowerGraphView view(g, opts.brute_cap);
            res.delta = view.min_degree();
            res.witness = view.argmin().front();
            break;
        }
    }
    return res;
}

}  // namespace

const char* method_tag(Method m) {
    switch (m) {
        case Method::CompletePGroupCyclic: return "COMPLETE_PGROUP_CYCLIC";
        case Method::PGroup: return "P_GROUP";
        case Method::ThmMain3I: return "THM_MAIN3_I";
        case Method::ThmMain3II: return "THM_MAIN3_II";
        case Method::ThmMain4: return "THM_MAIN4";
        case Method::Prop27PPSNew: return "PROP_2_7_PPSNEW";
        case Method::ThmMain5: return "THM_MAIN5";
        case Method::ThmMain2Candidates: return "THM_MAIN2_CANDIDATES";
        case Method::CorAbelian1i: return "COR_ABELIAN1_i";
        case Method::CorAbelian1ii: return "COR_ABELIAN1_ii";
        case Method::CorAbelian1iii: return "COR_ABELIAN1_iii";
        case Method::CorAbelian2: return "COR_ABELIAN2";
        case Method::BruteForce: return "BRUTE_FORCE";
    }
    return "UNKNOWN";
}

std::optional<Method> method_from_tag(const std::string& tag) {
    for (Method m : kAssessedMethods)
        if (tag == method_tag(m)) return m;
    if (tag == method_tag(Method::BruteForce)) return Method::BruteForce;
    return std::nullopt;
}

std::vector<MethodAssessment> assess_methods(const NilpotentGroup& g) {
    const Shape s = probe(g);
    std::vector<MethodAssessment> out;
    for (Method m : kAssessedMethods) out.push_back(assess_one(m, s));
    return out;
}

std::vector<MethodAssessment> applicable_methods(const NilpotentGroup& g) {
    std::vector<MethodAssessment> out;
    for (MethodAssessment& a : assess_methods(g))
        if (a.applicable) out.push_back(std::move(a));
    return out;
}

int uniqueness_depth(const MaximalCyclicAnalysis& mca, int y, int i) {
    const NilpotentGroup& g = mca.group();
    if (i < 0 || i >= g.num_primes()) throw DomainError("prime index out of range");
    if (!mca.is_maximal_member(y))
        throw DomainError("uniqueness depth requires a generator of a maximal cyclic subgroup");
    const long long p = g.order_factorization().prime(i);
    const int gamma = valuation(g.element_order(y), p);
    for (int lambda = gamma; lambda >= 0; --lambda) {
        const int x = g.power(y, checked_pow(p, lambda));
        if (mca.count_containing(x) == 1) return lambda;
    }
    throw StructureError("maximal cyclic generator contained in several maximal subgroups");
}

std::vector<int> candidate_set(const MaximalCyclicAnalysis& mca) {
    const NilpotentGroup& g = mca.group();
    const Factorization& f = g.order_factorization();
    const int r = g.num_primes();
    if (r < 2)
        throw HypothesisError("the candidate set requires at least two prime divisors (r = " +
                              std::to_string(r) + ")");
    std::vector<long long> primes;
    for (int i = 0; i < r; ++i) primes.push_back(f.prime(i));
    if (!two_phi_holds(primes)) {
        long long rad = 1;
        for (long long p : primes) rad = checked_mul(rad, p);
        throw HypothesisError("the candidate set requires 2*phi(" + std::to_string(rad) +
                              ") >= " + std::to_string(rad) + ", which fails here");
    }
    std::vector<int> out;
    for (const CyclicSubgroup& m : mca.maximal()) {
        const int y = m.canonical_generator;
        for (int i = 0; i < r; ++i) {
            const int lambda = uniqueness_depth(mca, y, i);
            out.push_back(g.power(y, checked_pow(f.prime(i), lambda)));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SolveResult solve_min_degree(const NilpotentGroup& g, const MaximalCyclicAnalysis& mca,
                             const SolveOptions& opts) {
    if (&mca.group() != &g)
        throw DomainError("solver needs the analysis built from the same group");

    if (opts.force_method) {
        const Method m = *opts.force_method;
        if (m == Method::BruteForce) return run_method(g, mca, m, {}, opts);
        const Shape s = probe(g);
        MethodAssessment a = assess_one(m, s);
        if (!a.applicable) {
            std::string why = "its hypotheses fail";
            for (const HypothesisCondition& h : a.conditions) {
                if (!h.holds) {
                    why = "condition fails: " + h.condition;
                    break;
                }
            }
            throw HypothesisError(std::string("method ") + method_tag(m) +
                                  " is not applicable; " + why);
        }
        return run_method(g, mca, m, std::move(a.conditions), opts);
    }

    if (opts.force_brute) return run_method(g, mca, Method::BruteForce, {}, opts);

    const Shape s = probe(g);
    for (Method m : kDispatchOrder) {
        MethodAssessment a = assess_one(m, s);
        if (a.applicable) return run_method(g, mca, m, std::move(a.conditions), opts);
    }
    return run_method(g, mca, Method::BruteForce, {}, opts);
}

}  // namespace pg
