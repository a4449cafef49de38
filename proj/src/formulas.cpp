#include "pg/formulas.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "pg/arith.hpp"
#include "pg/errors.hpp"

namespace pg {

namespace {

// Shared arithmetic core; reads gamma only on tau, alpha only off tau.
long long bound_value(const std::vector<long long>& primes,
                      const std::vector<int>& alpha,
                      const std::vector<int>& tau,
                      const std::vector<int>& gamma,
                      const std::vector<int>& beta) {
    long long order = 1;
    long long phi_order = 1;
    long long outer = 1;
    long long inner = 1;
    std::size_t t = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (t < tau.size() && static_cast<std::size_t>(tau[t]) == i) {
            long long below = checked_pow(primes[i], beta[i] - 1);
            order = checked_mul(order, checked_mul(below, primes[i]));
            phi_order = checked_mul(phi_order, checked_mul(below, primes[i] - 1));
            inner = checked_mul(inner, checked_pow(primes[i], gamma[i]) - below);
            ++t;
        } else {
            outer = checked_mul(outer, checked_pow(primes[i], alpha[i]));
        }
    }
    return checked_add(order - phi_order, checked_mul(outer, inner)) - 1;
}

void validate_context(const DegreeContext& ctx) {
    const std::size_t r = ctx.primes.size();
    if (r == 0) throw DomainError("degree context has no primes");
    if (ctx.alpha.size() != r || ctx.gamma.size() != r || ctx.beta.size() != r)
        throw DomainError("degree context has inconsistent dimensions");
    for (std::size_t i = 0; i < r; ++i) {
        if (ctx.primes[i] < 2 || (i > 0 && ctx.primes[i] <= ctx.primes[i - 1]))
            throw DomainError("degree context primes must be ascending and at least 2");
        if (ctx.alpha[i] < 1) throw DomainError("degree context alpha exponent below 1");
        if (ctx.gamma[i] < 1 || ctx.gamma[i] > ctx.alpha[i])
            throw DomainError("degree context gamma exponent outside [1, alpha]");
    }
    if (ctx.tau.empty()) throw DomainError("degree context requires nonempty support");
    std::vector<bool> on(r, false);
    int prev = -1;
    for (int i : ctx.tau) {
        if (i <= prev || static_cast<std::size_t>(i) >= r)
            throw DomainError("degree context support must be ascending prime indices");
        prev = i;
        on[i] = true;
    }
    for (std::size_t i = 0; i < r; ++i) {
        if (on[i]) {
            if (ctx.beta[i] < 1 || ctx.beta[i] > ctx.gamma[i])
                throw DomainError("degree context beta exponent outside [1, gamma]");
        } else if (ctx.beta[i] != 0) {
            throw DomainError("degree context beta exponent nonzero off the support");
        }
    }
}

std::string fail_line(const NilpotentGroup& g, const char* relation,
                      const char* a_label, int a, long long deg_a,
                      const char* b_label, int b, long long deg_b) {
    std::ostringstream os;
    os << relation << " fails: " << a_label << " = " << g.element_name(a)
       << " has degree " << deg_a << ", " << b_label << " = " << g.element_name(b)
       << " has degree " << deg_b;
    return os.str();
}

void record(PropositionStats& st, bool ok, const NilpotentGroup& g, const char* relation,
            const char* a_label, int a, long long deg_a,
            const char* b_label, int b, long long deg_b) {
    ++st.instances;
    if (!ok) {
        ++st.failures;
        if (st.first_failure.empty())
            st.first_failure = fail_line(g, relation, a_label, a, deg_a, b_label, b, deg_b);
    }
}

PropositionStats mindeg_in_pi_stats(const PowerGraphView& view, const MaximalCyclicAnalysis& mca) {
    const NilpotentGroup& g = view.group();
    PropositionStats st;
    st.name = "mindeg_in_pi";
    for (int k = 0; k < g.num_primes(); ++k) {
        const long long min_order = mca.min_order_sylow_maximal(k).order;
        for (const CyclicSubgroup& sub : mca.sylow_maximal(k)) {
            if (sub.order != min_order) continue;
            for (int y : sub.generators(g)) {
                for (int x : g.sylow_members(k)) {
                    record(st, view.degree(y) <= view.degree(x), g, "deg(y_k) <= deg(x_k)",
                           "y_k", y, view.degree(y), "x_k", x, view.degree(x));
                }
            }
        }
    }
    return st;
}

PropositionStats rem2_stats(const PowerGraphView& view, const MaximalCyclicAnalysis& mca) {
    const NilpotentGroup& g = view.group();
    PropositionStats st;
    st.name = "rem2";
    // Elements whose every supported component generates a maximal cyclic
    // subgroup of its Sylow subgroup: exactly those generating a maximal
    // cyclic subgroup of the Sylow product over their support.  Same support
    // plus same order must then give the same degree, so one degree class
    // per (support, order) key verifies all pairs at once.
    std::map<std::pair<unsigned, long long>, std::vector<int>> classes;
    for (int x = 0; x < g.order(); ++x) {
        if (x == g.identity()) continue;
        SylowDecomposition d = g.sylow_decompose(x);
        bool all_maximal = true;
        for (int i : d.tau) {
            if (!mca.is_sylow_maximal_member(i, d.components[i])) {
                all_maximal = false;
                break;
            }
        }
        if (!all_maximal) continue;
        unsigned mask = 0;
        for (int i : d.tau) mask |= 1u << i;
        classes[{mask, g.element_order(x)}].push_back(x);
    }
    for (const auto& [key, xs] : classes) {
        const long long c = static_cast<long long>(xs.size());
        const long long pairs = c * (c - 1) / 2;
        st.instances += pairs;
        std::map<long long, long long> by_degree;
        for (int x : xs) ++by_degree[view.degree(x)];
        if (by_degree.size() <= 1) continue;
        long long agreeing = 0;
        for (const auto& [deg, cnt] : by_degree) agreeing += cnt * (cnt - 1) / 2;
        st.failures += pairs - agreeing;
        if (st.first_failure.empty()) {
            const int x0 = xs.front();
            for (int x : xs) {
                if (view.degree(x) != view.degree(x0)) {
                    st.first_failure = fail_line(g, "deg(x) == deg(y)", "x", x0, view.degree(x0),
                                                 "y", x, view.degree(x));
                    break;
                }
            }
        }
    }
    return st;
}

std::pair<PropositionStats, PropositionStats> propcomp_stats(const PowerGraphView& view,
                                                             const MaximalCyclicAnalysis& mca) {
    const NilpotentGroup& g = view.group();
    const Factorization& f = g.order_factorization();
    const int r = g.num_primes();
    PropositionStats part_i;
    part_i.name = "propcomp(i)";
    PropositionStats part_ii;
    part_ii.name = "propcomp(ii)";
    for (const CyclicSubgroup& m : mca.maximal()) {
        for (int y : m.generators(g)) {
            SylowDecomposition d = g.sylow_decompose(y);
            for (unsigned mask = 1; mask + 1 < (1u << r); ++mask) {
                int x = g.identity();
                bool dropped_all_cyclic = true;
                std::vector<long long> kept_primes;
                for (int i = 0; i < r; ++i) {
                    if (mask >> i & 1u) {
                        x = g.mul(x, d.components[i]);
                        kept_primes.push_back(f.prime(i));
                    } else if (!g.sylow_cyclic(i)) {
                        dropped_all_cyclic = false;
                    }
                }
                if (dropped_all_cyclic) {
                    record(part_i, view.degree(y) > view.degree(x), g, "deg(y) > deg(x)",
                           "y", y, view.degree(y), "x", x, view.degree(x));
                } else if (two_phi_holds(kept_primes)) {
                    record(part_ii, view.degree(y) < view.degree(x), g, "deg(y) < deg(x)",
                           "y", y, view.degree(y), "x", x, view.degree(x));
                }
            }
        }
    }
    return {part_i, part_ii};
}

PropositionStats proplessthan_stats(const PowerGraphView& view, const MaximalCyclicAnalysis& mca) {
    const NilpotentGroup& g = view.group();
    const Factorization& f = g.order_factorization();
    PropositionStats st;
    st.name = "proplessthan";
    for (int y = 0; y < g.order(); ++y) {
        if (y == g.identity()) continue;
        SylowDecomposition dy = g.sylow_decompose(y);
        for (int k : dy.tau) {
            const int x = g.power(y, f.prime(k));
            if (x == g.identity()) continue;
            SylowDecomposition dx = g.sylow_decompose(x);
            if (dx.tau.size() < 2) continue;
            if (!std::binary_search(dx.tau.begin(), dx.tau.end(), k)) continue;
            if (mca.count_containing_hall(x) != 1) continue;
            std::vector<long long> support_primes;
            for (int i : dx.tau) support_primes.push_back(f.prime(i));
            if (!two_phi_holds(support_primes)) continue;
            for (int l : dx.tau) {
                if (l <= k) continue;
                if (mca.is_sylow_maximal_member(l, dy.components[l])) continue;
                record(st, view.degree(y) < view.degree(x), g, "deg(y) < deg(x)",
                       "y", y, view.degree(y), "x", x, view.degree(x));
            }
        }
    }
    return st;
}

PropositionStats prop_abelian_stats(const PowerGraphView& view) {
    const NilpotentGroup& g = view.group();
    const Factorization& f = g.order_factorization();
    const int r = g.num_primes();
    PropositionStats st;
    st.name = "prop.abelian";
    for (int x = 0; x < g.order(); ++x) {
        if (x == g.identity()) continue;
        const std::vector<int> tau = g.tau(x);
        for (int k : tau) {
            if (g.sylow_center_cyclic(k)) continue;
            bool gate = (r == 3);
            if (!gate) {
                std::vector<long long> rest;
                for (int i : tau)
                    if (i != k) rest.push_back(f.prime(i));
                gate = two_phi_holds(rest);
            }
            if (!gate) continue;
            const int xp = g.power(x, f.prime(k));
            record(st, view.degree(x) <= view.degree(xp), g, "deg(x) <= deg(x^p_k)",
                   "x", x, view.degree(x), "x^p_k", xp, view.degree(xp));
        }
    }
    return st;
}

PropositionStats lem32_stats(const PowerGraphView& view) {
    const NilpotentGroup& g = view.group();
    const Factorization& f = g.order_factorization();
    PropositionStats st;
    st.name = "lem32";
    for (int y = 0; y < g.order(); ++y) {
        if (g.element_order(y) != g.order()) continue;
        for (int i = 0; i < g.num_primes(); ++i) {
            for (int low = 0; low < f.exponent(i); ++low) {
                const int a = g.power(y, checked_pow(f.prime(i), low));
                for (int high = low + 1; high <= f.exponent(i); ++high) {
                    const int b = g.power(y, checked_pow(f.prime(i), high));
                    record(st, view.degree(a) > view.degree(b), g,
                           "deg(y^{p^low}) > deg(y^{p^high})",
                           "y^{p^low}", a, view.degree(a), "y^{p^high}", b, view.degree(b));
                }
            }
        }
    }
    return st;
}

}  // namespace

DegreeContext make_degree_context(const NilpotentGroup& g, int x, const CyclicSubgroup& m) {
    if (x == g.identity()) throw DomainError("degree context requires a nonidentity element");
    if (!m.contains(x)) throw DomainError("element lies outside the given cyclic subgroup");
    const Factorization& f = g.order_factorization();
    const int r = f.num_primes();

    DegreeContext ctx;
    ctx.primes.resize(r);
    ctx.alpha.resize(r);
    ctx.gamma.assign(r, 0);
    ctx.beta.assign(r, 0);
    for (int i = 0; i < r; ++i) {
        ctx.primes[i] = f.prime(i);
        ctx.alpha[i] = f.exponent(i);
    }

    // gamma_i from |m cap P_i|: count the members whose order is a p_i-power.
    std::vector<long long> counts(r, 0);
    for (int y : m.members) {
        const long long o = g.element_order(y);
        for (int i = 0; i < r; ++i) {
            long long q = o;
            while (q % f.prime(i) == 0) q /= f.prime(i);
            if (q == 1) ++counts[i];
        }
    }
    long long product = 1;
    for (int i = 0; i < r; ++i) {
        const int gv = valuation(counts[i], f.prime(i));
        if (checked_pow(f.prime(i), gv) != counts[i])
            throw StructureError("cyclic subgroup meets a Sylow subgroup in a non-prime-power set");
        ctx.gamma[i] = gv;
        product = checked_mul(product, counts[i]);
    }
    if (product != m.order)
        throw StructureError("Sylow intersection sizes do not multiply to the subgroup order");

    ctx.tau = g.tau(x);
    const long long ox = g.element_order(x);
    for (int i : ctx.tau) ctx.beta[i] = valuation(ox, f.prime(i));

    validate_context(ctx);
    return ctx;
}

long long degree_lower_bound(const DegreeContext& ctx) {
    validate_context(ctx);
    return bound_value(ctx.primes, ctx.alpha, ctx.tau, ctx.gamma, ctx.beta);
}

std::optional<long long> closed_form_degree(const MaximalCyclicAnalysis& mca, int x) {
    const NilpotentGroup& g = mca.group();
    if (x == g.identity())
        throw DomainError("closed form requires a nonidentity element; the identity has degree |G|-1");
    const Factorization& f = g.order_factorization();
    const SylowDecomposition d = g.sylow_decompose(x);

    std::vector<long long> primes(f.num_primes());
    std::vector<int> alpha(f.num_primes());
    std::vector<int> gamma(f.num_primes(), 1);
    std::vector<int> beta(f.num_primes(), 0);
    for (int i = 0; i < f.num_primes(); ++i) {
        primes[i] = f.prime(i);
        alpha[i] = f.exponent(i);
    }
    const long long ox = g.element_order(x);
    for (int i : d.tau) {
        if (mca.count_sylow_containing(i, d.components[i]) != 1) return std::nullopt;
        const CyclicSubgroup& sub = mca.unique_sylow_maximal(i, d.components[i]);
        gamma[i] = valuation(sub.order, f.prime(i));
        beta[i] = valuation(ox, f.prime(i));
    }
    return bound_value(primes, alpha, d.tau, gamma, beta);
}

bool CatalogReport::all_passed() const {
    for (const PropositionStats& st : propositions)
        if (st.failures != 0) return false;
    return true;
}

long long CatalogReport::total_instances() const {
    long long total = 0;
    for (const PropositionStats& st : propositions) total += st.instances;
    return total;
}

const PropositionStats& CatalogReport::find(const std::string& name) const {
    for (const PropositionStats& st : propositions)
        if (st.name == name) return st;
    throw DomainError("unknown proposition name: " + name);
}

CatalogReport verify_proposition_catalog(const PowerGraphView& view,
                                         const MaximalCyclicAnalysis& mca) {
    if (&view.group() != &mca.group())
        throw DomainError("catalog verification needs the view and the analysis to share one group");
    const NilpotentGroup& g = view.group();

    PropositionStats mindeg;
    mindeg.name = "mindeg_in_pi";
    PropositionStats rem2;
    rem2.name = "rem2";
    PropositionStats comp_i;
    comp_i.name = "propcomp(i)";
    PropositionStats comp_ii;
    comp_ii.name = "propcomp(ii)";
    PropositionStats lessthan;
    lessthan.name = "proplessthan";
    PropositionStats abelian;
    abelian.name = "prop.abelian";
    PropositionStats cyc32;
    cyc32.name = "lem32";

    if (g.num_primes() >= 2) {
        mindeg = mindeg_in_pi_stats(view, mca);
        rem2 = rem2_stats(view, mca);
        std::tie(comp_i, comp_ii) = propcomp_stats(view, mca);
        lessthan = proplessthan_stats(view, mca);
        if (g.is_cyclic()) {
            cyc32 = lem32_stats(view);
        } else {
            abelian = prop_abelian_stats(view);
        }
    }

    CatalogReport rep;
    rep.propositions = {std::move(mindeg), std::move(rem2), std::move(comp_i),
                        std::move(comp_ii), std::move(lessthan), std::move(abelian),
                        std::move(cyc32)};
    return rep;
}

}  // namespace pg
