#include "pg/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace pg {

namespace {

constexpr long long kMaxGroupOrder = 1'000'000;

int table_element_order(const CayleyTable& t, int id, int x) {
    int acc = x, o = 1;
    while (acc != id) {
        acc = t.mul[acc * t.order + x];
        ++o;
        if (o > t.order) throw StructureError("table is not a group: no finite element order");
    }
    return o;
}

long long egcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) { x = 1; y = 0; return a; }
    long long x1, y1;
    long long g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

long long mod_inverse(long long a, long long m) {
    long long x, y;
    long long g = egcd(((a % m) + m) % m, m, x, y);
    if (g != 1) throw DomainError("mod_inverse: arguments not coprime");
    return ((x % m) + m) % m;
}

}  // namespace

SmallGroup::SmallGroup(CayleyTable t, std::vector<std::string> element_names) : table(std::move(t)) {
    const int n = table.order;
    if (n <= 0) throw StructureError("table group must be nonempty");
    if (n > kMaxOrder) throw CapacityError("table order exceeds validation cap");
    if (static_cast<int>(table.mul.size()) != n * n)
        throw StructureError("table size does not match order");
    for (int v : table.mul)
        if (v < 0 || v >= n) throw StructureError("table entry out of range");

    // Latin-square property: every row and column is a permutation.
    std::vector<bool> seen(n);
    for (int a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), false);
        for (int b = 0; b < n; ++b) {
            int v = mul(a, b);
            if (seen[v]) throw StructureError("table row is not a permutation");
            seen[v] = true;
        }
        std::fill(seen.begin(), seen.end(), false);
        for (int b = 0; b < n; ++b) {
            int v = mul(b, a);
            if (seen[v]) throw StructureError("table column is not a permutation");
            seen[v] = true;
        }
    }

    identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
        if (ok) { identity = e; break; }
    }
    if (identity < 0) throw StructureError("table has no identity");

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw StructureError("table is not associative");

    inverse.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul(a, b) == identity) { inverse[a] = b; break; }
        if (inverse[a] < 0) throw StructureError("table element has no inverse");
    }

    element_order.resize(n);
    for (int a = 0; a < n; ++a) element_order[a] = table_element_order(table, identity, a);

    abelian = true;
    for (int a = 0; a < n && abelian; ++a)
        for (int b = a + 1; b < n; ++b)
            if (mul(a, b) != mul(b, a)) { abelian = false; break; }

    for (int z = 0; z < n; ++z) {
        bool central = true;
        for (int a = 0; a < n && central; ++a) central = mul(z, a) == mul(a, z);
        if (central) center.push_back(z);
    }

    if (!element_names.empty()) {
        if (static_cast<int>(element_names.size()) != n)
            throw StructureError("element name list does not match order");
        names = std::move(element_names);
    } else {
        names.resize(n);
        for (int a = 0; a < n; ++a) names[a] = std::to_string(a);
    }
}

int SmallGroup::name_to_index(const std::string& s) const {
    for (int a = 0; a < order(); ++a)
        if (names[a] == s) return a;
    return -1;
}

long long Atom::prime() const {
    Factorization f = factorize(size());
    if (f.num_primes() != 1) throw DomainError("atom order is not a prime power");
    return f.prime(0);
}

std::string Atom::display() const {
    if (is_cyclic()) return "C" + std::to_string(cyclic_order);
    return tbl->table.name;
}

NilpotentGroup NilpotentGroup::from_abelian(std::vector<long long> prime_powers) {
    std::vector<Atom> atoms;
    for (long long q : prime_powers) {
        if (q < 2) throw DomainError("cyclic factor must have order >= 2");
        atoms.push_back(Atom{q, nullptr});
    }
    return from_atoms(std::move(atoms));
}

NilpotentGroup NilpotentGroup::from_table(CayleyTable t, std::vector<std::string> names) {
    auto g = std::make_shared<SmallGroup>(std::move(t), std::move(names));
    NilpotencyCheck nc = check_nilpotent(*g);
    if (!nc.nilpotent)
        throw HypothesisError("table group is not nilpotent: Sylow " + std::to_string(nc.prime) +
                              "-subgroup is not unique");
    NilpotentGroup r;
    r.atoms_.push_back(Atom{0, std::move(g)});
    r.finish_construction();
    return r;
}

NilpotentGroup NilpotentGroup::from_atoms(std::vector<Atom> atoms) {
    if (atoms.empty()) throw DomainError("group needs at least one atom");
    for (const Atom& a : atoms) {
        if (a.is_cyclic()) {
            Factorization f = factorize(a.cyclic_order);
            if (a.cyclic_order < 2 || f.num_primes() != 1)
                throw DomainError("cyclic atom order must be a prime power >= 2");
        } else {
            if (!a.tbl) throw DomainError("null table atom");
            if (factorize(a.tbl->order()).num_primes() != 1)
                throw StructureError("table atoms in a product must be p-groups");
        }
    }
    // Canonical atom order: prime ascending, then cyclic before table, then
    // size, then display name.  This makes spec printing stable and keeps the
    // Sylow subgroups contiguous.
    std::stable_sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
        auto key = [](const Atom& x) {
            return std::tuple<long long, int, long long, std::string>(
                x.prime(), x.is_cyclic() ? 0 : 1, x.size(), x.display());
        };
        return key(a) < key(b);
    });
    NilpotentGroup r;
    r.atoms_ = std::move(atoms);
    r.finish_construction();
    return r;
}

void NilpotentGroup::finish_construction() {
    const int m = static_cast<int>(atoms_.size());
    long long n = 1;
    for (const Atom& a : atoms_) n = checked_mul(n, a.size());
    if (n > kMaxGroupOrder) throw CapacityError("group order exceeds construction cap");
    n_ = static_cast<int>(n);
    fact_ = factorize(n_);

    strides_.assign(m, 1);
    for (int i = m - 2; i >= 0; --i) strides_[i] = strides_[i + 1] * atoms_[i + 1].size();

    coords_.resize(static_cast<size_t>(n_) * m);
    for (int x = 0; x < n_; ++x) {
        long long rest = x;
        for (int i = 0; i < m; ++i) {
            coords_[static_cast<size_t>(x) * m + i] = static_cast<int>(rest / strides_[i]);
            rest %= strides_[i];
        }
    }

    long long id = 0;
    for (int i = 0; i < m; ++i)
        if (!atoms_[i].is_cyclic()) id += atoms_[i].tbl->identity * strides_[i];
    identity_ = static_cast<int>(id);

    abelian_ = true;
    for (const Atom& a : atoms_)
        if (!a.is_cyclic() && !a.tbl->abelian) abelian_ = false;

    element_order_.resize(n_);
    max_element_order_ = 1;
    for (int x = 0; x < n_; ++x) {
        long long o = 1;
        const int* c = &coords_[static_cast<size_t>(x) * m];
        for (int i = 0; i < m; ++i) {
            long long oi;
            if (atoms_[i].is_cyclic()) {
                long long q = atoms_[i].cyclic_order;
                oi = q / std::gcd(q, static_cast<long long>(c[i]));
            } else {
                oi = atoms_[i].tbl->element_order[c[i]];
            }
            o = std::lcm(o, oi);
        }
        element_order_[x] = static_cast<int>(o);
        max_element_order_ = std::max(max_element_order_, element_order_[x]);
    }

    const int r = fact_.num_primes();
    sylow_members_.assign(r, {});
    sylow_cyclic_.assign(r, false);
    for (int x = 0; x < n_; ++x) {
        for (int i = 0; i < r; ++i) {
            int o = element_order_[x];
            long long p = fact_.prime(i);
            while (o % p == 0) o = static_cast<int>(o / p);
            if (o == 1) sylow_members_[i].push_back(x);
        }
    }
    for (int i = 0; i < r; ++i) {
        long long pi = fact_.prime_power(i);
        if (static_cast<long long>(sylow_members_[i].size()) != pi)
            throw StructureError("Sylow member count mismatch; group is not nilpotent");
        int mx = 1;
        for (int x : sylow_members_[i]) mx = std::max(mx, element_order_[x]);
        sylow_cyclic_[i] = mx == pi;
    }
}

int NilpotentGroup::mul(int a, int b) const {
    const int m = static_cast<int>(atoms_.size());
    const int* ca = &coords_[static_cast<size_t>(a) * m];
    const int* cb = &coords_[static_cast<size_t>(b) * m];
    long long out = 0;
    for (int i = 0; i < m; ++i) {
        long long ci;
        if (atoms_[i].is_cyclic()) {
            long long q = atoms_[i].cyclic_order;
            ci = (ca[i] + cb[i]) % q;
        } else {
            ci = atoms_[i].tbl->mul(ca[i], cb[i]);
        }
        out += ci * strides_[i];
    }
    return static_cast<int>(out);
}

int NilpotentGroup::inverse(int a) const {
    const int m = static_cast<int>(atoms_.size());
    const int* ca = &coords_[static_cast<size_t>(a) * m];
    long long out = 0;
    for (int i = 0; i < m; ++i) {
        long long ci;
        if (atoms_[i].is_cyclic()) {
            long long q = atoms_[i].cyclic_order;
            ci = (q - ca[i]) % q;
        } else {
            ci = atoms_[i].tbl->inverse[ca[i]];
        }
        out += ci * strides_[i];
    }
    return static_cast<int>(out);
}

int NilpotentGroup::power(int a, long long k) const {
    int o = element_order_[a];
    k %= o;
    if (k < 0) k += o;
    int acc = identity_, base = a;
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

SylowDecomposition NilpotentGroup::sylow_decompose(int x) const {
    const int r = fact_.num_primes();
    SylowDecomposition d;
    d.components.resize(r);
    for (int i = 0; i < r; ++i) {
        // Exponent congruent to 1 mod p_i^{a_i} and 0 mod the complement, so
        // the power lands on the p_i-part of x.
        long long qi = fact_.prime_power(i);
        long long rest = n_ / qi;
        long long mi = rest == 1 ? 1 : checked_mul(rest, mod_inverse(rest % qi, qi)) % n_;
        d.components[i] = power(x, mi);
        if (d.components[i] != identity_) d.tau.push_back(i);
    }
    return d;
}

std::vector<int> NilpotentGroup::tau(int x) const {
    std::vector<int> t;
    int o = element_order_[x];
    for (int i = 0; i < fact_.num_primes(); ++i)
        if (o % fact_.prime(i) == 0) t.push_back(i);
    return t;
}

std::vector<int> NilpotentGroup::sylow_center(int i) const {
    const int m = static_cast<int>(atoms_.size());
    std::vector<int> z;
    for (int x : sylow_members_[i]) {
        const int* c = &coords_[static_cast<size_t>(x) * m];
        bool central = true;
        for (int j = 0; j < m && central; ++j) {
            if (atoms_[j].is_cyclic()) continue;
            const auto& zc = atoms_[j].tbl->center;
            central = std::binary_search(zc.begin(), zc.end(), c[j]);
        }
        if (central) z.push_back(x);
    }
    return z;
}

bool NilpotentGroup::sylow_center_cyclic(int i) const {
    std::vector<int> z = sylow_center(i);
    int mx = 1;
    for (int x : z) mx = std::max(mx, element_order_[x]);
    return mx == static_cast<int>(z.size());
}

std::vector<int> NilpotentGroup::hall_members(const std::vector<int>& tau_set) const {
    std::vector<bool> in_tau(fact_.num_primes(), false);
    for (int i : tau_set) in_tau.at(i) = true;
    std::vector<int> out;
    for (int x = 0; x < n_; ++x) {
        int o = element_order_[x];
        for (int i = 0; i < fact_.num_primes(); ++i) {
            if (!in_tau[i]) continue;
            long long p = fact_.prime(i);
            while (o % p == 0) o = static_cast<int>(o / p);
        }
        if (o == 1) out.push_back(x);
    }
    return out;
}

std::vector<long long> NilpotentGroup::coords(int x) const {
    const int m = static_cast<int>(atoms_.size());
    std::vector<long long> c(m);
    for (int i = 0; i < m; ++i) c[i] = coords_[static_cast<size_t>(x) * m + i];
    return c;
}

std::string NilpotentGroup::element_name(int x) const {
    const int m = static_cast<int>(atoms_.size());
    std::string s;
    if (m > 1) s += "(";
    for (int i = 0; i < m; ++i) {
        if (i) s += ",";
        int c = coords_[static_cast<size_t>(x) * m + i];
        if (atoms_[i].is_cyclic())
            s += std::to_string(c);
        else
            s += atoms_[i].tbl->names[c];
    }
    if (m > 1) s += ")";
    return s;
}

int NilpotentGroup::element_from_text(const std::string& text) const {
    const int m = static_cast<int>(atoms_.size());
    std::string body = text;
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : body) {
        if (ch == ',') {
            tokens.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    tokens.push_back(cur);
    if (static_cast<int>(tokens.size()) != m)
        throw DomainError("element needs " + std::to_string(m) + " coordinates, got " +
                          std::to_string(tokens.size()));
    long long out = 0;
    for (int i = 0; i < m; ++i) {
        const std::string& tok = tokens[i];
        long long c = -1;
        if (!atoms_[i].is_cyclic()) {
            int idx = atoms_[i].tbl->name_to_index(tok);
            if (idx >= 0) c = idx;
        }
        if (c < 0) {
            try {
                size_t used = 0;
                c = std::stoll(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw DomainError("unrecognized coordinate '" + tok + "'");
            }
            if (c < 0 || c >= atoms_[i].size())
                throw DomainError("coordinate " + std::to_string(c) + " out of range for " +
                                  atoms_[i].display());
        }
        out += c * strides_[i];
    }
    return static_cast<int>(out);
}

namespace {

// Subgroup closure of `seed` inside a table group; members returned sorted.
std::vector<int> table_closure(const SmallGroup& g, const std::vector<int>& seed) {
    std::vector<bool> in(g.order(), false);
    std::vector<int> members = {g.identity};
    in[g.identity] = true;
    for (int s : seed)
        if (!in[s]) {
            in[s] = true;
            members.push_back(s);
        }
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> snapshot = members;
        for (int a : snapshot)
            for (int b : snapshot) {
                int v = g.mul(a, b);
                if (!in[v]) {
                    in[v] = true;
                    members.push_back(v);
                    changed = true;
                }
            }
    }
    std::sort(members.begin(), members.end());
    return members;
}

// Builds one Sylow p-subgroup by repeatedly adjoining a p-element of the
// normalizer; standard normalizer growth guarantees progress.
std::vector<int> one_sylow(const SmallGroup& g, long long p, int alpha) {
    long long target = checked_pow(p, alpha);
    std::vector<int> h = {g.identity};
    while (static_cast<long long>(h.size()) < target) {
        std::vector<bool> in_h(g.order(), false);
        for (int x : h) in_h[x] = true;
        bool grew = false;
        for (int y = 0; y < g.order() && !grew; ++y) {
            if (in_h[y]) continue;
            bool normalizes = true;
            for (int x : h) {
                int conj = g.mul(g.mul(y, x), g.inverse[y]);
                if (!in_h[conj]) { normalizes = false; break; }
            }
            if (!normalizes) continue;
            int o = g.element_order[y];
            int m = o;
            while (m % p == 0) m = static_cast<int>(m / p);
            int z = y;
            // z := y^m is the p-part of y.
            {
                int acc = g.identity;
                int base = y;
                int k = m;
                while (k > 0) {
                    if (k & 1) acc = g.mul(acc, base);
                    base = g.mul(base, base);
                    k >>= 1;
                }
                z = acc;
            }
            if (z == g.identity || in_h[z]) continue;
            h = table_closure(g, [&] {
                std::vector<int> seed = h;
                seed.push_back(z);
                return seed;
            }());
            grew = true;
        }
        if (!grew) throw StructureError("Sylow construction stalled; table is not a group");
    }
    return h;
}

}  // namespace

NilpotencyCheck check_nilpotent(const SmallGroup& g) {
    Factorization f = factorize(g.order());
    for (int i = 0; i < f.num_primes(); ++i) {
        long long p = f.prime(i);
        long long pa = f.prime_power(i);
        long long count = 0;
        for (int x = 0; x < g.order(); ++x) {
            int o = g.element_order[x];
            while (o % p == 0) o = static_cast<int>(o / p);
            if (o == 1) ++count;
        }
        if (count == pa) continue;
        // More p-elements than one Sylow subgroup holds: produce two distinct
        // conjugate Sylow p-subgroups as the witness.
        NilpotencyCheck nc;
        nc.nilpotent = false;
        nc.prime = p;
        nc.sylow_a = one_sylow(g, p, f.exponent(i));
        std::vector<bool> in_a(g.order(), false);
        for (int x : nc.sylow_a) in_a[x] = true;
        for (int c = 0; c < g.order(); ++c) {
            std::vector<int> conj;
            for (int x : nc.sylow_a) conj.push_back(g.mul(g.mul(c, x), g.inverse[c]));
            std::sort(conj.begin(), conj.end());
            if (conj != nc.sylow_a) {
                nc.sylow_b = conj;
                break;
            }
        }
        return nc;
    }
    return {};
}

}  // namespace pg
