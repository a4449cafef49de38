#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pg/arith.hpp"
#include "pg/errors.hpp"

namespace pg {

// Raw multiplication table, row-major: mul[a * order + b] = a*b.
struct CayleyTable {
    int order = 0;
    std::vector<int> mul;
    std::string name;
};

// A validated finite group given by its table.  Construction checks closure,
// associativity, identity and inverses exhaustively; orders are capped so the
// cubic associativity scan stays cheap.
struct SmallGroup {
    static constexpr int kMaxOrder = 512;

    CayleyTable table;
    int identity = 0;
    bool abelian = false;
    std::vector<int> inverse;
    std::vector<int> element_order;
    std::vector<int> center;               // sorted element indices of Z(T)
    std::vector<std::string> names;        // canonical element names, index-aligned

    explicit SmallGroup(CayleyTable t, std::vector<std::string> element_names = {});

    int mul(int a, int b) const { return table.mul[a * table.order + b]; }
    int order() const { return table.order; }
    int name_to_index(const std::string& s) const;  // -1 if unknown
};

// One direct factor of a group presentation: a cyclic group of prime-power
// order, or a validated table group (required to be a p-group).
struct Atom {
    long long cyclic_order = 0;                 // > 0 iff cyclic
    std::shared_ptr<const SmallGroup> tbl;      // non-null iff table atom

    bool is_cyclic() const { return cyclic_order > 0; }
    long long size() const { return is_cyclic() ? cyclic_order : tbl->order(); }
    long long prime() const;                    // the unique prime dividing size()
    std::string display() const;                // "C8" or the table's name
};

// Decomposition of x into its pairwise-commuting Sylow components.
struct SylowDecomposition {
    std::vector<int> components;  // index i -> the p_i-part of x
    std::vector<int> tau;         // ascending prime indices with nonidentity part
};

// A finite nilpotent group presented as a direct product of atoms.  Elements
// are integers 0..order-1 in mixed-radix encoding, first atom most
// significant, so index order equals lexicographic order on coordinate
// tuples.  Instances are immutable after construction; all queries are
// read-only and safe to share across threads.
class NilpotentGroup {
public:
    // Abelian group from canonicalized prime-power cyclic orders.
    static NilpotentGroup from_abelian(std::vector<long long> prime_powers);
    // Arbitrary table; validates the table and rejects non-nilpotent groups.
    static NilpotentGroup from_table(CayleyTable t, std::vector<std::string> names = {});
    // Product of prime-power atoms (the group-expression path).
    static NilpotentGroup from_atoms(std::vector<Atom> atoms);

    int order() const { return n_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const;
    int inverse(int a) const;
    int power(int a, long long k) const;
    int element_order(int a) const { return element_order_[a]; }

    bool is_abelian() const { return abelian_; }
    bool is_cyclic() const { return max_element_order_ == n_; }

    const Factorization& order_factorization() const { return fact_; }
    int num_primes() const { return fact_.num_primes(); }
    const std::vector<Atom>& atoms() const { return atoms_; }

    // Members of the Sylow p_i-subgroup, ascending.
    const std::vector<int>& sylow_members(int i) const { return sylow_members_[i]; }
    bool sylow_cyclic(int i) const { return sylow_cyclic_[i]; }
    SylowDecomposition sylow_decompose(int x) const;
    // Prime indices i with nonidentity p_i-part of x (equivalently p_i | o(x)).
    std::vector<int> tau(int x) const;

    // Members of the center of the Sylow p_i-subgroup, ascending.
    std::vector<int> sylow_center(int i) const;
    bool sylow_center_cyclic(int i) const;

    // Members of the Hall-type subgroup prod_{i in tau} P_i, ascending.
    std::vector<int> hall_members(const std::vector<int>& tau) const;

    // Coordinates and display.
    std::vector<long long> coords(int x) const;
    std::string element_name(int x) const;
    // Parses comma-separated per-atom tokens: integers for cyclic atoms,
    // element names (or integers) for table atoms.
    int element_from_text(const std::string& text) const;

private:
    NilpotentGroup() = default;
    void finish_construction();

    std::vector<Atom> atoms_;
    int n_ = 1;
    int identity_ = 0;
    bool abelian_ = true;
    int max_element_order_ = 1;
    Factorization fact_;
    std::vector<long long> strides_;
    std::vector<int> coords_;         // n_ * atoms_.size(), row per element
    std::vector<int> element_order_;
    std::vector<std::vector<int>> sylow_members_;
    std::vector<bool> sylow_cyclic_;
};

// Outcome of the nilpotency test on a table group.  When the group is not
// nilpotent, `prime` names a prime with more than one Sylow p-subgroup and
// the two witness member-sets are distinct conjugate Sylow p-subgroups.
struct NilpotencyCheck {
    bool nilpotent = true;
    long long prime = 0;
    std::vector<int> sylow_a;
    std::vector<int> sylow_b;
};

NilpotencyCheck check_nilpotent(const SmallGroup& g);

}  // namespace pg
