#pragma once

#include <string>
#include <vector>

#include "pg/group.hpp"

namespace pg {

// One factor of a group expression: a prime-power cyclic group or a named
// table group from the catalog.
struct SpecTerm {
    bool cyclic = true;
    long long order = 1;       // factor order; a prime power for cyclic terms
    std::string name;          // catalog name for table terms

    std::string text() const;  // "C8", or the catalog name
};

// A normalized group expression.  Composite cyclic factors are split into
// prime-power factors in place (C12 becomes C4 x C3), so text() output
// reparses to the same spec.
struct GroupSpec {
    std::vector<SpecTerm> terms;

    std::string text() const;  // terms joined with " x "
    long long order() const;
    NilpotentGroup build() const;
};

// Grammar: spec := term (" x " term)*   with whitespace-separated tokens;
//          term := "C"<integer> | catalog name.
// C0 and C1 are rejected.  Malformed or unknown tokens raise ParseError
// carrying the byte offset of the offending token.
GroupSpec parse_group_spec(const std::string& input);

// Cyclic prime-power factors (the abelian route), sorted by (prime, order).
// DomainError if some entry is not a prime power of at least 2.
GroupSpec spec_from_prime_powers(std::vector<long long> prime_powers);

}  // namespace pg
