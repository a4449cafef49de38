#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pg/group.hpp"

namespace pg {

// Named table groups usable in group expressions.  All are p-groups:
//   Q8     quaternion group of order 8
//   D8     dihedral group of order 8
//   M16    modular (semidihedral-adjacent) group of order 16, b a b^-1 = a^5
//   Heis27 Heisenberg group of order 27 (exponent 3)
const std::vector<std::string>& catalog_names();
bool catalog_has(const std::string& name);
std::shared_ptr<const SmallGroup> catalog_group(const std::string& name);

}  // namespace pg
