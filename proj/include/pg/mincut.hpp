#pragma once

#include "pg/powergraph.hpp"

namespace pg {

inline constexpr long long kDefaultMinCutCap = 200;

// Global minimum edge cut of the power graph (Stoer-Wagner, cubic in the
// order), which for these graphs equals the minimum degree.  Validation-only,
// hence the small default cap.
long long edge_connectivity(const PowerGraphView& view, long long cap = kDefaultMinCutCap);

}  // namespace pg
