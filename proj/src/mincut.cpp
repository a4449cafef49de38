#include "pg/mincut.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace pg {

long long edge_connectivity(const PowerGraphView& view, long long cap) {
    const int n = view.group().order();
    if (n > cap)
        throw CapacityError("group order " + std::to_string(n) +
                            " exceeds edge-connectivity cap " + std::to_string(cap));
    if (n == 1) return 0;

    // Stoer-Wagner on unit weights; rows merge as vertices contract.
    std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (view.adjacent(x, y)) w[x][y] = w[y][x] = 1;

    std::vector<int> alive(n);
    for (int i = 0; i < n; ++i) alive[i] = i;
    long long best = std::numeric_limits<long long>::max();

    while (alive.size() > 1) {
        std::vector<long long> weight_to(alive.size(), 0);
        std::vector<bool> added(alive.size(), false);
        int prev = -1, last = -1;
        for (size_t step = 0; step < alive.size(); ++step) {
            int sel = -1;
            for (size_t i = 0; i < alive.size(); ++i)
                if (!added[i] && (sel < 0 || weight_to[i] > weight_to[sel]))
                    sel = static_cast<int>(i);
            added[sel] = true;
            prev = last;
            last = sel;
            if (step + 1 == alive.size()) break;
            for (size_t i = 0; i < alive.size(); ++i)
                if (!added[i]) weight_to[i] += w[alive[sel]][alive[i]];
        }
        best = std::min(best, weight_to[last]);
        // Merge `last` into `prev`.
        int u = alive[prev], v = alive[last];
        for (size_t i = 0; i < alive.size(); ++i) {
            int t = alive[i];
            if (t == u || t == v) continue;
            w[u][t] += w[v][t];
            w[t][u] = w[u][t];
        }
        alive.erase(alive.begin() + last);
    }
    return best;
}

}  // namespace pg
