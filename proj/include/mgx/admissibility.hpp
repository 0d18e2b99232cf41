#pragma once

#include <cstdint>
#include <vector>

#include "mgx/blowup.hpp"
#include "mgx/common.hpp"
#include "mgx/multigraph.hpp"
#include "mgx/pattern.hpp"

namespace mgx {

// A pattern is admissible for the pair (s, q) when no s-clone blow-up packs
// more than q edges into its s vertices, i.e. the maximal blow-up weight at
// n = s stays within the budget.
inline bool is_admissible(const Pattern& p, int s, std::int64_t q,
                          std::uint64_t budget = 1'000'000'000ULL) {
    if (s < 2) throw input_error("is_admissible: s must be at least 2");
    const BlowupOptimum opt = optimize_blowup(p, s, Objective::sum, OptMode::exact, budget);
    return opt.sum_value <= q;
}

// All vertex subsets of the given size whose internal multiplicity sum
// reaches the bound, in lexicographic order.
inline std::vector<std::vector<int>> find_heavy_sets(const Multigraph& g, int size,
                                                     std::int64_t bound) {
    if (size < 2 || size > g.n()) throw input_error("find_heavy_sets: bad subset size");
    std::vector<std::vector<int>> out;
    std::vector<int> x(size);
    for (int i = 0; i < size; ++i) x[i] = i;
    while (true) {
        if (subset_sum(g, x) >= bound) out.push_back(x);
        int i = size - 1;
        while (i >= 0 && x[i] == g.n() - size + i) --i;
        if (i < 0) break;
        ++x[i];
        for (int j = i + 1; j < size; ++j) x[j] = x[j - 1] + 1;
    }
    return out;
}

}  // namespace mgx
