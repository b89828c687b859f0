#pragma once
// Independent ground truth: exhaustive enumeration of all p-watermelons for
// tiny (p, n). Shares no code with the determinant formulas on purpose.

#include "melonlab/bigint.hpp"
#include "melonlab/melon.hpp"

#include <functional>
#include <map>

namespace melonlab {

struct MelonPath {
    // steps[i][t] in {+1,-1}: step of path i at time t; ordinate of path i at
    // time t is 2i + sum of the first t steps
    std::vector<std::vector<int>> steps;
};

struct MelonStats {
    // joint counts over (height, depth)
    std::map<std::pair<long, long>, BigInt> joint;
    BigInt total = 0;

    std::map<long, BigInt> height_counts() const;
    std::map<long, BigInt> depth_counts() const;
    std::map<long, BigInt> range_counts() const;
};

// Visits every watermelon exactly once, in lexicographic order of the step
// sequence (time-major, path 0 innermost bit, -1 before +1), and returns the
// count. The visitor may be empty. Guard: p * 2n <= 40.
BigInt enumerate(const MelonConfig& cfg,
                 const std::function<void(const MelonPath&)>& visitor = {});

// Exact joint (height, depth) counts over the same enumeration.
MelonStats stats(const MelonConfig& cfg);

} // namespace melonlab
