#ifndef IPATH_ORACLE_HPP
#define IPATH_ORACLE_HPP

#include "ipath/interval_graph.hpp"
#include "ipath/normal_path.hpp"
#include "ipath/rational.hpp"

namespace ipath {

inline constexpr VertexId kOracleLimit = 18;

struct BruteResult {
    Rational weight{0};
    Path path;
};

// Exhaustive search over vertex subsets that admit a spanning path.  Throws
// TooLarge above kOracleLimit vertices.
BruteResult brute_max_weight_path(const IntervalGraph& graph);

// Vertex count of a longest path, ignoring weights.
BruteResult brute_longest_path(const IntervalGraph& graph);

} // namespace ipath

#endif
