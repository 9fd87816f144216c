#ifndef IPATH_NORMAL_PATH_HPP
#define IPATH_NORMAL_PATH_HPP

#include <span>
#include <vector>

#include "ipath/interval_graph.hpp"

namespace ipath {

using Path = std::vector<VertexId>;

// Distinct vertices, consecutive ones adjacent.
bool is_path(const IntervalGraph& graph, std::span<const VertexId> path);

// Same check against a raw interval table indexed by vertex id.
bool is_path(std::span<const Interval> intervals, std::span<const VertexId> path);

// Throws InvalidPath when `path` is not a path of the graph.
void check_path(const IntervalGraph& graph, std::span<const VertexId> path);

// The first vertex is sigma-leftmost and every later vertex is the
// sigma-leftmost neighbor of its predecessor among the remaining suffix.
// Throws InvalidPath.
bool is_normal_path(const IntervalGraph& graph, std::span<const VertexId> path);

// Greedy normal path on exactly `vertices`: start at the sigma-leftmost vertex
// and keep moving to the sigma-leftmost unvisited neighbor.  Throws
// NormalizationFailed if the greedy walk gets stuck.  O(p log p).
Path normalize_path(const IntervalGraph& graph, std::span<const VertexId> vertices);

// Same greedy walk over a raw interval table indexed by vertex id; endpoints
// of the listed vertices must be distinct.
Path normalize_path(std::span<const Interval> intervals, std::span<const VertexId> vertices);

} // namespace ipath

#endif
