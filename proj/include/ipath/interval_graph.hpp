#ifndef IPATH_INTERVAL_GRAPH_HPP
#define IPATH_INTERVAL_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ipath/rational.hpp"

namespace ipath {

using VertexId = std::int32_t;
using Coord = std::int64_t;

inline constexpr VertexId kNoVertex = -1;

// Closed interval [left, right] with left < right.
struct Interval {
    Coord left = 0;
    Coord right = 0;

    friend bool operator==(const Interval&, const Interval&) = default;
};

inline bool intervals_intersect(const Interval& a, const Interval& b) {
    return a.left < b.right && b.left < a.right;
}

// Does `outer` contain `inner`?
inline bool interval_contains(const Interval& outer, const Interval& inner) {
    return outer.left <= inner.left && inner.right <= outer.right;
}

// Immutable weighted interval graph.  Vertex v owns intervals()[v]; all 2n
// endpoints are pairwise distinct.  sigma orders vertices by right endpoint.
class IntervalGraph {
public:
    IntervalGraph() = default;

    // Throws DegenerateInterval or DuplicateEndpoint.  Empty weights means
    // unit weights.
    explicit IntervalGraph(std::vector<Interval> intervals, std::vector<Rational> weights = {});

    VertexId size() const { return static_cast<VertexId>(intervals_.size()); }
    bool empty() const { return intervals_.empty(); }

    const Interval& interval(VertexId v) const { return intervals_[v]; }
    Coord left(VertexId v) const { return intervals_[v].left; }
    Coord right(VertexId v) const { return intervals_[v].right; }
    const Rational& weight(VertexId v) const { return weights_[v]; }

    const std::vector<Interval>& intervals() const { return intervals_; }
    const std::vector<Rational>& weights() const { return weights_; }

    // sigma as a permutation and its inverse.
    const std::vector<VertexId>& order() const { return order_; }
    VertexId rank(VertexId v) const { return rank_[v]; }
    bool before(VertexId u, VertexId v) const { return rank_[u] < rank_[v]; }

    bool adjacent(VertexId u, VertexId v) const {
        return u != v && intervals_intersect(intervals_[u], intervals_[v]);
    }

    // I_inner is a subset of I_outer.
    bool contains(VertexId outer, VertexId inner) const {
        return interval_contains(intervals_[outer], intervals_[inner]);
    }

    // Neighbors sorted by sigma rank.
    std::span<const VertexId> neighbors(VertexId v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

    std::size_t edge_count() const { return adjacency_.size() / 2; }

    bool unit_weights() const;
    Rational total_weight() const;
    Rational weight_of(std::span<const VertexId> vertices) const;

private:
    std::vector<Interval> intervals_;
    std::vector<Rational> weights_;
    std::vector<VertexId> order_;
    std::vector<VertexId> rank_;
    std::vector<std::size_t> offsets_;
    std::vector<VertexId> adjacency_;
};

// [min left, max right] over a nonempty set; throws EmptySet.
Interval span(const IntervalGraph& graph, std::span<const VertexId> vertices);

// Order-preserving remap of all endpoints onto 1..2n.
IntervalGraph normalize_endpoints(const IntervalGraph& graph);

// Same rank transform on a raw interval list.
std::vector<Interval> normalize_intervals(const std::vector<Interval>& intervals);

// Semi-proper representation of the same graph: every remaining containment
// I_v in I_u has u and v inside an induced claw.  Output is normalized.
IntervalGraph make_semi_proper(const IntervalGraph& graph);

// Same graph, same vertex ids, new intervals: compares sorted neighbor sets.
bool same_edge_set(const IntervalGraph& a, const IntervalGraph& b);

// Brute-force semi-proper check, O(n^4) in the worst case.  Test utility.
bool is_semi_proper(const IntervalGraph& graph);

// Do {a, b, c, d} induce a claw (any center)?
bool induces_claw(const IntervalGraph& graph, VertexId a, VertexId b, VertexId c, VertexId d);

} // namespace ipath

#endif
