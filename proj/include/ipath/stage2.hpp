#ifndef IPATH_STAGE2_HPP
#define IPATH_STAGE2_HPP

#include <span>
#include <vector>

#include "ipath/interval_graph.hpp"
#include "ipath/rational.hpp"
#include "ipath/stage1.hpp"

namespace ipath {

// U_{ji}: vertices of U# with t_{j-1} < l < t_j and t_{i-1} < r < t_i.
struct Stage2Group {
    int j = 0;
    int i = 0;
    std::vector<VertexId> members; // ids in G#, sigma order
};

struct Stage2Families {
    std::vector<Coord> T;            // sorted, in G# coordinates
    std::vector<Stage2Group> groups; // nonempty U_{ji} with j < i, lexicographic (j, i)
    std::vector<VertexId> diagonal;  // vertices landing in some U_{ii}; expected empty
};

// Weighted interval graph with A independent, no interval inside an
// A-interval, and |B| <= kappa.
struct SpecialGraph {
    IntervalGraph graph;
    std::vector<char> in_a;
    std::vector<VertexId> A; // sigma order
    std::vector<VertexId> B; // sigma order
    Int kappa = 0;
    bool has_v0 = false;
};

// Derives A and B from the flags; kappa defaults to |B|.
SpecialGraph make_special_graph(IntervalGraph graph, std::vector<char> in_a);

// The three defining conditions, with the given kappa.
bool is_special_partition(const IntervalGraph& graph, const std::vector<char>& in_a, Int kappa);

// (k+2) + C(18k+16, 2) * (k+6).
Int kappa_bound(int k);

struct Stage2Result {
    SpecialGraph special;
    std::vector<VertexId> D;           // ids in G-hat, sigma order
    // G-hat vertex -> G# vertex, kNoVertex for clones.
    std::vector<VertexId> origin;
    // G-hat vertex -> index into groups, -1 outside clone groups.
    std::vector<int> group_of;
    struct CloneGroup {
        std::vector<VertexId> clones;  // G-hat ids, staircase (= sigma) order
        std::vector<VertexId> members; // G# ids, sigma order
        std::vector<VertexId> clone_keys; // ids in the lifting universe
    };
    std::vector<CloneGroup> groups;
    // All G# intervals (ids 0..|G#|-1) plus every clone, in one refined
    // coordinate system; every intermediate graph of the rule is an induced
    // subgraph of it.
    std::vector<Interval> universe;
    std::vector<VertexId> universe_id; // G-hat vertex -> universe id
};

// Connected proper induced representation, and I_v inside I_u for u in S
// forces S into N(v).  Test utility.
bool is_weakly_reducible(const IntervalGraph& graph, std::span<const VertexId> S);

// T and the groups U_{ji}, all in G# coordinates.
Stage2Families compute_stage2_families(const Stage1Result& stage1);

Stage2Result apply_rule2(const Stage1Result& stage1, const Stage2Families& families);

} // namespace ipath

#endif
