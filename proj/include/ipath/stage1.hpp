#ifndef IPATH_STAGE1_HPP
#define IPATH_STAGE1_HPP

#include <span>
#include <vector>

#include "ipath/claws.hpp"
#include "ipath/interval_graph.hpp"

namespace ipath {

// One cell U*_{i,x}: free vertices whose right endpoint lies between the
// consecutive points l_{i,x-1} < l_{i,x} of L_i and that cross no point of R.
struct Stage1Cell {
    int i = 0;
    int x = 0;
    std::vector<VertexId> star;                   // sigma order
    std::vector<VertexId> star2;                  // subset not adjacent to earlier cells of i
    std::vector<std::vector<VertexId>> components; // of star2, sigma order
};

struct Stage1Families {
    std::vector<VertexId> D;    // d_0 .. d_{k+1} in sigma order
    std::vector<Coord> L;       // sorted left endpoints of D
    std::vector<Coord> R;       // sorted right endpoints of D
    std::vector<VertexId> U;    // V \ D, sigma order
    std::vector<VertexId> U_star;
    // Li[i-1] = l_{i,0} < ... < l_{i,p_i} for i = 1..k+1.
    std::vector<std::vector<Coord>> Li;
    std::vector<Stage1Cell> cells; // ordered by (i, x)
    std::vector<std::vector<VertexId>> S1;

    int k() const { return static_cast<int>(D.size()) - 2; }
    int p(int i) const { return static_cast<int>(Li[i - 1].size()) - 1; }
};

// The graph G#: every member S of S1 collapsed to one vertex with interval
// span(S) and weight w(S).
struct Stage1Result {
    IntervalGraph g_sharp;
    std::vector<VertexId> D;       // ids in g_sharp, sigma order
    std::vector<VertexId> A;       // replacement vertices, sigma order
    std::vector<VertexId> U_sharp; // the rest, sigma order
    std::vector<char> in_a;        // per g_sharp vertex
    // Per g_sharp vertex, the sigma-ordered vertices of the input graph it
    // stands for; a singleton for vertices kept as they are.
    std::vector<std::vector<VertexId>> members;
    // Per cell (same order as the families), its A-vertices in sigma order.
    std::vector<std::vector<VertexId>> cell_a;

    int k() const { return static_cast<int>(D.size()) - 2; }
};

// Connected proper induced representation, and every interval inside
// span(S) belongs to S.  O(n + |S|^2); test utility.
bool is_reducible(const IntervalGraph& graph, std::span<const VertexId> S);

// Requires a normalized semi-proper graph whose deletion set carries
// dummies; throws MissingDummies otherwise.
Stage1Families compute_stage1_families(const IntervalGraph& graph, const DeletionSet& deletion);

Stage1Result apply_rule1(const IntervalGraph& graph, const Stage1Families& families);

} // namespace ipath

#endif
